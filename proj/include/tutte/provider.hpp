#ifndef TUTTE_PROVIDER_HPP
#define TUTTE_PROVIDER_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tutte/measures.hpp"
#include "tutte/plane_graph.hpp"

namespace tutte {

class ProviderExhausted : public Error {
public:
    using Error::Error;
};

/// Source of single-edge C-Tutte paths for circuit graphs: a u-v path through
/// the outer edge e meeting the budget
///   3 b(P) <= (n - 6) + 3tau(vu) + 3tau(ue) + 3tau(ev) - 3beta(P).
class BasePathProvider {
public:
    virtual ~BasePathProvider() = default;
    virtual Path find(const PlaneGraph& g, VertexId u, VertexId v, const Edge& e, Mutation m) const = 0;
};

/// Depth-first search over u-v paths through e.
///
/// Once the walk reaches w, every component of G - V(prefix) other than the
/// one holding v can no longer change: it is a final bridge. Such components
/// are checked against the C-Tutte rules and charged against the budget
/// (3 per bridge, plus |B| - 3 when it has two attachments), which prunes
/// most of the tree.
class ExhaustiveProvider final : public BasePathProvider {
public:
    Path find(const PlaneGraph& g, VertexId u, VertexId v, const Edge& e, Mutation m) const override {
        const OuterCycle c = OuterCycle::of(g);
        const BoundInstance inst{u, v, e, {}, {}};
        Thirds base = Thirds::from_thirds(static_cast<long>(g.num_vertices()) - 6);
        base += tau(g, c, {v, u}, m);
        base += tau(g, c, {u, e}, m);
        base += tau(g, c, {e, v}, m);
        const auto accept = [&](const Path& p) {
            if (!is_c_tutte(g, Subgraph::of_path(p))) return false;
            return bound_report(g, BoundKind::edge, inst, p, m).satisfied;
        };
        std::optional<Path> found;
        // a spanning path first, on a short leash; then anything within budget
        if (base.value() >= 0) {
            Search spanning(g, c, m, 0, spanning_node_limit);
            found = spanning.run(u, v, e, accept);
        }
        if (!found) {
            Search s(g, c, m, base.value());
            found = s.run(u, v, e, accept);
        }
        if (!found)
            throw ProviderExhausted("no C-Tutte path between " + std::to_string(u) + " and " + std::to_string(v) +
                                    " through " + to_string(e) + " meets the budget");
        return *found;
    }

private:
    using Mask = std::uint64_t;
    static constexpr long spanning_node_limit = 20000;

    class Search {
    public:
        Search(const PlaneGraph& g, const OuterCycle& c, Mutation m, long budget, long node_limit = 0)
            : budget_(budget), node_limit_(node_limit), use_beta_(m != Mutation::drop_beta) {
            ids_ = g.vertices();
            if (ids_.size() > 64) throw PreconditionError("exhaustive provider supports at most 64 vertices");
            for (std::size_t i = 0; i < ids_.size(); ++i) index_[ids_[i]] = static_cast<int>(i);
            adj_.assign(ids_.size(), 0);
            for (std::size_t i = 0; i < ids_.size(); ++i)
                for (VertexId w : g.neighbors(ids_[i])) adj_[i] |= bit(index_.at(w));
            for (VertexId w : c.vertices()) on_c_ |= bit(index_.at(w));
            all_ = ids_.size() == 64 ? ~Mask{0} : (bit(static_cast<int>(ids_.size())) - 1);
        }

        template <typename Accept>
        std::optional<Path> run(VertexId u, VertexId v, const Edge& e, Accept&& accept) {
            target_ = index_.at(v);
            ea_ = index_.at(e.a);
            eb_ = index_.at(e.b);
            std::vector<int> path{index_.at(u)};
            std::optional<Path> result;
            dfs(path, bit(path[0]), false, [&](const std::vector<int>& p) {
                Path out;
                for (int i : p) out.push_back(ids_[i]);
                if (!accept(out)) return false;
                result = std::move(out);
                return true;
            });
            return result;
        }

    private:
        static Mask bit(int i) { return Mask{1} << i; }

        Mask component(Mask from, Mask allowed) const {
            Mask comp = from;
            Mask frontier = from;
            while (frontier) {
                Mask next = 0;
                for (Mask f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
                next &= allowed & ~comp;
                comp |= next;
                frontier = next;
            }
            return comp;
        }

        /// Cost of the closed components of `rest` (all except the one holding
        /// v), or -1 when one of them breaks the C-Tutte rules.
        long closed_cost(Mask path_mask, Mask rest, Mask& open) const {
            long cost = 0;
            open = 0;
            while (rest) {
                const Mask comp = component(rest & (~rest + 1), rest);
                rest &= ~comp;
                if (comp & bit(target_)) {
                    open = comp;
                    continue;
                }
                Mask nb = 0;
                for (Mask f = comp; f; f &= f - 1) nb |= adj_[std::countr_zero(f)];
                const int att = std::popcount(nb & path_mask);
                if (att > 3) return -1;
                if ((comp & on_c_) && att > 2) return -1;
                cost += 3;
                if (att == 2 && use_beta_) cost += std::popcount(comp) - 1;
            }
            return cost;
        }

        template <typename Emit>
        bool dfs(std::vector<int>& path, Mask path_mask, bool e_used, Emit&& emit) {
            if (node_limit_ && ++nodes_ > node_limit_) return false;
            const int w = path.back();
            if (w == target_) {
                if (!e_used) return false;
                Mask open = 0;
                const long cost = closed_cost(path_mask, all_ & ~path_mask, open);
                if (cost < 0 || cost > budget_) return false;
                return emit(path);
            }
            Mask open = 0;
            const long cost = closed_cost(path_mask, all_ & ~path_mask, open);
            if (cost < 0 || cost > budget_) return false;
            if (!open) return false;
            Mask candidates = adj_[w] & open;
            if (!e_used) {
                const Mask reach = open | bit(w);
                if (!(reach & bit(ea_)) || !(reach & bit(eb_))) return false;
                if (w == ea_ || w == eb_) candidates &= bit(w == ea_ ? eb_ : ea_);
            }
            std::vector<std::pair<int, int>> order;
            for (Mask f = candidates; f; f &= f - 1) {
                const int x = std::countr_zero(f);
                order.emplace_back(std::popcount(adj_[x] & open), x);
            }
            std::sort(order.begin(), order.end());
            for (auto [_, x] : order) {
                const bool uses_e = (w == ea_ && x == eb_) || (w == eb_ && x == ea_);
                path.push_back(x);
                if (dfs(path, path_mask | bit(x), e_used || uses_e, emit)) return true;
                path.pop_back();
            }
            return false;
        }

        std::vector<VertexId> ids_;
        std::map<VertexId, int> index_;
        std::vector<Mask> adj_;
        Mask on_c_ = 0;
        Mask all_ = 0;
        long budget_ = 0;
        long node_limit_ = 0;  ///< 0 for none
        long nodes_ = 0;
        bool use_beta_ = true;
        int target_ = 0;
        int ea_ = 0;
        int eb_ = 0;
    };
};

}  // namespace tutte

#endif  // TUTTE_PROVIDER_HPP
