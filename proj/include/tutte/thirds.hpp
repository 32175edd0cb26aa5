#ifndef TUTTE_THIRDS_HPP
#define TUTTE_THIRDS_HPP

#include <compare>
#include <cstdint>
#include <ostream>

namespace tutte {

/// Exact rational quantity k/3 stored as the integer k.
///
/// Every bridge-count bound in this library is an inequality between
/// multiples of 1/3, so all of them are evaluated on this type and never on
/// floating point.
class Thirds {
public:
    constexpr Thirds() = default;

    static constexpr Thirds from_thirds(std::int64_t k) { return Thirds(k); }
    static constexpr Thirds whole(std::int64_t n) { return Thirds(3 * n); }

    constexpr std::int64_t value() const { return k_; }

    constexpr Thirds operator+(Thirds o) const { return Thirds(k_ + o.k_); }
    constexpr Thirds operator-(Thirds o) const { return Thirds(k_ - o.k_); }
    constexpr Thirds operator-() const { return Thirds(-k_); }
    constexpr Thirds& operator+=(Thirds o) { k_ += o.k_; return *this; }
    constexpr Thirds& operator-=(Thirds o) { k_ -= o.k_; return *this; }

    constexpr auto operator<=>(const Thirds&) const = default;

private:
    constexpr explicit Thirds(std::int64_t k) : k_(k) {}
    std::int64_t k_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Thirds t) {
    return os << t.value() << "/3";
}

}  // namespace tutte

#endif  // TUTTE_THIRDS_HPP
