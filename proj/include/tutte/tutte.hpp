#ifndef TUTTE_TUTTE_HPP
#define TUTTE_TUTTE_HPP

#include "tutte/thirds.hpp"
#include "tutte/plane_graph.hpp"
#include "tutte/connectivity.hpp"
#include "tutte/measures.hpp"
#include "tutte/provider.hpp"
#include "tutte/engine.hpp"
#include "tutte/generators.hpp"
#include "tutte/oracle.hpp"
#include "tutte/stress.hpp"

#endif  // TUTTE_TUTTE_HPP
