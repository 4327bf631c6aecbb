#ifndef HFACTOR_HFACTOR_HPP
#define HFACTOR_HFACTOR_HPP

#include "analysis.hpp"
#include "bounds.hpp"
#include "constructions.hpp"
#include "designs.hpp"
#include "errors.hpp"
#include "factor_search.hpp"
#include "graph.hpp"
#include "greedy.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "shape.hpp"
#include "tournament.hpp"

#endif
