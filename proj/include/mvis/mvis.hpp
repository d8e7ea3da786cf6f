#pragma once

#include "mvis/bits.hpp"
#include "mvis/edge_list.hpp"
#include "mvis/error.hpp"
#include "mvis/families.hpp"
#include "mvis/graph.hpp"
#include "mvis/oracles.hpp"
#include "mvis/report.hpp"
#include "mvis/solver.hpp"
#include "mvis/verify.hpp"
#include "mvis/vertex_set.hpp"
#include "mvis/visibility.hpp"
