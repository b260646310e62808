#pragma once

#include "mstci/bounds.hpp"
#include "mstci/canonical.hpp"
#include "mstci/error.hpp"
#include "mstci/generate.hpp"
#include "mstci/graph.hpp"
#include "mstci/graph6.hpp"
#include "mstci/parallel.hpp"
#include "mstci/rational.hpp"
#include "mstci/scan.hpp"
#include "mstci/solver.hpp"
#include "mstci/spanning_tree.hpp"
#include "mstci/tree_cycles.hpp"
#include "mstci/verify.hpp"
