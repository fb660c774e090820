#pragma once

#include "hec/analysis.hpp"
#include "hec/centrality.hpp"
#include "hec/hypergraph.hpp"
#include "hec/output.hpp"
#include "hec/solver.hpp"
#include "hec/tensor.hpp"
#include "hec/version.hpp"
