#pragma once

#include "mincut/baselines.hpp"
#include "mincut/generate.hpp"
#include "mincut/graph.hpp"
#include "mincut/path_aggregate.hpp"
#include "mincut/respect_cuts.hpp"
#include "mincut/rng.hpp"
#include "mincut/spanning_tree.hpp"
#include "mincut/tree_packing.hpp"
#include "mincut/tree_sampler.hpp"
