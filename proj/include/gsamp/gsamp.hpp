#pragma once

// Umbrella header for the gsamp graph sampling library.

#include "gsamp/edge_list.hpp"
#include "gsamp/edge_samplers.hpp"
#include "gsamp/errors.hpp"
#include "gsamp/exploration_samplers.hpp"
#include "gsamp/format.hpp"
#include "gsamp/generate.hpp"
#include "gsamp/graph.hpp"
#include "gsamp/node_samplers.hpp"
#include "gsamp/pagerank.hpp"
#include "gsamp/random.hpp"
#include "gsamp/sample.hpp"
#include "gsamp/sampler_spec.hpp"
#include "gsamp/statistics.hpp"
#include "gsamp/traverse.hpp"
