#pragma once

// Umbrella header for the bouquet_kit library.

#include "bouquet_kit/betti.hpp"
#include "bouquet_kit/bouquets.hpp"
#include "bouquet_kit/caps.hpp"
#include "bouquet_kit/covers.hpp"
#include "bouquet_kit/edge_ideal.hpp"
#include "bouquet_kit/errors.hpp"
#include "bouquet_kit/exact_rank.hpp"
#include "bouquet_kit/hypergraph.hpp"
#include "bouquet_kit/io.hpp"
#include "bouquet_kit/random_gen.hpp"
#include "bouquet_kit/report.hpp"
#include "bouquet_kit/simplicial.hpp"
#include "bouquet_kit/vertex_set.hpp"
