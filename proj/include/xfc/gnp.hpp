#pragma once

#include <cstdint>

#include "xfc/graph.hpp"

namespace xfc {

/// Erdős–Rényi G(n,p) sampler configuration. Vertices are 1..n.
struct GnpConfig {
    int n = 1;
    double p = 0.5;
    std::uint64_t seed = 0;
};

/// Each unordered pair {i,j}, i<j in lexicographic order, becomes an edge
/// independently with probability p. Pair k uses counter k of the seeded
/// generator, so the sample is reproducible and independent of any
/// parallel schedule.
Graph sample_gnp(const GnpConfig& cfg);

}  // namespace xfc
