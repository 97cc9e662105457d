#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace optlearn::par {

// Process-wide worker count used by parallel maps. Results never depend on
// it: maps write disjoint slots and every reduction runs over materialized
// arrays in a fixed pairwise order.
void set_threads(int n);
int threads();

// Invokes body(begin, end) on static contiguous slabs covering [0, n).
// Runs inline when the range is small or a single worker is configured.
void for_range(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

// Fixed-tree pairwise sum; independent of worker count by construction.
double pairwise_sum(std::span<const double> xs);

double sup_norm(std::span<const double> xs);

}  // namespace optlearn::par
