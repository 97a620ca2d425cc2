#pragma once

#include <cstddef>
#include <vector>

namespace fluctua {

// Indices i (1-based) with x_1 + ... + x_i < 0, listed in decreasing order.
std::vector<std::size_t> negative_partial_sum_indices(
    const std::vector<double>& x);

// Rearrangement sending a sequence with k negative partial sums to one
// whose partial-sum path attains its first minimum at place k: the entries
// at the negative-sum indices, taken in decreasing index order, followed by
// the remaining entries in their original order.
std::vector<double> sparre_transform(const std::vector<double>& x);

// Earliest index attaining min over the path 0, y_1, y_1+y_2, ...; the
// leading 0 participates, so an all-ascending path returns 0.
std::size_t first_min_place(const std::vector<double>& y);

// Exact elementwise inverse of sparre_transform.  Entries are moved, never
// recomputed, so roundtrips are bit-identical.
std::vector<double> sparre_inverse(const std::vector<double>& y);

}  // namespace fluctua
