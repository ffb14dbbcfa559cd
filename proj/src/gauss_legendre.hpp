#pragma once

#include <vector>

namespace cornerlight::detail {

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
// Newton iteration on the Legendre recurrence.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace cornerlight::detail
