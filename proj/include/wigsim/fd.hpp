#pragma once

#include <array>
#include <cstddef>
#include <span>

namespace wigsim::fd {

// Second-order central stencils for d^order/dx^order, order 1..6.
// radius(order) cells on each side are required.
constexpr int radius(int order) { return (order + 1) / 2; }

// Applies the stencil at index i of a strided sequence.
double central(std::span<const double> v, std::size_t i, std::size_t stride,
               int order, double h);

}  // namespace wigsim::fd
