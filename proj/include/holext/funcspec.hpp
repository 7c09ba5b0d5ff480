#pragma once

#include <string_view>

#include "holext/boundary.hpp"

namespace holext {

/// "1.5", "-2i", "0.3-0.1i", "i", "1e-3+2e-1i".
cplx parse_complex(std::string_view text);

/// Comma-separated complex coordinates, e.g. "-0.2+0.1i,0". A nonzero `dim` is enforced.
CPoint parse_point(std::string_view text, std::size_t dim = 0);

/// Function specs:
///   counterexample | globevnik:K | @path (monomial text file) | polynomial expression.
/// Expressions are sums of products of scalars ("3", "2i", "(1-2i)"), zj, zj^p, conj(zj),
/// conj-zj and |zj|^2, e.g. "2*z1^2+z1*z2+3". The dimension is max(dim, largest index used).
BoundaryFunction parse_function(std::string_view spec, std::size_t dim = 2);

}  // namespace holext
