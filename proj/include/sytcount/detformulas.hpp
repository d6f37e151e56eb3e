#pragma once

// Closed-form and determinant counts for straight and skew tableaux, and the
// nested-simplex volume J_lambda(t_1..t_d) in three forms: the closed
// determinant, the skew determinant, and the column-by-column integration
// that produces the closed form.

#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "sytcount/exact.hpp"
#include "sytcount/polyint.hpp"
#include "sytcount/shapes.hpp"

namespace sytcount {

using PolyMatrix = Matrix<MPoly>;

/// Raised when a count that must be an exact integer is not.
class IntegralityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Converts an exact rational known to be integral; throws IntegralityError otherwise.
BigInt require_integer(const BigRat& v, const std::string& what);

/// Exact determinant of a polynomial matrix (cofactor expansion with subset memo).
MPoly det_poly(const PolyMatrix& m);

/// Evaluates every entry at the given assignment.
RatMatrix evaluate(const PolyMatrix& m, const std::map<std::string, BigRat>& at);

/// n! prod_{i<j}(l_i - l_j - i + j) / prod_i (l_i + d - i)!
BigInt frobenius_young(const Partition& p);

/// The d x d matrix (1/(l_i - mu_j - i + j)!) with 1/m! = 0 for m < 0.
RatMatrix aitken_matrix(const SkewShape& s);
BigInt aitken_count(const SkewShape& s);

/// Entry (i,j) = (l_i+d-i)_{d-j} t_i^{l_i+j-i} / (l_i+d-i)!, or 0 when the exponent is negative.
/// Variables t1..td.
PolyMatrix jmatrix_closed(const Partition& p);

/// det(jmatrix_closed(p)) at t; requires 0 < t_1 <= ... <= t_d <= 1.
BigRat jvolume(const Partition& p, std::span<const BigRat> t);

/// Entry (i,j) = (j)_{i-1} y_i^{j-i+1} / j!, or 0 when the exponent is negative.
/// Variables y1..yd. Its determinant is the volume of {0 < x_1 < ... < x_d, x_i < y_i}.
PolyMatrix fd_closed(int d);

/// J_lambda(t1..td) obtained by integrating the cells column by column
/// (columns 2..l_1, bottom row upward) starting from fd_closed(d).
///
/// Each row of the working matrix depends on a single variable. Integrating
/// row i from the cell above to the next cell (or t_i) uses an antiderivative
/// whose constant is fixed so it equals row i-1; the lower-limit term then
/// duplicates row i-1 and drops out of the determinant. The constant is
/// checked to be independent of the variable, and std::logic_error is thrown
/// otherwise.
MPoly jvolume_by_integration(const Partition& p);

/// Entry (i,j) = (l_i+d-i)_{d+mu_j-j} t_i^{l_i-mu_j+j-i} / (l_i+d-i)!, zero for negative exponents.
PolyMatrix jmatrix_skew(const SkewShape& s);
BigRat jvolume_skew(const SkewShape& s, std::span<const BigRat> t);

/// n! * J(1,...,1), checked integral.
BigInt count_via_volume(const Partition& p);
BigInt count_via_volume(const SkewShape& s);

/// (det((x_i)_{d-j}), prod_{i<j}(x_i - x_j)) for strictly decreasing x_1 > ... > x_d >= 0.
std::pair<BigInt, BigInt> vandermonde_check(std::span<const long> xs);

}  // namespace sytcount
