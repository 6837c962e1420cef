#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <string>
#include <vector>

#include "cellsheaf/errors.hpp"

namespace cellsheaf {

// Arbitrary-precision rational scalar. GMP keeps values canonical (reduced,
// positive denominator) through arithmetic; never construct one from a raw
// "p/q" string, use rat_from_string which canonicalizes.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;

using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatRowVector = Eigen::Matrix<Rat, 1, Eigen::Dynamic>;
using Index = Eigen::Index;

/// Parses "p", "p/q" or "-p/q" into a canonical rational.
Rat rat_from_string(const std::string& s);

/// Formats as "p/q", or "p" when the denominator is one.
std::string rat_to_string(const Rat& q);

bool matrix_equal(const RatMatrix& a, const RatMatrix& b);
bool is_zero_matrix(const RatMatrix& m);

struct RrefResult {
  RatMatrix reduced;
  std::vector<Index> pivot_cols;
  Index rank = 0;
};

/// Unique reduced row echelon form over the rationals.
RrefResult rref(RatMatrix m);

Index rank(const RatMatrix& m);

/// Columns form a basis of the right null space; count = cols - rank.
RatMatrix kernel_basis(const RatMatrix& m);

/// Solves basis * X = targets column by column; throws NotInSpan if some
/// target column is outside the column span of basis. Free coordinates
/// (when basis is column-rank deficient) are set to zero.
RatMatrix solve_in_span(const RatMatrix& basis, const RatMatrix& targets);

/// p-th compound matrix: rows and columns indexed by the p-element subsets of
/// the row/column indices of a, both in lexicographic order; each entry is the
/// corresponding p x p minor. compound_matrix(a, 0) is the 1 x 1 identity.
RatMatrix compound_matrix(const RatMatrix& a, Index p);

Rat determinant(RatMatrix m);

/// Sign of the determinant of a square matrix: -1, 0 or +1.
int sign_det(const RatMatrix& m);

/// Canonical basis of the column span: the nonzero part of the column-wise
/// reduced echelon form, one column per rank.
RatMatrix column_rref(const RatMatrix& m);

/// All p-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<Index>> index_subsets(Index n, Index p);

Index binomial(Index n, Index p);

}  // namespace cellsheaf
