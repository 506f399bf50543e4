#ifndef CTM_LINALG_HPP
#define CTM_LINALG_HPP

#include <optional>
#include <vector>

#include "ctm/rat.hpp"

namespace ctm {

using QVec = std::vector<Rat>;
using QMatrix = std::vector<QVec>; // row major

std::size_t matrix_rank(QMatrix m);

/// Kernel basis of an n x n (or rectangular) matrix, exact.
std::vector<QVec> kernel_basis(QMatrix m);

/// Solve m * x = rhs exactly. Returns nullopt when inconsistent; throws
/// ArgumentError when the solution is not unique.
std::optional<QVec> solve_unique(QMatrix m, QVec rhs);

/// Inverse of a square nonsingular matrix; nullopt when singular.
std::optional<QMatrix> matrix_inverse(const QMatrix& m);

Rat matrix_det(QMatrix m);

/// Symmetric Gram matrix utilities.
struct LdlResult {
    bool positive_definite = false;
    QVec pivots;    // diagonal d_i
    QMatrix upper;  // unit upper-triangular U with G = U^T diag(d) U
};

/// LDL^T-style decomposition of a symmetric positive definite matrix without
/// row pivoting; positive_definite is false when a non-positive pivot shows up.
LdlResult ldlt(const QMatrix& g);

} // namespace ctm

#endif
