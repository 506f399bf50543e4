#ifndef CTM_POLY_MATRIX_HPP
#define CTM_POLY_MATRIX_HPP

#include <utility>
#include <vector>

#include "ctm/poly.hpp"

namespace ctm {

/// Row-major matrix of polynomials over one shared variable set.
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, const std::vector<std::string>& vars);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<std::string>& vars() const { return vars_; }

    const Poly& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, Poly p);

    bool is_symmetric() const;

private:
    std::size_t rows_, cols_;
    std::vector<std::string> vars_;
    std::vector<Poly> entries_;
};

/// Exact determinant by cofactor expansion (minors memoized on column
/// subsets). The pipeline only ever needs sizes up to 6; larger inputs work
/// but are not tuned.
Poly poly_det(const PolyMatrix& m);

/// Sylvester resultant of p and q with respect to `var`; the result is a
/// polynomial in the remaining variables. Vanishes iff p and q share a root
/// over the closure for generic values of the other variables.
Poly resultant(const Poly& p, const Poly& q, const std::string& var);

/// gcd of two univariate polynomials (inputs may be stored over a larger
/// variable set but must involve only `var`); monic output, gcd(0,0) = 0.
Poly univariate_gcd(const Poly& a, const Poly& b, const std::string& var);

/// Squarefree decomposition b = g^2 * r with r squarefree, for a nonzero
/// binary form b. b is a perfect square up to scalar iff deg r = 0.
std::pair<Poly, Poly> square_part(const Poly& b);

/// gcd of two binary forms over the same two-variable support; monic-ish
/// (normalized leading coefficient), constant 1 when coprime.
Poly binary_form_gcd(const Poly& a, const Poly& b);

/// Rational linear factors of a binary form: roots (s:t) in P^1(Q) with
/// multiplicities, plus the cofactor that has no rational roots.
struct BinaryFormRoots {
    std::vector<std::pair<std::vector<Rat>, int>> roots;
    Poly cofactor;
};
BinaryFormRoots binary_form_rational_roots(const Poly& b);

} // namespace ctm

#endif
