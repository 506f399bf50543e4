#ifndef CTM_CONIC_BUNDLE_HPP
#define CTM_CONIC_BUNDLE_HPP

#include <array>
#include <random>
#include <string>
#include <vector>

#include "ctm/poly_matrix.hpp"
#include "ctm/series.hpp"
#include "ctm/singularity.hpp"

namespace ctm {

/// Blocks of a cubic through the line x2 = x3 = x4 = 0:
///   F = l1 x0^2 + 2 l2 x0 x1 + l3 x1^2 + 2 q1 x0 + 2 q2 x1 + f
/// with l_i, q_j, f homogeneous in x2, x3, x4 of degrees 1, 2, 3.
struct LineDecomposition {
    Poly l1, l2, l3; // linear
    Poly q1, q2;     // quadratic
    Poly f;          // cubic
};

LineDecomposition decompose_along_line(const Poly& cubic);

/// Rebuild the cubic from its blocks (exact round trip).
Poly reassemble(const LineDecomposition& dec);

struct NonSpecialVerdict {
    bool q_smooth = false;        // the conic Q has a rank-3 Gram matrix
    bool q_misses_sing_d = false; // Q vanishes at no located singular point of D
    std::vector<Point> sing_d;    // located singular points of the quintic
};

struct ConicBundleData {
    LineDecomposition dec;
    PolyMatrix a; // 3x3 symmetric, det = D
    PolyMatrix b; // 2x2 symmetric, det = Q
    Poly d;       // discriminant quintic
    Poly q;       // companion conic
    NonSpecialVerdict nonspecial;
};

/// Build A and B, their determinants, and the non-special-line verdict.
/// Extra candidate points are forwarded to the singular-point search on D.
ConicBundleData discriminant_pair(const LineDecomposition& dec,
                                  const std::vector<Point>& d_candidates = {});

struct TangencyCertificate {
    bool tangent = false;
    Poly resultant_form;  // degree-10 binary elimination form of (D, Q)
    Poly sqrt_form;       // g with resultant_form = g^2 * squarefree_part
    Poly squarefree_part; // degree 0 iff tangent
    int attempts = 0;     // coordinate changes consumed
};

/// Certify that D and Q meet everywhere with even multiplicity: eliminate
/// one variable after a (seeded) random change and test the degree-10
/// binary resultant for perfect squareness.
TangencyCertificate tangency_certificate(const ConicBundleData& data, std::mt19937_64& rng,
                                         int max_retries = 20);

struct LocalNormalFormResult {
    std::vector<std::string> chart_vars;
    std::array<TruncSeries, 3> diag; // entries of M^T A M
    TruncSeries c;                   // (3,3) entry: local equation of D up to a unit
    TruncSeries sqrt_q;              // branch of sqrt(q) used, det(M) = 1/sqrt(q)
    bool offdiag_zero = false;       // M^T A M is diagonal through the order
    bool hyperbolic_pair = false;    // d1 * d2 == 1 through the order
    bool det_identity = false;       // det(M)^2 det(A) == d1 d2 d3
    bool c_matches_d = false;        // c * q == D in the chart through the order
    bool swapped_frame = false;      // roles of x0 and x1 exchanged
};

/// Conjugate A near a singular point pbar of D (with q(pbar) != 0) into
/// diag(u, 1/u, c) with det(M) = 1/sqrt(q); c is the local equation of D.
LocalNormalFormResult local_normal_form(const ConicBundleData& data, const Point& pbar,
                                        int order);

/// Exhaustive singular locus of a plane curve over the closure, certified by
/// resultant elimination and rational-root analysis. `certified` is false
/// when a non-rational elimination factor prevents the analysis; `points`
/// is meaningful only when certified.
struct PlaneCurveSingularities {
    bool certified = false;
    std::vector<Point> points;
    std::string detail;
};

PlaneCurveSingularities certified_plane_curve_singularities(const Poly& curve);

} // namespace ctm

#endif
