#ifndef CTM_SINGULARITY_HPP
#define CTM_SINGULARITY_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ctm/linalg.hpp"
#include "ctm/poly.hpp"
#include "ctm/series.hpp"

namespace ctm {

/// Projective point with rational coordinates.
using Point = std::vector<Rat>;

/// Scale to a primitive integer vector whose first nonzero entry is positive.
Point normalize_point(Point p);

std::string point_to_string(const Point& p);

enum class AdeLabel { A1, A2, A3, A4, A5, D4, SmoothPoint, Unclassified };

std::string ade_label_name(AdeLabel l);

/// Milnor number with the certificate degree at which the standard-monomial
/// count stabilized and every degree-d monomial was caught in the ideal.
struct MilnorResult {
    int value = -1;            // meaningful only when !exceeds_cap
    bool exceeds_cap = false;
    int certified_degree = -1; // m^d is contained in the Jacobian ideal
};

struct SingularityReport {
    Point point;
    int hessian_corank = 0;
    MilnorResult milnor;
    AdeLabel label = AdeLabel::Unclassified;
};

/// Affine germ of a homogeneous polynomial at a projective point: the chart
/// x_pivot = 1 recentered so the point sits at the origin.
struct Germ {
    Poly poly;             // over the chart variables
    std::size_t pivot;     // index of the chart coordinate in f's variables
    std::vector<std::string> chart_vars;
};

Germ dehomogenize_at(const Poly& f, const Point& p);

/// Gram matrix of the quadratic part of a germ (Hessian/2 at the origin).
QMatrix quadratic_gram(const Poly& germ);

/// All singular points of a homogeneous form among the supplied candidates
/// plus the projective points with coordinates in {-1,0,1}, up to scaling.
std::vector<Point> find_singular_points(const Poly& f,
                                        const std::vector<Point>& candidates = {});

/// Colength of the Jacobian ideal in the local ring at p (an isolated
/// singular point), by truncated linear algebra on monomials with a
/// stabilization-plus-ideal-membership certificate. Returns exceeds_cap when
/// the standard-monomial count passes `cap`.
MilnorResult milnor_number(const Poly& f, const Point& p, int cap = 12);

/// Same computation on an affine germ (origin must be a critical point).
MilnorResult milnor_of_germ(const Poly& germ, int cap = 12);

SingularityReport classify_singularity(const Poly& f, const Point& p, int cap = 12);

/// Classification data for an affine germ at the origin.
SingularityReport classify_germ(const Poly& germ, int cap = 12);

struct ProjectionReport {
    int quadric_rank = 0;           // rank of the tangent cone quadric Q_p
    Poly curve_q2, curve_k3;        // ideal generators of C_p in P^3
    std::optional<bool> vertex_incidence;
    AdeLabel deduced_label = AdeLabel::Unclassified;
    MilnorResult curve_germ_milnor; // vertex germ of C_p, when applicable
    std::string vertex_chart;       // chart used for the vertex germ
};

/// Projection analysis from a singular point: writes f = x0*Q2 + K3 after
/// moving p to (1:0:0:0:0), reads the type from rank(Q2) and the geometry of
/// C_p = V(Q2, K3).
ProjectionReport project_from_singular_point(const Poly& f, const Point& p);

/// Discriminant of a*s^3 + b*s^2 t + c*s t^2 + d*t^3; nonzero iff the three
/// roots in P^1 are distinct.
Rat binary_cubic_discriminant(const Rat& a, const Rat& b, const Rat& c, const Rat& d);

/// Random element of GL_n(Z) with det +-1 (product of shears, swaps, sign
/// flips); entries stay small.
QMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12);

} // namespace ctm

#endif
