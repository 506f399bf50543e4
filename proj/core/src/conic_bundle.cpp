#include "ctm/conic_bundle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ctm/errors.hpp"
#include "ctm/linalg.hpp"

namespace ctm {

LineDecomposition decompose_along_line(const Poly& cubic) {
    int deg = -1;
    if (cubic.vars() != vars_p4() || !cubic.is_homogeneous(&deg) || deg != 3)
        throw ArgumentError("decompose_along_line: expected a cubic form in x0..x4");
    // monomials supported on the line x2=x3=x4=0 obstruct containment
    std::string offending;
    for (const auto& [m, c] : cubic.terms()) {
        if (m[2] == 0 && m[3] == 0 && m[4] == 0) {
            if (!offending.empty()) offending += ", ";
            offending += Poly::monomial(vars_p4(), m, c).str();
        }
    }
    if (!offending.empty())
        throw LineNotContainedError(
            "decompose_along_line: cubic does not vanish on x2=x3=x4=0; offending terms: " +
                offending,
            offending);

    Poly l1(vars_p2()), l2(vars_p2()), l3(vars_p2()), q1(vars_p2()), q2(vars_p2()),
        f(vars_p2());
    for (const auto& [m, c] : cubic.terms()) {
        Mono rest{m[2], m[3], m[4]};
        const int e0 = m[0], e1 = m[1];
        if (e0 == 2 && e1 == 0)
            l1.add_term(rest, c);
        else if (e0 == 1 && e1 == 1)
            l2.add_term(rest, c / 2);
        else if (e0 == 0 && e1 == 2)
            l3.add_term(rest, c);
        else if (e0 == 1 && e1 == 0)
            q1.add_term(rest, c / 2);
        else if (e0 == 0 && e1 == 1)
            q2.add_term(rest, c / 2);
        else
            f.add_term(rest, c);
    }
    return LineDecomposition{l1, l2, l3, q1, q2, f};
}

Poly reassemble(const LineDecomposition& dec) {
    const auto& v5 = vars_p4();
    const Poly x0 = Poly::variable(v5, "x0");
    const Poly x1 = Poly::variable(v5, "x1");
    return dec.l1.lift_to(v5) * x0 * x0 + dec.l2.lift_to(v5) * x0 * x1 * Rat(2) +
           dec.l3.lift_to(v5) * x1 * x1 + dec.q1.lift_to(v5) * x0 * Rat(2) +
           dec.q2.lift_to(v5) * x1 * Rat(2) + dec.f.lift_to(v5);
}

ConicBundleData discriminant_pair(const LineDecomposition& dec,
                                  const std::vector<Point>& d_candidates) {
    PolyMatrix a(3, 3, vars_p2());
    a.set(0, 0, dec.l1);
    a.set(0, 1, dec.l2);
    a.set(0, 2, dec.q1);
    a.set(1, 0, dec.l2);
    a.set(1, 1, dec.l3);
    a.set(1, 2, dec.q2);
    a.set(2, 0, dec.q1);
    a.set(2, 1, dec.q2);
    a.set(2, 2, dec.f);
    PolyMatrix b(2, 2, vars_p2());
    b.set(0, 0, dec.l1);
    b.set(0, 1, dec.l2);
    b.set(1, 0, dec.l2);
    b.set(1, 1, dec.l3);

    Poly d = poly_det(a);
    Poly q = poly_det(b);
    if (d.is_zero())
        throw DegenerateLineError("discriminant_pair: D vanishes identically (special line)");
    if (q.is_zero())
        throw DegenerateLineError("discriminant_pair: Q vanishes identically (special line)");

    NonSpecialVerdict verdict;
    verdict.q_smooth = matrix_rank(quadratic_gram(q)) == 3;
    verdict.sing_d = find_singular_points(d, d_candidates);
    verdict.q_misses_sing_d = true;
    for (const auto& p : verdict.sing_d)
        if (q.eval(p) == 0) verdict.q_misses_sing_d = false;

    return ConicBundleData{dec, std::move(a), std::move(b), std::move(d), std::move(q),
                           std::move(verdict)};
}

TangencyCertificate tangency_certificate(const ConicBundleData& data, std::mt19937_64& rng,
                                         int max_retries) {
    TangencyCertificate cert;
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        cert.attempts = attempt + 1;
        Poly d = data.d, q = data.q;
        if (attempt > 0) {
            const QMatrix t = random_unimodular(rng, 3);
            d = d.linear_change(t);
            q = q.linear_change(t);
        }
        // generic iff the elimination center (1:0:0) avoids both curves
        if (d.degree_in(0) != 5 || q.degree_in(0) != 2) continue;
        Poly res = resultant(d, q, vars_p2()[0]);
        if (res.is_zero())
            throw ArgumentError("tangency_certificate: D and Q share a component");
        int rdeg = -1;
        res.is_homogeneous(&rdeg);
        if (rdeg != 10) continue;
        auto [g, r] = square_part(res);
        cert.resultant_form = res;
        cert.sqrt_form = g;
        cert.squarefree_part = r;
        cert.tangent = (r.total_degree() == 0);
        return cert;
    }
    throw GenericityError("tangency_certificate: no generic coordinate change within " +
                          std::to_string(max_retries) + " attempts");
}

// ---------------------------------------------------------------------------
// local normal form

namespace {

using SMat = std::array<std::array<TruncSeries, 3>, 3>;

SMat smul(const SMat& a, const SMat& b, const std::vector<std::string>& vars, int order) {
    SMat c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            TruncSeries acc(vars, order);
            for (int k = 0; k < 3; ++k) acc = acc + a[i][k] * b[k][j];
            c[i][j] = acc;
        }
    return c;
}

SMat stranspose(const SMat& a) {
    SMat t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i][j] = a[j][i];
    return t;
}

TruncSeries sdet(const SMat& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

SMat sidentity(const std::vector<std::string>& vars, int order) {
    SMat m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m[i][j] = TruncSeries::constant(vars, order, i == j ? 1 : 0);
    return m;
}

// chart series of a homogeneous block at pbar (zero blocks allowed)
TruncSeries chart_series(const Poly& block, const Point& pbar, int order,
                         std::vector<std::string>* chart_vars_out) {
    if (block.is_zero()) {
        Poly probe = Poly::constant(block.vars(), 1);
        Germ g = dehomogenize_at(probe, pbar);
        if (chart_vars_out) *chart_vars_out = g.chart_vars;
        return TruncSeries(g.chart_vars, order);
    }
    Germ g = dehomogenize_at(block, pbar);
    if (chart_vars_out) *chart_vars_out = g.chart_vars;
    return TruncSeries::from_poly(g.poly, order);
}

} // namespace

LocalNormalFormResult local_normal_form(const ConicBundleData& data, const Point& pbar0,
                                        int order) {
    if (order < 3) throw ArgumentError("local_normal_form: order must be at least 3");
    const Point pbar = normalize_point(pbar0);
    const Rat q_at_p = data.q.eval(pbar);
    if (q_at_p == 0)
        throw LineOfSecondTypeError(
            "local_normal_form: q vanishes at the singular point (line of the second type)");

    LocalNormalFormResult out;
    LineDecomposition dec = data.dec;
    // the (1,1) entry must be a unit in the chart; swap or shear otherwise
    if (dec.l1.eval(pbar) == 0) {
        if (dec.l3.eval(pbar) != 0) {
            std::swap(dec.l1, dec.l3);
            std::swap(dec.q1, dec.q2);
        } else {
            // l1(p) = l3(p) = 0 forces l2(p) != 0 since q(p) != 0;
            // x0 -> x0 + x1 gives l1' = l1 + 2 l2 + l3
            Poly l1p = dec.l1 + dec.l2 * Rat(2) + dec.l3;
            Poly l2p = dec.l2 + dec.l3;
            Poly q1p = dec.q1 + dec.q2;
            dec.l1 = l1p;
            dec.l2 = l2p;
            dec.q1 = q1p;
        }
        out.swapped_frame = true;
    }

    std::vector<std::string> cv;
    TruncSeries l1 = chart_series(dec.l1, pbar, order, &cv);
    TruncSeries l2 = chart_series(dec.l2, pbar, order, nullptr);
    TruncSeries l3 = chart_series(dec.l3, pbar, order, nullptr);
    TruncSeries q1 = chart_series(dec.q1, pbar, order, nullptr);
    TruncSeries q2 = chart_series(dec.q2, pbar, order, nullptr);
    TruncSeries f = chart_series(dec.f, pbar, order, nullptr);
    TruncSeries qs = chart_series(data.q, pbar, order, nullptr);
    TruncSeries ds = chart_series(data.d, pbar, order, nullptr);
    out.chart_vars = cv;

    SMat a;
    a[0][0] = l1;
    a[0][1] = l2;
    a[0][2] = q1;
    a[1][0] = l2;
    a[1][1] = l3;
    a[1][2] = q2;
    a[2][0] = q1;
    a[2][1] = q2;
    a[2][2] = f;

    if (l1.constant_term() == 0)
        throw LineOfSecondTypeError("local_normal_form: no unit (1,1) entry available");

    // throws NotInvertibleError unless q(pbar) is a rational square
    out.sqrt_q = qs.sqrt();

    TruncSeries inv_l1 = l1.inverse();
    SMat m1 = sidentity(cv, order);
    m1[0][1] = -(l2 * inv_l1);
    m1[0][2] = -(q1 * inv_l1);
    SMat a1 = smul(smul(stranspose(m1), a, cv, order), m1, cv, order);

    TruncSeries d2 = a1[1][1]; // q / l1 up to the frame change
    TruncSeries inv_d2 = d2.inverse();
    SMat m2 = sidentity(cv, order);
    m2[1][2] = -(a1[1][2] * inv_d2);

    // scale the middle column by 1/sqrt(q): det(M) becomes 1/sqrt(q) and the
    // top block becomes the hyperbolic pair diag(u, 1/u)
    SMat m3 = sidentity(cv, order);
    m3[1][1] = out.sqrt_q.inverse();
    SMat m = smul(smul(m1, m2, cv, order), m3, cv, order);
    SMat afin = smul(smul(stranspose(m), a, cv, order), m, cv, order);

    out.diag = {afin[0][0], afin[1][1], afin[2][2]};
    out.c = afin[2][2];

    out.offdiag_zero = afin[0][1].is_zero() && afin[0][2].is_zero() && afin[1][2].is_zero() &&
                       afin[1][0].is_zero() && afin[2][0].is_zero() && afin[2][1].is_zero();
    out.hyperbolic_pair =
        (afin[0][0] * afin[1][1]) == TruncSeries::constant(cv, order, 1);
    const TruncSeries detm = sdet(m);
    out.det_identity =
        (detm * detm * sdet(a)) == (afin[0][0] * afin[1][1] * afin[2][2]);
    out.c_matches_d = (out.c * qs) == ds;
    return out;
}

// ---------------------------------------------------------------------------
// certified singular locus of a plane curve

PlaneCurveSingularities certified_plane_curve_singularities(const Poly& curve) {
    PlaneCurveSingularities out;
    int deg = -1;
    if (curve.vars() != vars_p2() || !curve.is_homogeneous(&deg) || deg < 2)
        throw ArgumentError("certified_plane_curve_singularities: expected a plane curve over "
                            "x2,x3,x4 of degree >= 2");
    const Poly d2 = curve.derivative(0), d3 = curve.derivative(1), d4 = curve.derivative(2);
    if (d2.is_zero() || d3.is_zero() || d4.is_zero()) {
        out.detail = "a partial derivative vanishes identically";
        return out;
    }
    std::set<Point> sing;

    // the direction with x3 = x4 = 0 is handled directly
    const Point e2{Rat(1), Rat(0), Rat(0)};
    if (d2.eval(e2) == 0 && d3.eval(e2) == 0 && d4.eval(e2) == 0) sing.insert(e2);

    // eliminate x2 pairwise; any other singular point projects to a common
    // root of the three resultants in (x3 : x4)
    auto safe_res = [&](const Poly& f, const Poly& g) -> Poly {
        if (f.degree_in(0) == 0 && g.degree_in(0) == 0) return f;
        return resultant(f, g, "x2");
    };
    const Poly r1 = safe_res(d2, d3);
    const Poly r2 = safe_res(d2, d4);
    const Poly r3 = safe_res(d3, d4);
    if (r1.is_zero() || r2.is_zero() || r3.is_zero()) {
        out.detail = "a pairwise resultant vanishes identically";
        return out;
    }
    Poly g = binary_form_gcd(binary_form_gcd(r1, r2), r3);
    if (g.total_degree() == 0) {
        out.certified = true;
        out.points.assign(sing.begin(), sing.end());
        out.detail = "no candidate direction besides (1:0:0)";
        return out;
    }
    BinaryFormRoots roots = binary_form_rational_roots(g);
    if (roots.cofactor.total_degree() > 0) {
        out.detail = "non-rational candidate directions remain: " + roots.cofactor.str();
        return out;
    }
    for (const auto& [dir, mult] : roots.roots) {
        (void)mult;
        // dir has x2 = 0; specialize the partials on this direction
        const Rat b = dir[1], c = dir[2];
        const Poly pb = Poly::constant(vars_p2(), b);
        const Poly pc = Poly::constant(vars_p2(), c);
        std::vector<const Poly*> vals{nullptr, &pb, &pc};
        Poly s2 = d2.substitute(vals), s3 = d3.substitute(vals), s4 = d4.substitute(vals);
        Poly gg(vars_p2());
        bool have = false;
        for (const Poly* s : {&s2, &s3, &s4}) {
            if (s->is_zero()) continue;
            gg = have ? univariate_gcd(gg, *s, "x2") : *s;
            have = true;
        }
        if (!have) {
            out.detail = "all partials vanish on a direction line";
            return out;
        }
        if (gg.total_degree() == 0) continue; // no common root above this direction
        BinaryFormRoots xroots = binary_form_rational_roots(gg);
        if (xroots.cofactor.total_degree() > 0) {
            out.detail = "non-rational singular fiber over direction " + point_to_string(dir);
            return out;
        }
        for (const auto& [xr, xm] : xroots.roots) {
            (void)xm;
            if (xr[0] != 0 && xr[1] == 0 && xr[2] == 0) continue; // x2-infinity: (1:0:0)
            Point p{xr[0], b, c};
            sing.insert(normalize_point(p));
        }
    }
    out.certified = true;
    out.points.assign(sing.begin(), sing.end());
    return out;
}

} // namespace ctm
