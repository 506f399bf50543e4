#include "ctm/singularity.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

#include "ctm/errors.hpp"

namespace ctm {

Point normalize_point(Point p) {
    Int l(1);
    for (const auto& c : p) l = boost::multiprecision::lcm(l, rat_den(c));
    std::vector<Int> v;
    v.reserve(p.size());
    for (const auto& c : p) v.push_back(rat_num(c) * (l / rat_den(c)));
    Int g(0);
    for (const auto& c : v) g = boost::multiprecision::gcd(g, c);
    if (g == 0) throw ArgumentError("normalize_point: zero vector");
    int sign = 0;
    for (const auto& c : v) {
        if (c != 0) {
            sign = c > 0 ? 1 : -1;
            break;
        }
    }
    Point out;
    out.reserve(p.size());
    for (const auto& c : v) out.push_back(Rat(c * sign, g));
    return out;
}

std::string point_to_string(const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ":";
        s += rat_to_string(p[i]);
    }
    return s + ")";
}

std::string ade_label_name(AdeLabel l) {
    switch (l) {
        case AdeLabel::A1: return "A1";
        case AdeLabel::A2: return "A2";
        case AdeLabel::A3: return "A3";
        case AdeLabel::A4: return "A4";
        case AdeLabel::A5: return "A5";
        case AdeLabel::D4: return "D4";
        case AdeLabel::SmoothPoint: return "smooth-point";
        case AdeLabel::Unclassified: return "unclassified";
    }
    return "unclassified";
}

Germ dehomogenize_at(const Poly& f, const Point& p0) {
    int deg = -1;
    if (!f.is_homogeneous(&deg) || f.is_zero())
        throw ArgumentError("dehomogenize_at: input must be nonzero homogeneous");
    if (p0.size() != f.nvars())
        throw ArgumentError("dehomogenize_at: point dimension mismatch");
    Point p = p0;
    std::size_t pivot = p.size();
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) pivot = i; // last nonzero; any nonzero coordinate works
    if (pivot == p.size()) throw ArgumentError("dehomogenize_at: zero point");
    const Rat scale = p[pivot];
    for (auto& c : p) c /= scale;

    Germ out;
    out.pivot = pivot;
    for (std::size_t i = 0; i < f.nvars(); ++i)
        if (i != pivot) out.chart_vars.push_back(f.vars()[i]);
    Poly germ(out.chart_vars);
    // expand each term: x_pivot = 1, x_i = p_i + u_i
    for (const auto& [m, c] : f.terms()) {
        Poly t = Poly::constant(out.chart_vars, c);
        std::size_t k = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == pivot) {
                continue;
            }
            const std::size_t ui = k++;
            if (m[i] == 0) continue;
            Poly base = Poly::constant(out.chart_vars, p[i]);
            Mono mu(out.chart_vars.size(), 0);
            mu[ui] = 1;
            base.add_term(mu, Rat(1));
            t = t * base.pow(m[i]);
        }
        germ += t;
    }
    out.poly = std::move(germ);
    return out;
}

QMatrix quadratic_gram(const Poly& germ) {
    const std::size_t n = germ.nvars();
    QMatrix g(n, QVec(n, Rat(0)));
    for (const auto& [m, c] : germ.terms()) {
        if (mono_degree(m) != 2) continue;
        std::size_t i = n, j = n;
        for (std::size_t k = 0; k < n; ++k) {
            if (m[k] == 2) {
                i = j = k;
                break;
            }
            if (m[k] == 1) {
                if (i == n)
                    i = k;
                else
                    j = k;
            }
        }
        if (i == j)
            g[i][i] = c;
        else {
            g[i][j] = c / 2;
            g[j][i] = c / 2;
        }
    }
    return g;
}

std::vector<Point> find_singular_points(const Poly& f, const std::vector<Point>& candidates) {
    int deg = -1;
    if (!f.is_homogeneous(&deg) || f.is_zero())
        throw ArgumentError("find_singular_points: input must be nonzero homogeneous");
    const std::size_t n = f.nvars();
    std::vector<Poly> grad;
    grad.reserve(n);
    for (std::size_t i = 0; i < n; ++i) grad.push_back(f.derivative(i));

    std::set<Point> seen;
    std::vector<Point> out;
    auto consider = [&](const Point& cand) {
        Point p = normalize_point(cand);
        if (!seen.insert(p).second) return;
        for (const auto& g : grad)
            if (g.eval(p) != 0) return;
        out.push_back(p);
    };

    for (const auto& c : candidates) consider(c);
    // grid scan: {-1,0,1}^n, first nonzero normalized to +1
    std::vector<int> v(n, 0);
    long total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (long code = 1; code < total; ++code) {
        long x = code;
        bool leading_set = false, skip = false;
        for (std::size_t i = 0; i < n; ++i) {
            const int digit = static_cast<int>(x % 3); // 0, 1, 2 -> 0, 1, -1
            x /= 3;
            v[i] = digit == 2 ? -1 : digit;
            if (!leading_set && v[i] != 0) {
                if (v[i] < 0) {
                    skip = true; // mirror image of a +1-leading vector
                    break;
                }
                leading_set = true;
            }
        }
        if (skip) continue;
        Point p;
        p.reserve(n);
        for (int c : v) p.emplace_back(c);
        consider(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Jacobian-ideal colength by truncated linear algebra.

namespace {

std::vector<Mono> monomials_below(std::size_t nvars, int degree_bound) {
    // all monomials of total degree < degree_bound, graded-lex order
    std::vector<Mono> out;
    Mono m(nvars, 0);
    struct Rec {
        std::vector<Mono>& out;
        std::size_t nvars;
        void go(Mono& m, std::size_t pos, int left) {
            if (pos + 1 == nvars) {
                m[pos] = left;
                out.push_back(m);
                m[pos] = 0;
                return;
            }
            for (int e = 0; e <= left; ++e) {
                m[pos] = e;
                go(m, pos + 1, left - e);
            }
            m[pos] = 0;
        }
    } rec{out, nvars};
    for (int d = 0; d < degree_bound; ++d) rec.go(m, 0, d);
    std::sort(out.begin(), out.end(), GradedLex{});
    return out;
}

// echelon row space over a fixed finite monomial basis
struct RowSpace {
    std::map<Mono, std::size_t, GradedLex> index;
    std::vector<Mono> basis;
    // pivot column -> reduced row (dense over basis)
    std::map<std::size_t, QVec> rows;

    explicit RowSpace(std::vector<Mono> monos) : basis(std::move(monos)) {
        for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    }

    // reduce returns true if the vector was absorbed (i.e. independent)
    bool insert(QVec v) {
        for (std::size_t c = 0; c < v.size(); ++c) {
            if (v[c] == 0) continue;
            auto it = rows.find(c);
            if (it == rows.end()) {
                const Rat inv = Rat(1) / v[c];
                for (auto& x : v) x *= inv;
                rows.emplace(c, std::move(v));
                return true;
            }
            const Rat f = v[c];
            const QVec& r = it->second;
            for (std::size_t j = c; j < v.size(); ++j)
                if (r[j] != 0) v[j] -= f * r[j];
        }
        return false;
    }

    bool contains(QVec v) const {
        for (std::size_t c = 0; c < v.size(); ++c) {
            if (v[c] == 0) continue;
            auto it = rows.find(c);
            if (it == rows.end()) return false;
            const Rat f = v[c];
            const QVec& r = it->second;
            for (std::size_t j = c; j < v.size(); ++j)
                if (r[j] != 0) v[j] -= f * r[j];
        }
        return true;
    }

    std::size_t rank() const { return rows.size(); }
};

// image of the Jacobian ideal of `jet` inside R/m^level
RowSpace ideal_image(const Poly& jet, int level) {
    const std::size_t n = jet.nvars();
    std::vector<Poly> partials;
    for (std::size_t i = 0; i < n; ++i) partials.push_back(jet.derivative(i));
    RowSpace space(monomials_below(n, level));
    const auto multipliers = monomials_below(n, level - 1); // deg m <= level-2 suffices
    for (const auto& g : partials) {
        if (g.is_zero()) continue;
        for (const auto& m : multipliers) {
            const int dm = mono_degree(m);
            QVec row(space.basis.size(), Rat(0));
            bool nonzero = false;
            for (const auto& [mg, c] : g.terms()) {
                if (dm + mono_degree(mg) >= level) continue;
                Mono prod(mg);
                for (std::size_t i = 0; i < n; ++i) prod[i] += m[i];
                row[space.index.at(prod)] = c;
                nonzero = true;
            }
            if (nonzero) space.insert(std::move(row));
        }
    }
    return space;
}

std::size_t count_monomials_below(std::size_t nvars, int bound) {
    // sum_{d < bound} binom(d + nvars - 1, nvars - 1)
    std::size_t total = 0;
    for (int d = 0; d < bound; ++d)
        total += static_cast<std::size_t>(binomial(d + static_cast<long>(nvars) - 1,
                                                   static_cast<long>(nvars) - 1));
    return total;
}

// colength of the Jacobian ideal of the exact jet, with certificate; the jet
// must be exact through degree < jet_order for levels up to jet_order - 1
MilnorResult jacobian_colength(const Poly& jet, int cap, int max_level) {
    MilnorResult res;
    const std::size_t n = jet.nvars();
    if (n == 0) { // fully split-off germ: the Morse point itself
        res.value = 1;
        res.certified_degree = 1;
        return res;
    }
    std::optional<RowSpace> cached; // ideal image at the current level d
    for (int d = 2; d + 1 <= max_level; ++d) {
        RowSpace at_d = cached ? std::move(*cached) : ideal_image(jet, d);
        const int q_d = static_cast<int>(count_monomials_below(n, d) - at_d.rank());
        if (q_d > cap) {
            res.exceeds_cap = true;
            return res;
        }
        RowSpace at_d1 = ideal_image(jet, d + 1);
        const int q_d1 = static_cast<int>(count_monomials_below(n, d + 1) - at_d1.rank());
        if (q_d1 > cap) {
            res.exceeds_cap = true;
            return res;
        }
        if (q_d1 != q_d) {
            cached = std::move(at_d1);
            continue;
        }
        // certificate: every monomial of degree exactly d lies in the ideal
        // image modulo degree d+1; Nakayama then gives m^d inside the ideal
        bool all_in = true;
        for (const auto& m : at_d1.basis) {
            if (mono_degree(m) != d) continue;
            QVec row(at_d1.basis.size(), Rat(0));
            row[at_d1.index.at(m)] = 1;
            if (!at_d1.contains(std::move(row))) {
                all_in = false;
                break;
            }
        }
        if (all_in) {
            res.value = q_d;
            res.certified_degree = d;
            return res;
        }
        cached = std::move(at_d1);
    }
    res.exceeds_cap = true; // could not certify within the truncation budget
    return res;
}

// ---------------------------------------------------------------------------
// Morse splitting: eliminate each nondegenerate quadratic direction exactly
// (Newton solve of the critical-point equation), leaving a germ in the
// corank variables with the same Milnor number.

struct SplitGerm {
    int rank = 0;       // split-off directions
    TruncSeries rest;   // germ over the surviving variables only
    Poly reduced_cubic; // degree-3 part of rest
};

QMatrix quadratic_gram_series(const TruncSeries& s) {
    const std::size_t n = s.nvars();
    QMatrix g(n, QVec(n, Rat(0)));
    for (const auto& [m, c] : s.terms()) {
        if (mono_degree(m) != 2) continue;
        std::size_t i = n, j = n;
        for (std::size_t k = 0; k < n; ++k) {
            if (m[k] == 2) {
                i = j = k;
                break;
            }
            if (m[k] == 1) {
                if (i == n)
                    i = k;
                else
                    j = k;
            }
        }
        if (i == j)
            g[i][i] = c;
        else {
            g[i][j] = c / 2;
            g[j][i] = c / 2;
        }
    }
    return g;
}

// Newton solve of d(s)/d(x_pivot) = 0 for x_pivot as a series in the other
// variables, with precision doubling. dg must have an invertible linear
// coefficient in x_pivot (nonzero diagonal quadratic term of s).
TruncSeries newton_critical_point(const TruncSeries& dg_full, std::size_t pivot) {
    const int order = dg_full.order();
    TruncSeries phi(dg_full.vars(), 2); // zero, error valuation >= 1
    int certified = 1;
    while (certified < order) {
        const int w = std::min(2 * certified, order);
        TruncSeries dg = dg_full.truncate(w);
        phi = phi.truncate(w);
        TruncSeries val = dg.substitute(pivot, phi);
        if (!val.is_zero()) {
            TruncSeries der = dg.derivative(pivot).substitute(pivot, phi);
            phi = phi - val * der.inverse();
        }
        certified = w;
    }
    return phi.truncate(order);
}

SplitGerm morse_split(const Poly& germ, int order) {
    SplitGerm out;
    TruncSeries s = TruncSeries::from_poly(germ, order);

    for (;;) {
        const std::size_t n = s.nvars();
        if (n == 0) break;
        QMatrix g = quadratic_gram_series(s);
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (g[i][i] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == n) {
            std::size_t bi = n, bj = n;
            for (std::size_t i = 0; i < n && bi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (g[i][j] != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi == n) break; // quadratic part is zero: splitting done
            // x_i -> x_i + x_j turns the cross term g[i][j] x_i x_j into a
            // nonzero diagonal entry on x_j
            TruncSeries shear = TruncSeries::variable(s.vars(), order, s.vars()[bi]) +
                                TruncSeries::variable(s.vars(), order, s.vars()[bj]);
            s = s.substitute(bi, shear);
            pivot = bj;
        }
        TruncSeries phi = newton_critical_point(s.derivative(pivot), pivot);
        s = s.substitute(pivot, phi);
        if (!s.derivative(pivot).is_zero())
            throw Error("morse_split: elimination failed to remove a variable");
        s = s.without_var(pivot);
        ++out.rank;
    }

    out.rest = s;
    Poly cubic(s.vars());
    for (const auto& [m, c] : s.terms())
        if (mono_degree(m) == 3) cubic.add_term(m, c);
    out.reduced_cubic = cubic;
    return out;
}

MilnorResult milnor_from_split(const SplitGerm& split, int cap, int order) {
    if (split.rest.nvars() == 0) {
        MilnorResult res;
        res.value = 1;
        res.certified_degree = 1;
        return res;
    }
    const Poly jet = split.rest.to_poly();
    if (jet.is_zero()) {
        MilnorResult res;
        res.exceeds_cap = true; // flat through the truncation order
        return res;
    }
    return jacobian_colength(jet, cap, order - 1);
}

} // namespace

MilnorResult milnor_of_germ(const Poly& germ, int cap) {
    for (const auto& [m, c] : germ.terms())
        if (mono_degree(m) <= 1)
            throw PreconditionError("milnor_of_germ: origin is not a singular point");
    // truncation ladder: 8 covers the allowable range mu <= 5 cheaply; the
    // last rung (cap + 6) makes an exceeds-cap verdict definitive
    const std::array<int, 3> orders{8, 12, cap + 6};
    MilnorResult last;
    for (int order : orders) {
        SplitGerm split = morse_split(germ, order);
        last = milnor_from_split(split, cap, order);
        if (!last.exceeds_cap || order >= cap + 6) return last;
    }
    return last;
}

MilnorResult milnor_number(const Poly& f, const Point& p, int cap) {
    Germ germ = dehomogenize_at(f, p);
    return milnor_of_germ(germ.poly, cap);
}

SingularityReport classify_germ(const Poly& germ, int cap) {
    SingularityReport rep;
    const std::size_t n = germ.nvars();
    for (const auto& [m, c] : germ.terms()) {
        if (mono_degree(m) == 0 && c != 0)
            throw PreconditionError("classify_germ: germ does not vanish at the origin");
        if (mono_degree(m) == 1) {
            rep.label = AdeLabel::SmoothPoint;
            rep.hessian_corank = 0;
            return rep;
        }
    }
    const QMatrix gram = quadratic_gram(germ);
    const std::size_t rank = matrix_rank(gram);
    rep.hessian_corank = static_cast<int>(n - rank);

    SplitGerm split;
    const std::array<int, 3> orders{8, 12, cap + 6};
    for (int order : orders) {
        split = morse_split(germ, order);
        rep.milnor = milnor_from_split(split, cap, order);
        if (!rep.milnor.exceeds_cap || order >= cap + 6) break;
    }
    if (rep.milnor.exceeds_cap) {
        rep.label = AdeLabel::Unclassified;
        return rep;
    }
    const int mu = rep.milnor.value;
    if (rep.hessian_corank <= 1) {
        switch (mu) {
            case 1: rep.label = AdeLabel::A1; break;
            case 2: rep.label = AdeLabel::A2; break;
            case 3: rep.label = AdeLabel::A3; break;
            case 4: rep.label = AdeLabel::A4; break;
            case 5: rep.label = AdeLabel::A5; break;
            default: rep.label = AdeLabel::Unclassified; break;
        }
        return rep;
    }
    if (rep.hessian_corank == 2 && mu == 4) {
        // D4 iff the cubic part of the corank-2 germ has three distinct roots
        const Poly& cubic = split.reduced_cubic;
        std::vector<std::size_t> used;
        for (std::size_t i = 0; i < cubic.nvars(); ++i)
            if (cubic.degree_in(i) > 0) used.push_back(i);
        if (!cubic.is_zero() && used.size() <= 2) {
            Rat a(0), b(0), c3(0), d(0);
            const std::size_t vx = used.empty() ? 0 : used[0];
            const std::size_t vy = used.size() > 1 ? used[1] : vx;
            for (const auto& [m, c] : cubic.terms()) {
                if (m[vx] == 3) a = c;
                else if (used.size() > 1 && m[vx] == 2 && m[vy] == 1) b = c;
                else if (used.size() > 1 && m[vx] == 1 && m[vy] == 2) c3 = c;
                else if (used.size() > 1 && m[vy] == 3) d = c;
            }
            if (binary_cubic_discriminant(a, b, c3, d) != 0) {
                rep.label = AdeLabel::D4;
                return rep;
            }
        }
    }
    rep.label = AdeLabel::Unclassified;
    return rep;
}

SingularityReport classify_singularity(const Poly& f, const Point& p, int cap) {
    Germ germ = dehomogenize_at(f, p);
    SingularityReport rep = classify_germ(germ.poly, cap);
    rep.point = normalize_point(p);
    return rep;
}

Rat binary_cubic_discriminant(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    return Rat(18) * a * b * c * d - Rat(4) * b * b * b * d + b * b * c * c -
           Rat(4) * a * c * c * c - Rat(27) * a * a * d * d;
}

ProjectionReport project_from_singular_point(const Poly& f, const Point& p0) {
    int deg = -1;
    if (!f.is_homogeneous(&deg) || deg != 3 || f.nvars() != 5)
        throw ArgumentError("project_from_singular_point: expected a cubic form in x0..x4");
    const Point p = normalize_point(p0);

    // move p to (1:0:0:0:0): x = M y with column 0 = p
    std::size_t pivot = 0;
    while (p[pivot] == 0) ++pivot;
    QMatrix m(5, QVec(5, Rat(0)));
    std::size_t col = 1;
    for (std::size_t j = 0; j < 5; ++j) {
        m[j][0] = p[j];
        if (j != pivot) m[j][col++] = 1;
    }
    // linear_change takes x_i -> sum_j m[i][j] x_j
    Poly g = f.linear_change(m);

    const std::vector<std::string> p3vars{"x1", "x2", "x3", "x4"};
    const Poly cube_coef = g.coefficient_of(0, 3);
    const Poly quad_coef = g.coefficient_of(0, 2);
    if (!cube_coef.is_zero() || !quad_coef.is_zero())
        throw PreconditionError("project_from_singular_point: point is not singular");
    ProjectionReport rep;
    rep.curve_q2 = g.coefficient_of(0, 1).restrict_to(p3vars);
    rep.curve_k3 = g.coefficient_of(0, 0).restrict_to(p3vars);

    const QMatrix gram = quadratic_gram(rep.curve_q2);
    rep.quadric_rank = static_cast<int>(matrix_rank(gram));

    if (rep.quadric_rank == 4) {
        rep.deduced_label = AdeLabel::A1;
        return rep;
    }
    if (rep.quadric_rank == 3) {
        const auto kern = kernel_basis(gram);
        const Point vertex = normalize_point(Point(kern[0].begin(), kern[0].end()));
        const Rat k_at_vertex = rep.curve_k3.eval(vertex);
        rep.vertex_incidence = (k_at_vertex == 0);
        if (k_at_vertex != 0) {
            rep.deduced_label = AdeLabel::A2;
            return rep;
        }
        // germ of C_p at the vertex: on the smooth surface K3 = 0, the curve
        // is cut by Q2; solve K3 = 0 for a chart variable and substitute
        Germ kg = dehomogenize_at(rep.curve_k3, vertex);
        Germ qg = dehomogenize_at(rep.curve_q2, vertex);
        rep.vertex_chart = "affine chart x" + std::to_string(kg.pivot + 1) +
                           " = 1 at the cone vertex";
        // linear part of k
        std::size_t solve_var = kg.chart_vars.size();
        Rat lead(0);
        for (const auto& [mm, cc] : kg.poly.terms()) {
            if (mono_degree(mm) != 1) continue;
            for (std::size_t i = 0; i < mm.size(); ++i)
                if (mm[i] == 1 && cc != 0) {
                    solve_var = i;
                    lead = cc;
                }
        }
        if (solve_var == kg.chart_vars.size()) {
            rep.deduced_label = AdeLabel::Unclassified; // worse than A_k
            return rep;
        }
        const int order = 12;
        TruncSeries k = TruncSeries::from_poly(kg.poly, order);
        TruncSeries dk = k.derivative(solve_var);
        TruncSeries phi(kg.chart_vars, order);
        int steps = 1;
        while ((1 << steps) < order) ++steps;
        for (int it = 0; it <= steps; ++it) {
            TruncSeries val = k.substitute(solve_var, phi);
            if (val.is_zero()) break;
            TruncSeries der = dk.substitute(solve_var, phi);
            phi = phi - val * der.inverse();
        }
        TruncSeries w = TruncSeries::from_poly(qg.poly, order).substitute(solve_var, phi);
        // w is a plane-curve germ in the two remaining chart variables
        std::vector<std::string> plane_vars;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < kg.chart_vars.size(); ++i)
            if (i != solve_var) {
                plane_vars.push_back(kg.chart_vars[i]);
                keep.push_back(i);
            }
        Poly wjet(plane_vars);
        for (const auto& [mm, cc] : w.terms()) {
            Mono r(plane_vars.size(), 0);
            for (std::size_t kk = 0; kk < keep.size(); ++kk) r[kk] = mm[keep[kk]];
            wjet.add_term(r, cc);
        }
        SingularityReport curve = classify_germ(wjet, 8);
        rep.curve_germ_milnor = curve.milnor;
        switch (curve.label) {
            case AdeLabel::A1: rep.deduced_label = AdeLabel::A3; break;
            case AdeLabel::A2: rep.deduced_label = AdeLabel::A4; break;
            case AdeLabel::A3: rep.deduced_label = AdeLabel::A5; break;
            default: rep.deduced_label = AdeLabel::Unclassified; break;
        }
        return rep;
    }
    if (rep.quadric_rank == 2) {
        // two distinct planes; C_p meets the singular line in the zeros of
        // K3 restricted to the line
        const auto kern = kernel_basis(gram);
        const std::vector<std::string> st{"s", "t"};
        std::vector<Poly> comb;
        for (std::size_t i = 0; i < 4; ++i) {
            Poly c(st);
            Mono ms(2, 0);
            ms[0] = 1;
            c.add_term(ms, kern[0][i]);
            Mono mt(2, 0);
            mt[1] = 1;
            c.add_term(mt, kern[1][i]);
            comb.push_back(std::move(c));
        }
        Poly restricted = Poly::constant(st, 0);
        for (const auto& [mm, cc] : rep.curve_k3.terms()) {
            Poly t = Poly::constant(st, cc);
            for (std::size_t i = 0; i < 4; ++i)
                if (mm[i] > 0) t = t * comb[i].pow(mm[i]);
            restricted += t;
        }
        Mono m3(2, 0);
        Rat a, b, c, d;
        m3 = {3, 0};
        a = restricted.coeff(m3);
        m3 = {2, 1};
        b = restricted.coeff(m3);
        m3 = {1, 2};
        c = restricted.coeff(m3);
        m3 = {0, 3};
        d = restricted.coeff(m3);
        if (!restricted.is_zero() && binary_cubic_discriminant(a, b, c, d) != 0)
            rep.deduced_label = AdeLabel::D4;
        else
            rep.deduced_label = AdeLabel::Unclassified;
        return rep;
    }
    throw UnsupportedCorankError(
        "project_from_singular_point: tangent quadric of rank < 2 (corank > 2)");
}

QMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
    QMatrix m(n, QVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> coin(0, 2);
    for (int s = 0; s < steps; ++s) {
        const std::size_t i = pick(rng);
        std::size_t j = pick(rng);
        while (j == i) j = pick(rng);
        switch (coin(rng)) {
            case 0: { // shear row: x_i -> x_i + x_j
                for (std::size_t k = 0; k < n; ++k) m[i][k] += m[j][k];
                break;
            }
            case 1: { // shear with sign
                for (std::size_t k = 0; k < n; ++k) m[i][k] -= m[j][k];
                break;
            }
            default: { // swap
                std::swap(m[i], m[j]);
                break;
            }
        }
    }
    return m;
}

} // namespace ctm
