#include "ctm/poly_matrix.hpp"

#include <map>

#include "ctm/errors.hpp"

namespace ctm {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, const std::vector<std::string>& vars)
    : rows_(rows), cols_(cols), vars_(vars), entries_(rows * cols, Poly(vars)) {
    if (rows == 0 || cols == 0) throw DimensionError("PolyMatrix: empty matrix");
}

const Poly& PolyMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw DimensionError("PolyMatrix::at: out of range");
    return entries_[r * cols_ + c];
}

void PolyMatrix::set(std::size_t r, std::size_t c, Poly p) {
    if (r >= rows_ || c >= cols_) throw DimensionError("PolyMatrix::set: out of range");
    if (p.vars() != vars_) throw ArgumentError("PolyMatrix::set: entry variable set mismatch");
    entries_[r * cols_ + c] = std::move(p);
}

bool PolyMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Poly poly_det(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw DimensionError("poly_det: matrix is not square");
    const std::size_t n = m.rows();
    if (n > 12) throw DimensionError("poly_det: size beyond supported range");
    // expansion by minors, memoized on the column subset; the recursion
    // level is determined by popcount so the mask alone keys the memo
    std::map<unsigned, Poly> memo;
    struct Rec {
        const PolyMatrix& m;
        std::map<unsigned, Poly>& memo;
        const std::vector<std::string>& vars;
        Poly operator()(unsigned mask) {
            if (mask == 0) return Poly::constant(vars, 1);
            auto it = memo.find(mask);
            if (it != memo.end()) return it->second;
            const std::size_t r = m.rows() - static_cast<std::size_t>(__builtin_popcount(mask));
            Poly acc(vars);
            int sign = 1;
            for (std::size_t c = 0; c < m.cols(); ++c) {
                if (!(mask & (1u << c))) continue;
                const Poly& e = m.at(r, c);
                if (!e.is_zero()) {
                    Poly sub = (*this)(mask & ~(1u << c));
                    if (sign > 0)
                        acc += e * sub;
                    else
                        acc -= e * sub;
                }
                sign = -sign;
            }
            memo.emplace(mask, acc);
            return acc;
        }
    } rec{m, memo, m.vars()};
    return rec((1u << n) - 1u);
}

// ---------------------------------------------------------------------------
// dense univariate helpers (coefficient vectors, index = degree)

namespace {

using Upoly = std::vector<Rat>; // u[i] = coefficient of t^i; empty = zero

void utrim(Upoly& u) {
    while (!u.empty() && u.back() == 0) u.pop_back();
}

int udeg(const Upoly& u) { return static_cast<int>(u.size()) - 1; }

Upoly uderiv(const Upoly& u) {
    Upoly d;
    for (std::size_t i = 1; i < u.size(); ++i) d.push_back(u[i] * Rat(static_cast<long>(i)));
    utrim(d);
    return d;
}

Upoly umul(const Upoly& a, const Upoly& b) {
    if (a.empty() || b.empty()) return {};
    Upoly c(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    utrim(c);
    return c;
}

Upoly usub(Upoly a, const Upoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    utrim(a);
    return a;
}

// division with remainder; quotient discarded unless wanted
std::pair<Upoly, Upoly> udivmod(Upoly a, const Upoly& b) {
    if (b.empty()) throw ArgumentError("univariate division by zero");
    Upoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
    while (!a.empty() && a.size() >= b.size()) {
        const Rat f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        utrim(a);
    }
    utrim(q);
    return {q, a};
}

Upoly udiv_exact(const Upoly& a, const Upoly& b) {
    auto [q, r] = udivmod(a, b);
    if (!r.empty()) throw ArgumentError("univariate division not exact");
    return q;
}

Upoly umonic(Upoly a) {
    if (a.empty()) return a;
    const Rat lc = a.back();
    for (auto& c : a) c /= lc;
    return a;
}

Upoly ugcd(Upoly a, Upoly b) {
    while (!b.empty()) {
        auto [q, r] = udivmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return umonic(a);
}

// Yun's squarefree decomposition: p = lc * prod f_i^i with f_i monic and
// pairwise coprime squarefree; returns the list f_1..f_k (possibly trivial).
std::vector<Upoly> yun_squarefree(const Upoly& p) {
    std::vector<Upoly> out;
    if (udeg(p) < 1) return out;
    Upoly f = umonic(p);
    Upoly fp = uderiv(f);
    Upoly a = ugcd(f, fp);
    Upoly b = udiv_exact(f, a);
    Upoly c = udiv_exact(fp, a);
    Upoly d = usub(c, uderiv(b));
    while (udeg(b) > 0) {
        Upoly fi = ugcd(b, d);
        out.push_back(fi);
        b = udiv_exact(b, fi);
        c = udiv_exact(d, fi);
        d = usub(c, uderiv(b));
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------

Poly resultant(const Poly& p, const Poly& q, const std::string& var) {
    if (p.is_zero() || q.is_zero())
        throw ArgumentError("resultant: inputs must be nonzero");
    if (p.vars() != q.vars())
        throw ArgumentError("resultant: operands over different variable sets");
    const std::size_t v = p.var_index(var);
    const int dp = p.degree_in(v), dq = q.degree_in(v);
    if (dp == 0 && dq == 0)
        throw ArgumentError("resultant: variable '" + var + "' absent from both inputs");
    if (dp == 0) return p.pow(dq);
    if (dq == 0) return q.pow(dp);

    std::vector<Poly> cp, cq;
    for (int i = 0; i <= dp; ++i) cp.push_back(p.coefficient_of(v, i));
    for (int i = 0; i <= dq; ++i) cq.push_back(q.coefficient_of(v, i));

    const std::size_t n = static_cast<std::size_t>(dp + dq);
    PolyMatrix s(n, n, p.vars());
    for (int r = 0; r < dq; ++r)
        for (int i = 0; i <= dp; ++i) s.set(r, r + i, cp[dp - i]);
    for (int r = 0; r < dp; ++r)
        for (int i = 0; i <= dq; ++i) s.set(dq + r, r + i, cq[dq - i]);
    return poly_det(s);
}

namespace {

// view a polynomial that involves only `var` as a dense univariate
Upoly to_upoly(const Poly& p, std::size_t v) {
    Upoly u(static_cast<std::size_t>(p.degree_in(v)) + 1, Rat(0));
    if (p.is_zero()) return {};
    for (const auto& [m, c] : p.terms()) {
        if (mono_degree(m) != m[v])
            throw ArgumentError("expected a univariate polynomial");
        u[static_cast<std::size_t>(m[v])] = c;
    }
    utrim(u);
    return u;
}

Poly from_upoly(const Upoly& u, const std::vector<std::string>& vars, std::size_t v) {
    Poly p(vars);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        Mono m(vars.size(), 0);
        m[v] = static_cast<int>(i);
        p.add_term(m, u[i]);
    }
    return p;
}

} // namespace

Poly univariate_gcd(const Poly& a, const Poly& b, const std::string& var) {
    if (a.vars() != b.vars())
        throw ArgumentError("univariate_gcd: operands over different variable sets");
    const std::size_t v = a.var_index(var);
    Upoly g = ugcd(to_upoly(a, v), to_upoly(b, v));
    return from_upoly(g, a.vars(), v);
}

std::pair<Poly, Poly> square_part(const Poly& b) {
    if (b.is_zero()) throw ArgumentError("square_part: zero input");
    int deg = -1;
    if (!b.is_homogeneous(&deg))
        throw ArgumentError("square_part: input is not a form");
    // locate the (at most two) variables that actually occur
    std::vector<std::size_t> used;
    for (std::size_t i = 0; i < b.nvars(); ++i)
        if (b.degree_in(i) > 0) used.push_back(i);
    if (used.size() > 2)
        throw ArgumentError("square_part: more than two variables occur");
    const auto& vars = b.vars();
    if (used.empty()) {
        // nonzero constant: already squarefree of degree 0
        return {Poly::constant(vars, 1), b};
    }
    const std::size_t vx = used[0];
    // dehomogenize against the second variable (or absorb a pure power)
    Upoly p(static_cast<std::size_t>(deg) + 1, Rat(0));
    for (const auto& [m, c] : b.terms()) p[static_cast<std::size_t>(m[vx])] = c;
    utrim(p);
    int ymult = deg - udeg(p); // multiplicity of the second variable
    int pdeg = udeg(p);

    const auto factors = yun_squarefree(p);
    Upoly guni{Rat(1)};
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const int mult = static_cast<int>(i) + 1;
        for (int k = 0; k < mult / 2; ++k) guni = umul(guni, factors[i]);
    }
    Upoly runi = udiv_exact(p, umul(guni, guni));

    // homogenize back; multiplicativity holds because leading terms never cancel
    auto homogenize = [&](const Upoly& u, int ypow) {
        Poly out(vars);
        const int du = udeg(u);
        for (int i = 0; i <= du; ++i) {
            if (u[static_cast<std::size_t>(i)] == 0) continue;
            Mono m(vars.size(), 0);
            m[vx] = i;
            if (used.size() == 2) m[used[1]] = du - i + ypow;
            else if (du - i + ypow != 0)
                throw ArgumentError("square_part: inconsistent single-variable form");
            out.add_term(m, u[static_cast<std::size_t>(i)]);
        }
        return out;
    };
    if (used.size() == 1 && ymult != 0)
        throw ArgumentError("square_part: inconsistent form");
    Poly g = homogenize(guni, ymult / 2);
    Poly r = homogenize(runi, ymult % 2);
    return {g, r};
}

namespace {

struct BinaryView {
    std::size_t vx, vy; // variable indices (vy == vx when only one occurs)
    bool two_vars;
    Upoly dehom;        // coefficients against vx
    int ymult;          // multiplicity of the second variable
    int degree;
};

BinaryView binary_view(const Poly& b, std::size_t vx_hint, std::size_t vy_hint, bool have_hint) {
    if (b.is_zero()) throw ArgumentError("binary form expected, got zero");
    int deg = -1;
    if (!b.is_homogeneous(&deg)) throw ArgumentError("binary form expected");
    std::vector<std::size_t> used;
    for (std::size_t i = 0; i < b.nvars(); ++i)
        if (b.degree_in(i) > 0) used.push_back(i);
    if (used.size() > 2) throw ArgumentError("binary form expected (three variables occur)");
    BinaryView v;
    if (have_hint) {
        v.vx = vx_hint;
        v.vy = vy_hint;
        v.two_vars = vx_hint != vy_hint;
    } else {
        v.vx = used.empty() ? 0 : used[0];
        v.vy = used.size() > 1 ? used[1] : v.vx;
        v.two_vars = used.size() > 1;
    }
    v.degree = deg < 0 ? 0 : deg;
    Upoly p(static_cast<std::size_t>(v.degree) + 1, Rat(0));
    for (const auto& [m, c] : b.terms()) p[static_cast<std::size_t>(m[v.vx])] = c;
    utrim(p);
    v.dehom = std::move(p);
    v.ymult = v.degree - udeg(v.dehom);
    return v;
}

Poly binary_homogenize(const Upoly& u, const std::vector<std::string>& vars, std::size_t vx,
                       std::size_t vy, int ypow) {
    Poly out(vars);
    const int du = udeg(u);
    for (int i = 0; i <= du; ++i) {
        if (u[static_cast<std::size_t>(i)] == 0) continue;
        Mono m(vars.size(), 0);
        m[vx] = i;
        if (vy != vx) m[vy] += du - i + ypow;
        out.add_term(m, u[static_cast<std::size_t>(i)]);
    }
    return out;
}

} // namespace

Poly binary_form_gcd(const Poly& a, const Poly& b) {
    if (a.vars() != b.vars())
        throw ArgumentError("binary_form_gcd: operands over different variable sets");
    // common two-variable support
    std::vector<std::size_t> used;
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) used.push_back(i);
    if (used.size() > 2) throw ArgumentError("binary_form_gcd: more than two variables occur");
    const std::size_t vx = used.empty() ? 0 : used[0];
    const std::size_t vy = used.size() > 1 ? used[1] : vx;
    BinaryView va = binary_view(a, vx, vy, true);
    BinaryView vb = binary_view(b, vx, vy, true);
    Upoly g = ugcd(va.dehom, vb.dehom);
    const int ym = std::min(va.ymult, vb.ymult);
    return binary_homogenize(g, a.vars(), vx, vy, ym);
}

BinaryFormRoots binary_form_rational_roots(const Poly& b) {
    BinaryView v = binary_view(b, 0, 0, false);
    BinaryFormRoots out;
    const auto& vars = b.vars();
    auto push_root = [&](const Rat& s, const Rat& t, int mult) {
        std::vector<Rat> pt(vars.size(), Rat(0));
        pt[v.vx] = s;
        if (v.vy != v.vx) pt[v.vy] = t;
        out.roots.emplace_back(std::move(pt), mult);
    };
    // root at (1:0): multiplicity of the second variable
    if (v.ymult > 0) push_root(Rat(1), Rat(0), v.ymult);
    Upoly p = v.dehom;
    // root at (0:1): power of the first variable
    int xmult = 0;
    while (!p.empty() && p[0] == 0) {
        Upoly q(p.begin() + 1, p.end());
        p = std::move(q);
        ++xmult;
    }
    if (xmult > 0) push_root(Rat(0), Rat(1), xmult);
    // rational roots s/t of the remaining integer-primitive polynomial
    if (udeg(p) >= 1) {
        Int lcm(1);
        for (const auto& c : p) lcm = boost::multiprecision::lcm(lcm, rat_den(c));
        std::vector<Int> ip;
        for (const auto& c : p) ip.push_back(rat_num(c) * (lcm / rat_den(c)));
        auto divisors = [](Int n) {
            std::vector<Int> ds;
            n = boost::multiprecision::abs(n);
            for (Int d = 1; d * d <= n; ++d) {
                if (n % d == 0) {
                    ds.push_back(d);
                    ds.push_back(n / d);
                }
            }
            return ds;
        };
        const auto nums = divisors(ip.front());
        const auto dens = divisors(ip.back());
        for (const auto& nu : nums) {
            for (const auto& de : dens) {
                for (int sign : {1, -1}) {
                    const Rat cand(nu * sign, de);
                    int mult = 0;
                    for (;;) {
                        // synthetic evaluation and deflation
                        Rat val(0);
                        for (auto it = p.rbegin(); it != p.rend(); ++it) val = val * cand + *it;
                        if (val != 0 || udeg(p) < 1) break;
                        Upoly quo(p.size() - 1, Rat(0));
                        Rat carry(0);
                        for (std::size_t i = p.size(); i-- > 1;) {
                            carry = p[i] + carry * cand;
                            quo[i - 1] = carry;
                        }
                        p = std::move(quo);
                        ++mult;
                    }
                    if (mult > 0) push_root(cand, Rat(1), mult);
                }
            }
        }
    }
    out.cofactor = binary_homogenize(p, vars, v.vx, v.vy, 0);
    return out;
}

} // namespace ctm
