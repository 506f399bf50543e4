#ifndef CTM_POLY_HPP
#define CTM_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "ctm/rat.hpp"

namespace ctm {

/// Exponent vector; length always equals the number of variables of the
/// owning polynomial.
using Mono = std::vector<int>;

inline int mono_degree(const Mono& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

/// Graded lexicographic order: total degree first, then lex on exponents.
/// Using a canonical order makes polynomial equality structural equality.
struct GradedLex {
    bool operator()(const Mono& a, const Mono& b) const {
        const int da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

using TermMap = std::map<Mono, Rat, GradedLex>;

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed, ordered variable list. Zero coefficients are never stored.
/// Values are immutable in spirit: every operation returns a new Poly, so
/// instances can be shared freely across threads.
class Poly {
public:
    Poly() = default; // zero polynomial over the empty variable list
    explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Poly zero(std::vector<std::string> vars) { return Poly(std::move(vars)); }
    static Poly constant(std::vector<std::string> vars, const Rat& c);
    static Poly variable(const std::vector<std::string>& vars, const std::string& name);
    static Poly monomial(std::vector<std::string> vars, Mono m, const Rat& c);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Index of a variable name; throws ArgumentError if absent.
    std::size_t var_index(const std::string& name) const;

    Rat coeff(const Mono& m) const;
    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(std::size_t var) const;
    /// True iff every term has the same total degree (zero counts as
    /// homogeneous of any degree). If deg is non-null it receives the degree.
    bool is_homogeneous(int* deg = nullptr) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    Poly operator/(const Rat& c) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(int e) const;
    Poly derivative(std::size_t var) const;

    Rat eval(const std::vector<Rat>& point) const;

    /// Substitute values[i] (a polynomial over the same variable set) for
    /// variable i whenever values[i] is non-null.
    Poly substitute(const std::vector<const Poly*>& values) const;

    /// x_i -> sum_j m[i][j] x_j (m is nvars x nvars, exact).
    Poly linear_change(const std::vector<std::vector<Rat>>& m) const;

    /// Keep only listed variables (in the given order); every discarded
    /// variable must have exponent 0 in all terms.
    Poly restrict_to(const std::vector<std::string>& keep) const;

    /// Re-express over a superset of variables (each current variable must
    /// appear in `sup`).
    Poly lift_to(const std::vector<std::string>& sup) const;

    /// Extract the coefficient of x_i^k x_j^l as a polynomial in the
    /// remaining variables (exponents of i and j dropped to zero).
    Poly coefficient_of(std::size_t var, int k) const;

    /// Text form, e.g. "x0^2*x2 + -7/16*x2^3". Round-trips with parse_poly.
    std::string str() const;

    void add_term(const Mono& m, const Rat& c); // building block for parsers

private:
    void check_same_vars(const Poly& o) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

/// Standard variable sets used throughout: cubic threefolds live in
/// x0..x4, plane curves in x2,x3,x4.
const std::vector<std::string>& vars_p4();
const std::vector<std::string>& vars_p2();

/// Parse the term-list text format ("-7/16*x0^2*x2 + x4^3", '-' separators
/// also accepted) over the given variable set.
Poly parse_poly(const std::string& text, const std::vector<std::string>& vars);

std::ostream& operator<<(std::ostream& os, const Poly& p);

} // namespace ctm

#endif
