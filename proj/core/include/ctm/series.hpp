#ifndef CTM_SERIES_HPP
#define CTM_SERIES_HPP

#include <string>
#include <vector>

#include "ctm/poly.hpp"

namespace ctm {

/// Multivariate power series truncated at a fixed total degree: only terms
/// of total degree < order are stored. Immutable-style value type like Poly.
class TruncSeries {
public:
    TruncSeries() : order_(1) {}
    TruncSeries(std::vector<std::string> vars, int order);

    static TruncSeries constant(std::vector<std::string> vars, int order, const Rat& c);
    static TruncSeries variable(const std::vector<std::string>& vars, int order,
                                const std::string& name);
    /// Truncate a polynomial (terms of degree >= order are dropped).
    static TruncSeries from_poly(const Poly& p, int order);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    int order() const { return order_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat constant_term() const;
    /// Lowest total degree of a nonzero term; order() when zero.
    int valuation() const;
    Rat coeff(const Mono& m) const;

    TruncSeries operator-() const;
    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries operator*(const Rat& c) const;
    bool operator==(const TruncSeries& o) const {
        return vars_ == o.vars_ && order_ == o.order_ && terms_ == o.terms_;
    }

    TruncSeries truncate(int new_order) const;

    /// Multiplicative inverse; requires a nonzero constant term.
    TruncSeries inverse() const;

    /// Square root with t^2 == *this (mod order); the constant term must be
    /// a nonzero rational square, and the positive root is returned.
    TruncSeries sqrt() const;

    /// Substitute a series (over the same variable set) for one variable.
    /// `value` must have positive valuation or be a shift x_i + higher, i.e.
    /// any series; truncation keeps the result exact through order when
    /// value has valuation >= 1.
    TruncSeries substitute(std::size_t var, const TruncSeries& value) const;

    TruncSeries derivative(std::size_t var) const;

    /// Drop a variable that no longer occurs.
    TruncSeries without_var(std::size_t var) const;

    /// The truncated jet as a polynomial.
    Poly to_poly() const;

    std::string str() const;

    void add_term(const Mono& m, const Rat& c);

private:
    void check_compatible(const TruncSeries& o) const;

    std::vector<std::string> vars_;
    int order_;
    TermMap terms_;
};

inline TruncSeries operator*(const Rat& c, const TruncSeries& s) { return s * c; }

} // namespace ctm

#endif
