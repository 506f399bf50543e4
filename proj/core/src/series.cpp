#include "ctm/series.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <unordered_map>

#include "ctm/errors.hpp"

namespace ctm {

TruncSeries::TruncSeries(std::vector<std::string> vars, int order)
    : vars_(std::move(vars)), order_(order) {
    if (order < 1) throw ArgumentError("TruncSeries: order must be positive");
}

TruncSeries TruncSeries::constant(std::vector<std::string> vars, int order, const Rat& c) {
    TruncSeries s(std::move(vars), order);
    if (c != 0) s.terms_[Mono(s.nvars(), 0)] = c;
    return s;
}

TruncSeries TruncSeries::variable(const std::vector<std::string>& vars, int order,
                                  const std::string& name) {
    TruncSeries s(vars, order);
    Poly v = Poly::variable(vars, name);
    if (order > 1) s.terms_ = v.terms();
    return s;
}

TruncSeries TruncSeries::from_poly(const Poly& p, int order) {
    TruncSeries s(p.vars(), order);
    for (const auto& [m, c] : p.terms())
        if (mono_degree(m) < order) s.terms_[m] = c;
    return s;
}

Rat TruncSeries::constant_term() const {
    auto it = terms_.find(Mono(nvars(), 0));
    return it == terms_.end() ? Rat(0) : it->second;
}

int TruncSeries::valuation() const {
    if (terms_.empty()) return order_;
    return mono_degree(terms_.begin()->first);
}

Rat TruncSeries::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void TruncSeries::check_compatible(const TruncSeries& o) const {
    if (vars_ != o.vars_ || order_ != o.order_)
        throw ArgumentError("TruncSeries: operands with different variables or orders");
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries out(vars_, order_);
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    check_compatible(o);
    TruncSeries out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    check_compatible(o);
    TruncSeries out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

namespace {

// packed-exponent fast multiplication: 8 bits per exponent, degree-major
// iteration with early break on the truncation order
struct PackedTerm {
    std::uint64_t key;
    int degree;
    Rat coeff;
};

std::vector<PackedTerm> pack_terms(const TermMap& terms) {
    std::vector<PackedTerm> out;
    out.reserve(terms.size());
    for (const auto& [m, c] : terms) {
        std::uint64_t key = 0;
        int deg = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            key |= static_cast<std::uint64_t>(m[i]) << (8 * i);
            deg += m[i];
        }
        out.push_back(PackedTerm{key, deg, c});
    }
    // TermMap is graded, so `out` is already sorted by degree
    return out;
}

} // namespace

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    check_compatible(o);
    TruncSeries out(vars_, order_);
    if (nvars() <= 8 && order_ <= 200) {
        const auto a = pack_terms(terms_);
        const auto b = pack_terms(o.terms_);
        std::unordered_map<std::uint64_t, Rat> acc;
        acc.reserve(a.size() + b.size());
        for (const auto& ta : a) {
            for (const auto& tb : b) {
                if (ta.degree + tb.degree >= order_) break; // b sorted by degree
                auto [it, fresh] = acc.try_emplace(ta.key + tb.key, Rat(0));
                if (fresh)
                    it->second = ta.coeff * tb.coeff;
                else
                    it->second += ta.coeff * tb.coeff;
            }
        }
        Mono m(nvars(), 0);
        for (auto& [key, c] : acc) {
            if (c == 0) continue;
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = static_cast<int>((key >> (8 * i)) & 0xFF);
            out.terms_.emplace(m, std::move(c));
        }
        return out;
    }
    for (const auto& [ma, ca] : terms_) {
        const int da = mono_degree(ma);
        for (const auto& [mb, cb] : o.terms_) {
            if (da + mono_degree(mb) >= order_) continue;
            Mono m(ma);
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

TruncSeries TruncSeries::operator*(const Rat& c) const {
    TruncSeries out(vars_, order_);
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_[m] = k * c;
    return out;
}

TruncSeries TruncSeries::truncate(int new_order) const {
    TruncSeries out(vars_, new_order);
    for (const auto& [m, c] : terms_)
        if (mono_degree(m) < new_order) out.terms_[m] = c;
    return out;
}

TruncSeries TruncSeries::inverse() const {
    const Rat c0 = constant_term();
    if (c0 == 0) throw NotInvertibleError("TruncSeries::inverse: zero constant term");
    // Newton iteration x <- x(2 - s x) with precision doubling
    TruncSeries x = TruncSeries::constant(vars_, 1, Rat(1) / c0);
    int w = 1;
    while (w < order_) {
        w = std::min(2 * w, order_);
        TruncSeries a = truncate(w);
        TruncSeries two = TruncSeries::constant(vars_, w, 2);
        x = x.truncate(w);
        x = x * (two - a * x);
    }
    return x;
}

TruncSeries TruncSeries::sqrt() const {
    const Rat c0 = constant_term();
    if (c0 == 0)
        throw NotInvertibleError("TruncSeries::sqrt: zero constant term");
    const auto root = rat_sqrt_exact(c0);
    if (!root)
        throw NotInvertibleError(
            "TruncSeries::sqrt: constant term " + rat_to_string(c0) +
            " is not a rational square (rescale coordinates first)");
    // s = c0 (1 + u), sqrt(s) = sqrt(c0) * sum binom(1/2, k) u^k
    TruncSeries u = *this * (Rat(1) / c0) - TruncSeries::constant(vars_, order_, 1);
    TruncSeries out = TruncSeries::constant(vars_, order_, 1);
    TruncSeries upow = TruncSeries::constant(vars_, order_, 1);
    Rat binom(1);
    for (int k = 1; k < order_; ++k) {
        upow = upow * u;
        if (upow.is_zero()) break;
        // binom(1/2, k) = binom(1/2, k-1) * (1/2 - (k-1)) / k
        binom *= (Rat(1, 2) - Rat(k - 1)) / Rat(k);
        out = out + upow * binom;
    }
    return out * *root;
}

TruncSeries TruncSeries::substitute(std::size_t var, const TruncSeries& value) const {
    check_compatible(value);
    if (var >= nvars()) throw ArgumentError("TruncSeries::substitute: bad variable index");
    TruncSeries out(vars_, order_);
    std::vector<TruncSeries> powers{TruncSeries::constant(vars_, order_, 1)};
    for (const auto& [m, c] : terms_) {
        const int k = m[var];
        while (static_cast<int>(powers.size()) <= k)
            powers.push_back(powers.back() * value);
        Mono rest(m);
        rest[var] = 0;
        TruncSeries t(vars_, order_);
        t.add_term(rest, c);
        out = out + t * powers[static_cast<std::size_t>(k)];
    }
    return out;
}

TruncSeries TruncSeries::derivative(std::size_t var) const {
    TruncSeries out(vars_, order_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Mono d(m);
        --d[var];
        out.add_term(d, c * m[var]);
    }
    return out;
}

TruncSeries TruncSeries::without_var(std::size_t var) const {
    std::vector<std::string> nv;
    for (std::size_t i = 0; i < nvars(); ++i)
        if (i != var) nv.push_back(vars_[i]);
    TruncSeries out(nv, order_);
    for (const auto& [m, c] : terms_) {
        if (m[var] != 0)
            throw ArgumentError("TruncSeries::without_var: variable still occurs");
        Mono r;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != var) r.push_back(m[i]);
        out.terms_[r] = c;
    }
    return out;
}

Poly TruncSeries::to_poly() const {
    Poly p(vars_);
    for (const auto& [m, c] : terms_) p.add_term(m, c);
    return p;
}

void TruncSeries::add_term(const Mono& m, const Rat& c) {
    if (c == 0 || mono_degree(m) >= order_) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::string TruncSeries::str() const {
    std::ostringstream os;
    os << to_poly().str() << " + O(deg " << order_ << ")";
    return os.str();
}

} // namespace ctm
