#include "ctm/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace ctm {

Poly Poly::constant(std::vector<std::string> vars, const Rat& c) {
    Poly p(std::move(vars));
    if (c != 0) p.terms_[Mono(p.nvars(), 0)] = c;
    return p;
}

Poly Poly::variable(const std::vector<std::string>& vars, const std::string& name) {
    Poly p(vars);
    Mono m(vars.size(), 0);
    m[p.var_index(name)] = 1;
    p.terms_[m] = 1;
    return p;
}

Poly Poly::monomial(std::vector<std::string> vars, Mono m, const Rat& c) {
    Poly p(std::move(vars));
    if (m.size() != p.nvars()) throw ArgumentError("Poly::monomial: exponent length mismatch");
    for (int e : m)
        if (e < 0) throw ArgumentError("Poly::monomial: negative exponent");
    if (c != 0) p.terms_[std::move(m)] = c;
    return p;
}

std::size_t Poly::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    throw ArgumentError("unknown variable '" + name + "'");
}

Rat Poly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    // graded order: the last term has maximal degree
    return mono_degree(terms_.rbegin()->first);
}

int Poly::degree_in(std::size_t var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

bool Poly::is_homogeneous(int* deg) const {
    if (terms_.empty()) {
        if (deg) *deg = -1;
        return true;
    }
    const int d = mono_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (mono_degree(m) != d) return false;
    if (deg) *deg = d;
    return true;
}

void Poly::check_same_vars(const Poly& o) const {
    if (vars_ != o.vars_)
        throw ArgumentError("polynomial operation across different variable sets");
}

Poly Poly::operator-() const {
    Poly out(vars_);
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_vars(o);
    Poly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    check_same_vars(o);
    Poly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_vars(o);
    Poly out(vars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Mono m(ma);
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Poly Poly::operator*(const Rat& c) const {
    Poly out(vars_);
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_[m] = k * c;
    return out;
}

Poly Poly::operator/(const Rat& c) const {
    if (c == 0) throw ArgumentError("Poly: division by zero scalar");
    return *this * (Rat(1) / c);
}

Poly Poly::pow(int e) const {
    if (e < 0) throw ArgumentError("Poly::pow: negative exponent");
    Poly out = Poly::constant(vars_, 1);
    Poly b = *this;
    while (e > 0) {
        if (e & 1) out = out * b;
        if (e >>= 1) b = b * b;
    }
    return out;
}

Poly Poly::derivative(std::size_t var) const {
    Poly out(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Mono d(m);
        --d[var];
        out.add_term(d, c * m[var]);
    }
    return out;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
    if (point.size() != nvars()) throw ArgumentError("Poly::eval: point dimension mismatch");
    Rat out(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) t *= rat_pow(point[i], m[i]);
        out += t;
    }
    return out;
}

Poly Poly::substitute(const std::vector<const Poly*>& values) const {
    if (values.size() != nvars()) throw ArgumentError("Poly::substitute: value count mismatch");
    // cache powers of each substituted variable
    std::vector<std::vector<Poly>> powers(nvars());
    Poly out(vars_);
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(vars_, c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (values[i] == nullptr) {
                Mono mi(nvars(), 0);
                mi[i] = m[i];
                t = t * Poly::monomial(vars_, mi, 1);
                continue;
            }
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(Poly::constant(vars_, 1));
            while (static_cast<int>(pw.size()) <= m[i]) pw.push_back(pw.back() * *values[i]);
            t = t * pw[m[i]];
        }
        out += t;
    }
    return out;
}

Poly Poly::linear_change(const std::vector<std::vector<Rat>>& mt) const {
    if (mt.size() != nvars()) throw ArgumentError("linear_change: matrix size mismatch");
    std::vector<Poly> images;
    images.reserve(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
        if (mt[i].size() != nvars()) throw ArgumentError("linear_change: matrix size mismatch");
        Poly im(vars_);
        for (std::size_t j = 0; j < nvars(); ++j) {
            if (mt[i][j] == 0) continue;
            Mono m(nvars(), 0);
            m[j] = 1;
            im.add_term(m, mt[i][j]);
        }
        images.push_back(std::move(im));
    }
    std::vector<const Poly*> vals(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) vals[i] = &images[i];
    return substitute(vals);
}

Poly Poly::restrict_to(const std::vector<std::string>& keep) const {
    std::vector<std::size_t> idx;
    idx.reserve(keep.size());
    for (const auto& n : keep) idx.push_back(var_index(n));
    Poly out(keep);
    for (const auto& [m, c] : terms_) {
        Mono r(keep.size(), 0);
        int carried = 0;
        for (std::size_t k = 0; k < idx.size(); ++k) {
            r[k] = m[idx[k]];
            carried += m[idx[k]];
        }
        if (carried != mono_degree(m))
            throw ArgumentError("restrict_to: discarded variable occurs in a term");
        out.add_term(r, c);
    }
    return out;
}

Poly Poly::lift_to(const std::vector<std::string>& sup) const {
    Poly out(sup);
    std::vector<std::size_t> pos;
    pos.reserve(nvars());
    for (const auto& n : vars_) pos.push_back(out.var_index(n));
    for (const auto& [m, c] : terms_) {
        Mono l(sup.size(), 0);
        for (std::size_t k = 0; k < m.size(); ++k) l[pos[k]] = m[k];
        out.add_term(l, c);
    }
    return out;
}

Poly Poly::coefficient_of(std::size_t var, int k) const {
    Poly out(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] != k) continue;
        Mono r(m);
        r[var] = 0;
        out.add_term(r, c);
    }
    return out;
}

void Poly::add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest degree first, the way the families are written
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) {
            os << rat_to_string(c);
        } else if (c == 1) {
            os << mono;
        } else if (c == -1) {
            os << "-" << mono;
        } else {
            os << rat_to_string(c) << "*" << mono;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

const std::vector<std::string>& vars_p4() {
    static const std::vector<std::string> v{"x0", "x1", "x2", "x3", "x4"};
    return v;
}

const std::vector<std::string>& vars_p2() {
    static const std::vector<std::string> v{"x2", "x3", "x4"};
    return v;
}

namespace {

// one factor of a term: variable name or rational literal, with exponent
struct Factor {
    std::string text;
    int exp = 1;
};

void parse_term(const std::string& term, Poly& out) {
    const auto& vars = out.vars();
    std::vector<Factor> factors;
    std::size_t i = 0;
    while (i < term.size()) {
        Factor f;
        std::size_t start = i;
        while (i < term.size() && term[i] != '*' && term[i] != '^') ++i;
        f.text = term.substr(start, i - start);
        if (i < term.size() && term[i] == '^') {
            ++i;
            start = i;
            while (i < term.size() && term[i] != '*') ++i;
            f.exp = std::stoi(term.substr(start, i - start));
        }
        if (i < term.size() && term[i] == '*') ++i;
        if (f.text.empty()) throw ArgumentError("parse_poly: empty factor in '" + term + "'");
        factors.push_back(std::move(f));
    }
    Rat c(1);
    Mono m(vars.size(), 0);
    for (const auto& f : factors) {
        const bool numeric = (std::isdigit(static_cast<unsigned char>(f.text[0])) ||
                              f.text[0] == '-' || f.text[0] == '+') &&
                             f.text != "-";
        if (f.text == "-") {
            c = -c;
        } else if (numeric && f.text.find_first_not_of("+-0123456789/") == std::string::npos) {
            c *= rat_pow(rat_from_string(f.text), f.exp);
        } else {
            std::string name = f.text;
            if (!name.empty() && name[0] == '-') {
                c = -c;
                name = name.substr(1);
            }
            bool found = false;
            for (std::size_t k = 0; k < vars.size(); ++k) {
                if (vars[k] == name) {
                    if (f.exp < 0) throw ArgumentError("parse_poly: negative exponent");
                    m[k] += f.exp;
                    found = true;
                    break;
                }
            }
            if (!found)
                throw ArgumentError("parse_poly: unknown variable '" + name + "'");
        }
    }
    out.add_term(m, c);
}

} // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    std::string t;
    t.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    Poly out(vars);
    if (t.empty() || t == "0") return out;
    // split on top-level + and - (a '-' directly after '*','^','/' or at the
    // start belongs to the factor)
    std::vector<std::string> terms;
    std::string cur;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const char ch = t[i];
        if ((ch == '+' || ch == '-') && i > 0 && t[i - 1] != '*' && t[i - 1] != '^' &&
            t[i - 1] != '/' && t[i - 1] != '+' && t[i - 1] != '-') {
            terms.push_back(cur);
            cur.clear();
            if (ch == '-') cur = "-";
        } else {
            cur += ch;
        }
    }
    terms.push_back(cur);
    for (const auto& term : terms) {
        if (term.empty() || term == "+") continue;
        parse_term(term, out);
    }
    return out;
}

} // namespace ctm
