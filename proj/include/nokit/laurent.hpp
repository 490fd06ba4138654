#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "field.hpp"

namespace nokit {

using Exponent = std::vector<int>;

// Names of the variables of a polynomial ring, e.g. partition strings plus "t" or "q".
struct VarSpace {
    std::vector<std::string> names;

    std::size_t size() const { return names.size(); }
    std::optional<std::size_t> index_of(const std::string& s) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == s) return i;
        return std::nullopt;
    }
};

template <class Coeff = mpz_class>
struct Monomial {
    Coeff coeff;
    Exponent exps;
};

template <class Coeff = mpz_class>
class LaurentPoly {
public:
    using Term = Monomial<Coeff>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

    static LaurentPoly constant(std::size_t nvars, const Coeff& c) {
        LaurentPoly p(nvars);
        if (c != 0) p.terms_.emplace(Exponent(nvars, 0), c);
        return p;
    }
    static LaurentPoly monomial(const Exponent& e, const Coeff& c = Coeff(1)) {
        LaurentPoly p(e.size());
        if (c != 0) p.terms_.emplace(e, c);
        return p;
    }
    static LaurentPoly variable(std::size_t nvars, std::size_t i, int power = 1) {
        Exponent e(nvars, 0);
        e.at(i) = power;
        return monomial(e);
    }

    std::size_t nvars() const { return nvars_; }
    std::size_t num_terms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponent, Coeff>& terms() const { return terms_; }

    Coeff coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    void add_term(const Exponent& e, const Coeff& c) {
        check_arity(e.size());
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        adopt(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        adopt(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const {
        LaurentPoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return LaurentPoly(std::max(a.nvars_, b.nvars_));
        if (a.nvars_ != b.nvars_) throw std::invalid_argument("LaurentPoly: variable count mismatch");
        LaurentPoly r(a.nvars_);
        Exponent e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator*(const Coeff& s, const LaurentPoly& p) {
        LaurentPoly r(p.nvars_);
        if (s == 0) return r;
        for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, s * c);
        return r;
    }

    LaurentPoly pow(unsigned m) const {
        LaurentPoly r = constant(nvars_, Coeff(1)), b = *this;
        while (m) {
            if (m & 1) r *= b;
            m >>= 1;
            if (m) b *= b;
        }
        return r;
    }

    // Inverse of a single term.
    LaurentPoly monomial_inverse() const {
        if (terms_.size() != 1) throw std::domain_error("monomial_inverse: not a monomial");
        const auto& [e, c] = *terms_.begin();
        if (c != 1 && c != -1) throw std::domain_error("monomial_inverse: coefficient not a unit");
        Exponent ne(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
        return monomial(ne, c);
    }

    bool operator==(const LaurentPoly& o) const {
        if (is_zero() && o.is_zero()) return true;
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    bool has_positive_coefficients() const {
        for (const auto& [e, c] : terms_)
            if (c <= 0) return false;
        return true;
    }
    bool is_polynomial() const {
        for (const auto& [e, c] : terms_)
            for (int x : e)
                if (x < 0) return false;
        return true;
    }

    // Monomial map: variable i becomes the monomial images[i] in a ring with target_nvars variables.
    LaurentPoly substitute_monomials(const std::vector<Exponent>& images, std::size_t target_nvars) const {
        if (images.size() != nvars_) throw std::invalid_argument("substitute_monomials: wrong image count");
        LaurentPoly r(target_nvars);
        Exponent ne(target_nvars);
        for (const auto& [e, c] : terms_) {
            std::fill(ne.begin(), ne.end(), 0);
            for (std::size_t i = 0; i < nvars_; ++i)
                if (e[i])
                    for (std::size_t j = 0; j < target_nvars; ++j) ne[j] += e[i] * images[i][j];
            r.add_term(ne, c);
        }
        return r;
    }

    std::string str(const VarSpace& vs) const {
        if (vs.size() != nvars_ && !is_zero()) throw std::invalid_argument("str: variable space mismatch");
        if (is_zero()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += ' ';
            out += (c < 0 ? "-" : "+");
            Coeff a = c < 0 ? Coeff(-c) : c;
            std::ostringstream os;
            os << a;
            out += os.str();
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i]) out += " * (" + vs.names[i] + ")^{" + std::to_string(e[i]) + "}";
        }
        return out;
    }

    static LaurentPoly parse(const std::string& s, const VarSpace& vs) {
        LaurentPoly r(vs.size());
        std::size_t i = 0;
        auto skip = [&] {
            while (i < s.size() && s[i] == ' ') ++i;
        };
        auto fail = [&](const char* what) { throw std::invalid_argument(std::string("LaurentPoly::parse: ") + what + " in '" + s + "'"); };
        skip();
        if (s.substr(i) == "0") return r;
        while (i < s.size()) {
            skip();
            if (i >= s.size()) break;
            if (s[i] != '+' && s[i] != '-') fail("expected sign");
            bool neg = s[i] == '-';
            ++i;
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i) fail("expected coefficient");
            Coeff c(s.substr(i, j - i));
            if (neg) c = -c;
            i = j;
            Exponent e(vs.size(), 0);
            for (;;) {
                std::size_t save = i;
                skip();
                if (i + 1 < s.size() && s[i] == '*') {
                    i += 1;
                    skip();
                    if (s[i] != '(') fail("expected (");
                    std::size_t close = s.find(")^{", i);
                    if (close == std::string::npos) fail("expected )^{");
                    std::string name = s.substr(i + 1, close - i - 1);
                    auto idx = vs.index_of(name);
                    if (!idx) fail("unknown variable");
                    std::size_t end = s.find('}', close);
                    if (end == std::string::npos) fail("expected }");
                    e[*idx] += std::stoi(s.substr(close + 3, end - close - 3));
                    i = end + 1;
                } else {
                    i = save;
                    break;
                }
            }
            r.add_term(e, c);
        }
        return r;
    }

private:
    void check_arity(std::size_t m) {
        if (terms_.empty() && nvars_ == 0) nvars_ = m;
        if (m != nvars_) throw std::invalid_argument("LaurentPoly: exponent length mismatch");
    }
    void adopt(const LaurentPoly& o) {
        if (terms_.empty() && nvars_ == 0) nvars_ = o.nvars_;
        if (!o.is_zero() && o.nvars_ != nvars_) throw std::invalid_argument("LaurentPoly: variable count mismatch");
    }

    std::size_t nvars_ = 0;
    std::map<Exponent, Coeff> terms_;
};

using Poly = LaurentPoly<mpz_class>;

template <class F, class Coeff>
F coeff_to_field(const Coeff& c) {
    if constexpr (std::is_same_v<F, Fp>) return Fp::from(mpz_class(c));
    else return F(c);
}

// Evaluates at a point of a field; negative exponents need invertible values.
template <class F, class Coeff>
F evaluate(const LaurentPoly<Coeff>& p, const std::vector<F>& point) {
    if (point.size() != p.nvars() && !p.is_zero()) throw std::invalid_argument("evaluate: point dimension mismatch");
    std::vector<std::optional<F>> inv(point.size());
    F total(0);
    for (const auto& [e, c] : p.terms()) {
        F t = coeff_to_field<F>(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            F base = point[i];
            if (e[i] < 0) {
                if (!inv[i]) {
                    if (is_zero(point[i])) throw std::domain_error("evaluate: zero value at a negatively exponentiated variable");
                    inv[i] = field_inv(point[i]);
                }
                base = *inv[i];
            }
            int m = e[i] < 0 ? -e[i] : e[i];
            for (int k = 0; k < m; ++k) t = t * base;
        }
        total = total + t;
    }
    return total;
}

template <class Coeff>
Fp eval_mod_p(const LaurentPoly<Coeff>& p, const std::vector<Fp>& point) {
    return evaluate<Fp>(p, point);
}

template <class Coeff>
std::optional<Monomial<Coeff>> strongly_min_term(const LaurentPoly<Coeff>& p) {
    if (p.is_zero()) throw std::domain_error("strongly_min_term: zero polynomial");
    Exponent m = p.terms().begin()->first;
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    auto it = p.terms().find(m);
    if (it == p.terms().end()) return std::nullopt;
    return Monomial<Coeff>{it->second, it->first};
}

template <class Coeff>
std::optional<Monomial<Coeff>> strongly_max_term(const LaurentPoly<Coeff>& p) {
    if (p.is_zero()) throw std::domain_error("strongly_max_term: zero polynomial");
    Exponent m = p.terms().begin()->first;
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::max(m[i], e[i]);
    auto it = p.terms().find(m);
    if (it == p.terms().end()) return std::nullopt;
    return Monomial<Coeff>{it->second, it->first};
}

// a . y + rcoef * r + c
struct AffineForm {
    std::vector<mpq_class> a;
    mpq_class rcoef = 0;
    mpq_class c = 0;

    mpq_class operator()(const std::vector<mpq_class>& y, const mpq_class& r = 0) const {
        mpq_class s = c + rcoef * r;
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * y[i];
        s.canonicalize();
        return s;
    }
    bool operator==(const AffineForm&) const = default;
};

struct TropForm {
    std::vector<AffineForm> forms;

    mpq_class operator()(const std::vector<mpq_class>& y, const mpq_class& r = 0) const {
        if (forms.empty()) throw std::logic_error("TropForm: empty");
        mpq_class m = forms[0](y, r);
        for (std::size_t i = 1; i < forms.size(); ++i) m = std::min(m, forms[i](y, r));
        return m;
    }
};

// One affine form per exponent vector; the variable r_slot (if any) becomes the r coefficient.
template <class Coeff>
TropForm tropicalize(const LaurentPoly<Coeff>& p, std::optional<std::size_t> r_slot = std::nullopt) {
    if (p.is_zero()) throw std::domain_error("tropicalize: zero polynomial");
    if (!p.has_positive_coefficients()) throw std::domain_error("tropicalize: coefficients must be positive");
    TropForm t;
    for (const auto& [e, c] : p.terms()) {
        AffineForm f;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (r_slot && *r_slot == i) f.rcoef = e[i];
            else f.a.push_back(e[i]);
        }
        t.forms.push_back(std::move(f));
    }
    return t;
}

}  // namespace nokit
