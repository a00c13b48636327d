#pragma once

#include <map>

#include "manin/matrix.hpp"

namespace manin {

/// Sparse multivariate polynomial with exact rational coefficients.
/// Monomials are exponent vectors of fixed length; zero coefficients are
/// never stored, so equality is structural.
class Poly {
public:
    using Key = std::vector<unsigned>;

    explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const Rational& c) {
        Poly p(nvars);
        p.add_term(Key(nvars, 0), c);
        return p;
    }
    static Poly variable(std::size_t nvars, std::size_t i) {
        Poly p(nvars);
        Key k(nvars, 0);
        k.at(i) = 1;
        p.add_term(k, 1);
        return p;
    }
    static Poly monomial(std::size_t nvars, const Key& exps, const Rational& c) {
        if (exps.size() != nvars) throw std::invalid_argument("exponent vector length mismatch");
        Poly p(nvars);
        p.add_term(exps, c);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Rational>& terms() const { return terms_; }

    void add_term(const Key& k, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly operator+(const Poly& o) const {
        check(o);
        Poly r = *this;
        for (const auto& [k, c] : o.terms_) r.add_term(k, c);
        return r;
    }
    Poly operator-(const Poly& o) const { return *this + o * Rational(-1); }
    Poly operator*(const Rational& s) const {
        Poly r(nvars_);
        if (s == 0) return r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
        return r;
    }
    Poly operator*(const Poly& o) const {
        check(o);
        Poly r(nvars_);
        for (const auto& [k1, c1] : terms_)
            for (const auto& [k2, c2] : o.terms_) {
                Key k = k1;
                for (std::size_t i = 0; i < nvars_; ++i) k[i] += k2[i];
                r.add_term(k, c1 * c2);
            }
        return r;
    }

    Poly partial(std::size_t i) const {
        Poly r(nvars_);
        for (const auto& [k, c] : terms_) {
            if (k[i] == 0) continue;
            Key d = k;
            --d[i];
            r.add_term(d, c * Rational(k[i]));
        }
        return r;
    }

    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += to_string(c);
            for (std::size_t i = 0; i < nvars_; ++i)
                if (k[i] > 0) s += "*x" + std::to_string(i) + "^" + std::to_string(k[i]);
        }
        return s;
    }

private:
    void check(const Poly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    }

    std::size_t nvars_;
    std::map<Key, Rational> terms_;
};

using PolyVec = std::vector<Poly>;

inline PolyVec poly_vec(std::size_t len, std::size_t nvars) {
    return PolyVec(len, Poly(nvars));
}

/// Polynomial multivector field on affine n-space: a sum of terms
/// f(x) d_{i1} ^ ... ^ d_{ip} with strictly increasing index tuples.
class PolyMultivector {
public:
    using Key = std::vector<std::size_t>;

    PolyMultivector(std::size_t nvars, std::size_t degree) : nvars_(nvars), degree_(degree) {}

    std::size_t nvars() const { return nvars_; }
    std::size_t degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Poly>& terms() const { return terms_; }

    void add_term(Key key, Poly coeff) {
        if (key.size() != degree_) throw std::invalid_argument("wrong multivector degree");
        if (coeff.nvars() != nvars_) throw std::invalid_argument("variable count mismatch");
        // Sort the indices, tracking the permutation sign; repeated indices kill the term.
        int sign = 1;
        for (std::size_t i = 0; i + 1 < key.size(); ++i)
            for (std::size_t j = 0; j + 1 < key.size() - i; ++j) {
                if (key[j] == key[j + 1]) return;
                if (key[j] > key[j + 1]) {
                    std::swap(key[j], key[j + 1]);
                    sign = -sign;
                }
            }
        for (std::size_t i = 0; i + 1 < key.size(); ++i)
            if (key[i] == key[i + 1]) return;
        if (sign < 0) coeff = coeff * Rational(-1);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            if (!coeff.is_zero()) terms_.emplace(std::move(key), std::move(coeff));
        } else {
            it->second = it->second + coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    PolyMultivector operator+(const PolyMultivector& o) const {
        if (nvars_ != o.nvars_ || degree_ != o.degree_)
            throw std::invalid_argument("multivector shape mismatch");
        PolyMultivector r = *this;
        for (const auto& [k, c] : o.terms_) r.add_term(k, c);
        return r;
    }
    PolyMultivector operator*(const Rational& s) const {
        PolyMultivector r(nvars_, degree_);
        for (const auto& [k, c] : terms_) r.add_term(k, c * s);
        return r;
    }
    PolyMultivector operator-(const PolyMultivector& o) const { return *this + o * Rational(-1); }
    bool operator==(const PolyMultivector& o) const {
        return nvars_ == o.nvars_ && degree_ == o.degree_ && terms_ == o.terms_;
    }

private:
    std::size_t nvars_;
    std::size_t degree_;
    std::map<Key, Poly> terms_;
};

/// Left derivative with respect to the odd generator i: removes index i
/// with the sign of its position. Returns terms of degree - 1.
inline PolyMultivector odd_partial(const PolyMultivector& p, std::size_t i) {
    if (p.degree() == 0) return PolyMultivector(p.nvars(), 0);
    PolyMultivector r(p.nvars(), p.degree() - 1);
    for (const auto& [key, coeff] : p.terms())
        for (std::size_t pos = 0; pos < key.size(); ++pos)
            if (key[pos] == i) {
                auto rest = key;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
                r.add_term(rest, pos % 2 == 0 ? coeff : coeff * Rational(-1));
                break;
            }
    return r;
}

inline PolyMultivector even_partial(const PolyMultivector& p, std::size_t i) {
    PolyMultivector r(p.nvars(), p.degree());
    for (const auto& [key, coeff] : p.terms()) r.add_term(key, coeff.partial(i));
    return r;
}

inline PolyMultivector wedge(const PolyMultivector& a, const PolyMultivector& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("variable count mismatch");
    PolyMultivector r(a.nvars(), a.degree() + b.degree());
    for (const auto& [k1, c1] : a.terms())
        for (const auto& [k2, c2] : b.terms()) {
            auto key = k1;
            key.insert(key.end(), k2.begin(), k2.end());
            r.add_term(key, c1 * c2);
        }
    return r;
}

/// Schouten-Nijenhuis bracket of polynomial multivector fields, realized as
/// the odd Poisson bracket sum_i d_{xi_i}(a) d_{x_i}(b) antisymmetrized with
/// the graded sign. Restricts to the Lie bracket on vector fields and to the
/// directional derivative against functions.
inline PolyMultivector schouten_poly(const PolyMultivector& a, const PolyMultivector& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("variable count mismatch");
    if (a.degree() + b.degree() == 0) return PolyMultivector(a.nvars(), 0);
    std::size_t deg = a.degree() + b.degree() - 1;
    PolyMultivector r(a.nvars(), deg);
    auto half = [&](const PolyMultivector& p, const PolyMultivector& q) {
        PolyMultivector s(p.nvars(), deg);
        if (p.degree() == 0) return s;
        for (std::size_t i = 0; i < p.nvars(); ++i)
            s = s + wedge(odd_partial(p, i), even_partial(q, i));
        return s;
    };
    int sgn = ((a.degree() + 1) * (b.degree() + 1)) % 2 == 0 ? 1 : -1;
    return half(a, b) - half(b, a) * Rational(sgn);
}

}  // namespace manin
