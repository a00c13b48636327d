#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "manin/lie.hpp"

namespace manin {

/// Element of the exterior algebra of a Lie algebra, indexed by strictly
/// increasing basis tuples. Degree is fixed; zero coefficients are dropped.
class Multivector {
public:
    using Key = std::vector<std::size_t>;

    Multivector() : dim_(0), degree_(0) {}
    Multivector(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {}

    static Multivector vector(const Vec& x) {
        Multivector m(x.size(), 1);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0) m.terms_[{i}] = x[i];
        return m;
    }
    static Multivector basis_element(std::size_t dim, std::size_t i) {
        return vector(basis_vec(dim, i));
    }
    /// e_i ^ e_j (assumes nothing about order of i, j).
    static Multivector wedge_pair(std::size_t dim, std::size_t i, std::size_t j,
                                  const Rational& coeff = 1) {
        Multivector m(dim, 2);
        m.add_term({i, j}, coeff);
        return m;
    }

    std::size_t dim() const { return dim_; }
    std::size_t degree() const { return degree_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Adds coeff * e_{idx[0]} ^ ... ^ e_{idx[p-1]}, sorting the indices and
    /// tracking the permutation sign; repeated indices contribute nothing.
    void add_term(Key idx, Rational coeff) {
        if (idx.size() != degree_) throw std::invalid_argument("term degree mismatch");
        if (coeff == 0) return;
        int sign = 1;
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a + 1; b < idx.size(); ++b) {
                if (idx[a] == idx[b]) return;
                if (idx[a] > idx[b]) {
                    std::swap(idx[a], idx[b]);
                    sign = -sign;
                }
            }
        Rational& slot = terms_[idx];
        slot += sign > 0 ? coeff : -coeff;
        if (slot == 0) terms_.erase(idx);
    }

    Multivector operator+(const Multivector& o) const {
        require_compatible(o);
        Multivector r = *this;
        for (const auto& [k, v] : o.terms_) {
            Rational& slot = r.terms_[k];
            slot += v;
            if (slot == 0) r.terms_.erase(k);
        }
        return r;
    }
    Multivector operator-(const Multivector& o) const { return *this + (o * Rational(-1)); }
    Multivector operator*(const Rational& s) const {
        Multivector r(dim_, degree_);
        if (s == 0) return r;
        for (const auto& [k, v] : terms_) r.terms_[k] = v * s;
        return r;
    }
    bool operator==(const Multivector& o) const {
        return dim_ == o.dim_ && degree_ == o.degree_ && terms_ == o.terms_;
    }
    bool operator!=(const Multivector& o) const { return !(*this == o); }

    Multivector wedge(const Multivector& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("multivector algebra mismatch");
        Multivector r(dim_, degree_ + o.degree_);
        for (const auto& [ka, va] : terms_)
            for (const auto& [kb, vb] : o.terms_) {
                Key k = ka;
                k.insert(k.end(), kb.begin(), kb.end());
                r.add_term(std::move(k), va * vb);
            }
        return r;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, v] : terms_) {
            os << (first ? "" : " + ") << "(" << to_string(v) << ")";
            for (auto i : k) os << "*" << names[i];
            first = false;
        }
        return os.str();
    }

private:
    void require_compatible(const Multivector& o) const {
        if (dim_ != o.dim_ || degree_ != o.degree_)
            throw std::invalid_argument("multivector shape mismatch");
    }

    std::size_t dim_;
    std::size_t degree_;
    std::map<Key, Rational> terms_;
};

/// Schouten bracket of decomposable terms extended bilinearly:
/// [a_1^...^a_p, b_1^...^b_q] = sum_{i,j} (-1)^{i+j} [a_i, b_j] ^ a_rest ^
/// b_rest with 1-based positions. On degree (1,1) this is the Lie bracket.
inline Multivector schouten(const LieAlgebra& g, const Multivector& a, const Multivector& b) {
    if (a.dim() != g.dim() || b.dim() != g.dim())
        throw std::invalid_argument("multivector algebra mismatch");
    std::size_t p = a.degree(), q = b.degree();
    if (p == 0 || q == 0) return Multivector(g.dim(), p + q == 0 ? 0 : p + q - 1);
    Multivector r(g.dim(), p + q - 1);
    for (const auto& [ka, va] : a.terms())
        for (const auto& [kb, vb] : b.terms())
            for (std::size_t i = 0; i < p; ++i)
                for (std::size_t j = 0; j < q; ++j) {
                    Vec br = g.bracket_basis(ka[i], kb[j]);
                    int sign = ((i + j) % 2 == 0) ? 1 : -1;
                    Rational coeff = va * vb * sign;
                    for (std::size_t k = 0; k < g.dim(); ++k) {
                        if (br[k] == 0) continue;
                        Multivector::Key key;
                        key.push_back(k);
                        for (std::size_t s = 0; s < p; ++s)
                            if (s != i) key.push_back(ka[s]);
                        for (std::size_t s = 0; s < q; ++s)
                            if (s != j) key.push_back(kb[s]);
                        r.add_term(std::move(key), coeff * br[k]);
                    }
                }
    return r;
}

/// Interior product of a covector (dual-basis coordinates) into a bivector:
/// iota_alpha(e_i ^ e_j) = alpha_i e_j - alpha_j e_i.
inline Vec sharp(const Multivector& lam, const Vec& alpha) {
    if (lam.degree() != 2) throw std::invalid_argument("sharp needs a bivector");
    if (alpha.size() != lam.dim()) throw std::invalid_argument("sharp dimension mismatch");
    Vec r(lam.dim());
    for (const auto& [k, v] : lam.terms()) {
        r[k[1]] += v * alpha[k[0]];
        r[k[0]] -= v * alpha[k[1]];
    }
    return r;
}

/// Matrix of sharp as a map from dual coordinates to vectors.
inline Matrix sharp_matrix(const Multivector& lam) {
    Matrix m(lam.dim(), lam.dim());
    for (std::size_t i = 0; i < lam.dim(); ++i) {
        Vec col = sharp(lam, basis_vec(lam.dim(), i));
        for (std::size_t k = 0; k < lam.dim(); ++k) m.at(k, i) = col[k];
    }
    return m;
}

}  // namespace manin
