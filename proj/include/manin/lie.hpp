#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "manin/matrix.hpp"
#include "manin/report.hpp"
#include "manin/subspace.hpp"

namespace manin {

/// Structure constants c_{ij}^k with [e_i, e_j] = sum_k c_{ij}^k e_k.
class RationalTensor3 {
public:
    RationalTensor3() : dim_(0) {}
    explicit RationalTensor3(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

    std::size_t dim() const { return dim_; }
    Rational& at(std::size_t i, std::size_t j, std::size_t k) {
        return c_[(i * dim_ + j) * dim_ + k];
    }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }
    bool operator==(const RationalTensor3& o) const { return dim_ == o.dim_ && c_ == o.c_; }
    bool operator!=(const RationalTensor3& o) const { return !(*this == o); }

private:
    std::size_t dim_;
    std::vector<Rational> c_;
};

class LieAlgebra {
public:
    LieAlgebra() : dim_(0) {}
    explicit LieAlgebra(std::size_t dim, std::vector<std::string> names = {})
        : dim_(dim), names_(std::move(names)), c_(dim) {
        if (names_.empty())
            for (std::size_t i = 0; i < dim; ++i) names_.push_back("e" + std::to_string(i + 1));
        if (names_.size() != dim_) throw std::invalid_argument("basis name count mismatch");
    }

    static LieAlgebra abelian(std::size_t dim) { return LieAlgebra(dim); }

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const RationalTensor3& constants() const { return c_; }

    /// Sets [e_i, e_j] = v e_k together with the antisymmetric counterpart.
    void set_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
        c_.at(i, j, k) = v;
        c_.at(j, i, k) = -v;
    }
    void set_constant(std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
        c_.at(i, j, k) = v;
    }
    const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
        return c_.at(i, j, k);
    }

    Vec bracket_basis(std::size_t i, std::size_t j) const {
        Vec r(dim_);
        for (std::size_t k = 0; k < dim_; ++k) r[k] = c_.at(i, j, k);
        return r;
    }
    Vec bracket(const Vec& x, const Vec& y) const {
        if (x.size() != dim_ || y.size() != dim_)
            throw std::invalid_argument("bracket argument dimension mismatch");
        Vec r(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j] == 0) continue;
                Rational f = x[i] * y[j];
                for (std::size_t k = 0; k < dim_; ++k) r[k] += f * c_.at(i, j, k);
            }
        }
        return r;
    }

    /// Matrix of ad_{e_i}: column j is [e_i, e_j].
    Matrix ad(std::size_t i) const {
        Matrix m(dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = c_.at(i, j, k);
        return m;
    }

    bool is_abelian() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                if (!is_zero_vec(bracket_basis(i, j))) return false;
        return true;
    }

    bool operator==(const LieAlgebra& o) const { return dim_ == o.dim_ && c_ == o.c_; }
    bool operator!=(const LieAlgebra& o) const { return !(*this == o); }

private:
    std::size_t dim_;
    std::vector<std::string> names_;
    RationalTensor3 c_;
};

struct LinearMap {
    Matrix matrix;  // target_dim x source_dim
    std::size_t source_dim() const { return matrix.cols(); }
    std::size_t target_dim() const { return matrix.rows(); }
};

struct Representation {
    std::size_t module_dim = 0;
    std::vector<Matrix> action;  // one module_dim x module_dim matrix per basis element

    static Representation zero(std::size_t algebra_dim, std::size_t module_dim) {
        Representation r;
        r.module_dim = module_dim;
        r.action.assign(algebra_dim, Matrix::zero(module_dim, module_dim));
        return r;
    }
    Vec apply(std::size_t i, const Vec& v) const { return action[i].apply(v); }
    Vec apply_vec(const Vec& x, const Vec& v) const {
        Vec r(module_dim);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0) r = vec_add(r, vec_scale(x[i], action[i].apply(v)));
        return r;
    }
};

inline Report check_jacobi(const LieAlgebra& g) {
    Report rep;
    rep.subject = "lie_algebra";
    std::size_t n = g.dim();
    bool anti = true;
    std::string anti_w;
    for (std::size_t i = 0; i < n && anti; ++i)
        for (std::size_t j = 0; j < n && anti; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (g.constant(i, j, k) + g.constant(j, i, k) != 0) {
                    anti = false;
                    anti_w = index_witness({i, j, k});
                    break;
                }
    rep.add("antisymmetry", anti, anti_w);
    bool jac = true;
    std::string jac_w;
    for (std::size_t i = 0; i < n && jac; ++i)
        for (std::size_t j = 0; j < n && jac; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec s = g.bracket(g.bracket_basis(i, j), basis_vec(n, k));
                s = vec_add(s, g.bracket(g.bracket_basis(j, k), basis_vec(n, i)));
                s = vec_add(s, g.bracket(g.bracket_basis(k, i), basis_vec(n, j)));
                if (!is_zero_vec(s)) {
                    jac = false;
                    jac_w = index_witness({i, j, k});
                    break;
                }
            }
    rep.add("jacobi", jac, jac_w);
    return rep;
}

inline Report check_morphism(const LinearMap& f, const LieAlgebra& g1, const LieAlgebra& g2) {
    Report rep;
    rep.subject = "morphism";
    if (f.source_dim() != g1.dim() || f.target_dim() != g2.dim())
        throw std::invalid_argument("morphism dimension mismatch");
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < g1.dim() && ok; ++i)
        for (std::size_t j = 0; j < g1.dim(); ++j) {
            Vec lhs = f.matrix.apply(g1.bracket_basis(i, j));
            Vec rhs = g2.bracket(f.matrix.apply(basis_vec(g1.dim(), i)),
                                 f.matrix.apply(basis_vec(g1.dim(), j)));
            if (lhs != rhs) {
                ok = false;
                w = index_witness({i, j});
                break;
            }
        }
    rep.add("morphism", ok, w);
    return rep;
}

inline bool is_subalgebra(const Subspace& s, const LieAlgebra& g) {
    if (s.ambient_dim() != g.dim()) throw std::invalid_argument("ambient dimension mismatch");
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = i + 1; j < s.dim(); ++j)
            if (!s.contains(g.bracket(s.basis_vector(i), s.basis_vector(j)))) return false;
    return true;
}

inline Report check_representation(const Representation& rep, const LieAlgebra& g) {
    Report r;
    r.subject = "representation";
    bool ok = rep.action.size() == g.dim();
    std::string w = ok ? "" : "action count mismatch";
    for (std::size_t i = 0; i < g.dim() && ok; ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) {
            Matrix lhs(rep.module_dim, rep.module_dim);
            Vec b = g.bracket_basis(i, j);
            for (std::size_t k = 0; k < g.dim(); ++k)
                if (b[k] != 0) lhs = lhs + rep.action[k] * b[k];
            Matrix rhs = rep.action[i] * rep.action[j] - rep.action[j] * rep.action[i];
            if (lhs != rhs) {
                ok = false;
                w = index_witness({i, j});
                break;
            }
        }
    r.add("representation", ok, w);
    return r;
}

/// Coadjoint action on g*: <ad*_X xi, Y> = -<xi, [X, Y]>. In dual-basis
/// coordinates the matrix of ad*_{e_i} is -(ad_{e_i})^T.
inline Representation coadjoint(const LieAlgebra& g) {
    Representation r;
    r.module_dim = g.dim();
    for (std::size_t i = 0; i < g.dim(); ++i) r.action.push_back(-(g.ad(i).transpose()));
    return r;
}

inline LieAlgebra opposite(const LieAlgebra& g) {
    LieAlgebra r(g.dim(), g.basis_names());
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j)
            for (std::size_t k = 0; k < g.dim(); ++k)
                r.set_constant(i, j, k, -g.constant(i, j, k));
    return r;
}

inline LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2) {
    std::size_t n1 = g1.dim(), n2 = g2.dim();
    std::vector<std::string> names = g1.basis_names();
    for (const auto& s : g2.basis_names()) names.push_back(s + "'");
    LieAlgebra r(n1 + n2, names);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j)
            for (std::size_t k = 0; k < n1; ++k) r.set_constant(i, j, k, g1.constant(i, j, k));
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j)
            for (std::size_t k = 0; k < n2; ++k)
                r.set_constant(n1 + i, n1 + j, n1 + k, g2.constant(i, j, k));
    return r;
}

/// Lie algebra with a fixed bracket table given as sparse triples
/// (i, j, k, value) meaning [e_i, e_j] += value e_k; antisymmetric
/// counterparts are filled in automatically.
inline LieAlgebra from_sparse_brackets(
    std::size_t dim, const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>>& entries,
    std::vector<std::string> names = {}) {
    LieAlgebra g(dim, std::move(names));
    for (const auto& [i, j, k, v] : entries) {
        g.set_constant(i, j, k, g.constant(i, j, k) + v);
        g.set_constant(j, i, k, g.constant(j, i, k) - v);
    }
    return g;
}

}  // namespace manin
