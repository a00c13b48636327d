#pragma once

#include <stdexcept>
#include <vector>

#include "manin/matrix.hpp"

namespace manin {

/// A linear subspace of Q^n, stored as the RREF basis of its row span.
/// Canonicalization is eager, so two Subspace values are equal as sets
/// exactly when they are equal structurally.
class Subspace {
public:
    Subspace() : ambient_(0) {}
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    /// Span of the rows of `gens`.
    static Subspace span(const Matrix& gens) {
        Subspace s(gens.cols());
        Matrix r = gens.rref();
        std::vector<Vec> keep;
        for (std::size_t i = 0; i < r.rows(); ++i)
            if (!is_zero_vec(r.row(i))) keep.push_back(r.row(i));
        s.basis_ = Matrix::from_rows(keep, gens.cols());
        return s;
    }
    static Subspace span(const std::vector<Vec>& gens, std::size_t ambient_dim) {
        return span(Matrix::from_rows(gens, ambient_dim));
    }
    static Subspace full(std::size_t n) { return span(Matrix::identity(n)); }
    static Subspace kernel_of(const Matrix& m) { return span(m.kernel()); }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Vec basis_vector(std::size_t i) const { return basis_.row(i); }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    bool contains(const Vec& v) const {
        if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
        Vec r = v;
        // Reduce against the RREF basis; membership iff residual is zero.
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            std::size_t p = 0;
            while (p < ambient_ && basis_.at(i, p) == 0) ++p;
            if (p == ambient_) continue;
            if (r[p] != 0) r = vec_sub(r, vec_scale(r[p], basis_.row(i)));
        }
        return is_zero_vec(r);
    }

    bool contains(const Subspace& o) const {
        if (o.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
        for (std::size_t i = 0; i < o.dim(); ++i)
            if (!contains(o.basis_vector(i))) return false;
        return true;
    }

    Subspace sum(const Subspace& o) const {
        require_same_ambient(o);
        Matrix gens(dim() + o.dim(), ambient_);
        gens.paste(0, 0, basis_);
        gens.paste(dim(), 0, o.basis_);
        return span(gens);
    }

    Subspace intersect(const Subspace& o) const {
        require_same_ambient(o);
        // Zassenhaus: row reduce [B B; C 0]; rows with zero left half carry
        // the intersection in their right half.
        std::size_t n = ambient_;
        Matrix z(dim() + o.dim(), 2 * n);
        z.paste(0, 0, basis_);
        z.paste(0, n, basis_);
        z.paste(dim(), 0, o.basis_);
        Matrix r = z.rref();
        std::vector<Vec> gens;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            bool left_zero = true;
            for (std::size_t j = 0; j < n; ++j)
                if (r.at(i, j) != 0) { left_zero = false; break; }
            if (!left_zero) continue;
            Vec right(n);
            for (std::size_t j = 0; j < n; ++j) right[j] = r.at(i, n + j);
            if (!is_zero_vec(right)) gens.push_back(right);
        }
        return span(gens, n);
    }

    /// Annihilator in the dual space, identified with Q^n via the dual of
    /// the standard basis: { xi : xi(v) = 0 for all v in this }.
    Subspace annihilator() const { return kernel_of(basis_); }

    /// Orthogonal complement with respect to the bilinear form g(x, y) =
    /// x^T form y: { x : g(v, x) = 0 for all v in this }.
    Subspace orthogonal_complement(const Matrix& form) const {
        if (form.rows() != ambient_ || form.cols() != ambient_)
            throw std::invalid_argument("form shape mismatch");
        return kernel_of(basis_ * form);
    }

    bool is_transverse(const Subspace& o) const {
        require_same_ambient(o);
        return intersect(o).dim() == 0 && sum(o).dim() == ambient_;
    }

    /// Image of this subspace under the linear map `m` (applied to column
    /// vectors, so generators map by B M^T).
    Subspace image_under(const Matrix& m) const {
        if (m.cols() != ambient_) throw std::invalid_argument("map shape mismatch");
        return span(basis_ * m.transpose());
    }

    /// Coordinates of v in this subspace's basis; throws if v is outside.
    Vec coordinates(const Vec& v) const {
        auto x = basis_.transpose().solve(v);
        if (!x) throw std::invalid_argument("vector not in subspace");
        return *x;
    }

private:
    void require_same_ambient(const Subspace& o) const {
        if (ambient_ != o.ambient_) throw std::invalid_argument("ambient dimension mismatch");
    }

    std::size_t ambient_;
    Matrix basis_;
};

inline Subspace direct_sum(const Subspace& a, const Subspace& b) {
    Matrix gens(a.dim() + b.dim(), a.ambient_dim() + b.ambient_dim());
    gens.paste(0, 0, a.basis());
    gens.paste(a.dim(), a.ambient_dim(), b.basis());
    return Subspace::span(gens);
}

}  // namespace manin
