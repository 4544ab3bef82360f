#ifndef ENVELKIT_LINALG_HPP
#define ENVELKIT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "envelkit/scalars.hpp"

namespace envelkit {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>; // row-major, rectangular

Vec zero_vec(std::size_t n, const FieldTag& tag);
Vec unit_vec(std::size_t n, std::size_t i, const FieldTag& tag);
bool is_zero_vec(const Vec& v);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& a);

Mat zero_mat(std::size_t rows, std::size_t cols, const FieldTag& tag);
Mat identity_mat(std::size_t n, const FieldTag& tag);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& a, const Vec& x);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_scale(const Scalar& c, const Mat& a);
bool is_zero_mat(const Mat& a);
Mat mat_commutator(const Mat& a, const Mat& b); // ab - ba

Vec flatten(const Mat& a);
Mat unflatten(const Vec& v, std::size_t rows, std::size_t cols);

// In-place Gauss-Jordan to reduced row echelon form; returns pivot columns.
// Zero rows are removed.
std::vector<std::size_t> rref(Mat& m);

std::size_t rank(Mat m);

// Basis of { x : a x = 0 }, one row per kernel vector, canonical (rref'd).
Mat nullspace(const Mat& a);

// Solves a x = b exactly; nullopt if inconsistent. Any solution returned
// (free variables set to zero).
std::optional<Vec> solve(const Mat& a, const Vec& b);

std::optional<Mat> mat_inverse(const Mat& a);

// Canonical reduced-echelon representation of a linear subspace of F^n.
// Equality of subspaces is literal equality of the representations.
class Subspace {
public:
    Subspace(std::size_t ambient_dim, const FieldTag& tag)
        : ambient_(ambient_dim), tag_(tag) {}

    static Subspace span(std::size_t ambient_dim, const FieldTag& tag,
                         const std::vector<Vec>& vectors);
    static Subspace full(std::size_t ambient_dim, const FieldTag& tag);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const FieldTag& field() const { return tag_; }
    const Mat& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    // Coordinates of v in the canonical basis; nullopt when v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && rows_ == o.rows_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    // Standard coordinates not used as pivots; they span a complement.
    std::vector<std::size_t> complement_coords() const;

    std::string str() const;

private:
    std::size_t ambient_;
    FieldTag tag_;
    Mat rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace envelkit

#endif
