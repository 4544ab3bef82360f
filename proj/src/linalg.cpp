#include "envelkit/linalg.hpp"

#include <sstream>

namespace envelkit {

Vec zero_vec(std::size_t n, const FieldTag& tag) { return Vec(n, Scalar::zero(tag)); }

Vec unit_vec(std::size_t n, std::size_t i, const FieldTag& tag) {
    Vec v = zero_vec(n, tag);
    v[i] = Scalar::one(tag);
    return v;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const Scalar& c, const Vec& a) {
    Vec r = a;
    for (auto& x : r) x *= c;
    return r;
}

Mat zero_mat(std::size_t rows, std::size_t cols, const FieldTag& tag) {
    return Mat(rows, zero_vec(cols, tag));
}

Mat identity_mat(std::size_t n, const FieldTag& tag) {
    Mat m = zero_mat(n, n, tag);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar::one(tag);
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    const FieldTag tag = a.empty() ? FieldTag() : a[0][0].field();
    Mat r = zero_mat(n, m, tag);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

Vec mat_vec(const Mat& a, const Vec& x) {
    Vec r = zero_vec(a.size(), x.empty() ? FieldTag() : x[0].field());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) r[i] += a[i][j] * x[j];
    return r;
}

Mat mat_add(const Mat& a, const Mat& b) {
    Mat r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = vec_add(r[i], b[i]);
    return r;
}

Mat mat_sub(const Mat& a, const Mat& b) {
    Mat r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = vec_sub(r[i], b[i]);
    return r;
}

Mat mat_scale(const Scalar& c, const Mat& a) {
    Mat r = a;
    for (auto& row : r) row = vec_scale(c, row);
    return r;
}

bool is_zero_mat(const Mat& a) {
    for (const auto& row : a)
        if (!is_zero_vec(row)) return false;
    return true;
}

Mat mat_commutator(const Mat& a, const Mat& b) { return mat_sub(mat_mul(a, b), mat_mul(b, a)); }

Vec flatten(const Mat& a) {
    Vec v;
    for (const auto& row : a) v.insert(v.end(), row.begin(), row.end());
    return v;
}

Mat unflatten(const Vec& v, std::size_t rows, std::size_t cols) {
    Mat m;
    for (std::size_t i = 0; i < rows; ++i)
        m.emplace_back(v.begin() + i * cols, v.begin() + (i + 1) * cols);
    return m;
}

std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Scalar inv = m[row][col].inverse();
        m[row] = vec_scale(inv, m[row]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Scalar f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row); // rows below are zero
    return pivots;
}

std::size_t rank(Mat m) { return rref(m).size(); }

Mat nullspace(const Mat& a) {
    if (a.empty()) return {};
    std::size_t cols = a[0].size();
    const FieldTag tag = a[0][0].field();
    Mat m = a;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    Mat basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v = zero_vec(cols, tag);
        v[f] = Scalar::one(tag);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
        basis.push_back(std::move(v));
    }
    rref(basis);
    return basis;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    std::size_t n = a.size();
    if (n == 0) return is_zero_vec(b) ? std::optional<Vec>(Vec{}) : std::nullopt;
    std::size_t cols = a[0].size();
    const FieldTag tag = b.empty() ? a[0][0].field() : b[0].field();
    Mat aug = a;
    for (std::size_t i = 0; i < n; ++i) aug[i].push_back(b[i]);
    auto pivots = rref(aug);
    Vec x = zero_vec(cols, tag);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return std::nullopt; // pivot in the rhs column
        x[pivots[r]] = aug[r][cols];
    }
    return x;
}

std::optional<Mat> mat_inverse(const Mat& a) {
    std::size_t n = a.size();
    if (n == 0) return Mat{};
    const FieldTag tag = a[0][0].field();
    Mat aug = a;
    for (std::size_t i = 0; i < n; ++i) {
        Vec id = unit_vec(n, i, tag);
        aug[i].insert(aug[i].end(), id.begin(), id.end());
    }
    auto pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Mat inv;
    for (std::size_t i = 0; i < n; ++i)
        inv.emplace_back(aug[i].begin() + n, aug[i].end());
    return inv;
}

Subspace Subspace::span(std::size_t ambient_dim, const FieldTag& tag,
                        const std::vector<Vec>& vectors) {
    Subspace s(ambient_dim, tag);
    s.rows_ = vectors;
    s.pivots_ = rref(s.rows_);
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim, const FieldTag& tag) {
    return span(ambient_dim, tag, identity_mat(ambient_dim, tag));
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
    for (const auto& row : other.rows_)
        if (!contains(row)) return false;
    return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (v.size() != ambient_)
        throw PreconditionError("coordinates: vector has wrong ambient dimension");
    // rref rows: coordinate of row r is v[pivot_r]; verify the residual.
    Vec coords;
    coords.reserve(rows_.size());
    Vec resid = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar c = resid[pivots_[r]];
        coords.push_back(c);
        if (!c.is_zero()) resid = vec_sub(resid, vec_scale(c, rows_[r]));
    }
    if (!is_zero_vec(resid)) return std::nullopt;
    return coords;
}

Subspace Subspace::sum(const Subspace& other) const {
    std::vector<Vec> all = rows_;
    all.insert(all.end(), other.rows_.begin(), other.rows_.end());
    return span(ambient_, tag_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
    // Zassenhaus: rref of [U U; V 0]; rows with zero left half carry the
    // intersection in the right half.
    std::size_t n = ambient_;
    Mat block;
    for (const auto& u : rows_) {
        Vec row = u;
        row.insert(row.end(), u.begin(), u.end());
        block.push_back(std::move(row));
    }
    for (const auto& v : other.rows_) {
        Vec row = v;
        Vec zeros = zero_vec(n, tag_);
        row.insert(row.end(), zeros.begin(), zeros.end());
        block.push_back(std::move(row));
    }
    rref(block);
    std::vector<Vec> inter;
    for (const auto& row : block) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n; ++j)
            if (!row[j].is_zero()) { left_zero = false; break; }
        if (left_zero) inter.emplace_back(row.begin() + n, row.end());
    }
    return span(n, tag_, inter);
}

std::vector<std::size_t> Subspace::complement_coords() const {
    std::vector<bool> is_pivot(ambient_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < ambient_; ++j)
        if (!is_pivot[j]) out.push_back(j);
    return out;
}

std::string Subspace::str() const {
    if (rows_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) os << "; ";
        os << "(";
        for (std::size_t j = 0; j < ambient_; ++j) {
            if (j) os << ",";
            os << rows_[r][j].coeff_str();
        }
        os << ")";
    }
    return os.str();
}

} // namespace envelkit
