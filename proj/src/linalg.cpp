#include <leibniz/linalg.hpp>

#include <cassert>

namespace leibniz {

Mat Mat::operator*(const Mat& o) const
{
    assert(cols_ == o.rows_);
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                if (o.at(k, j) != 0) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const
{
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const
{
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Mat Mat::operator-() const
{
    Mat r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
}

Mat Mat::scaled(const Rat& s) const
{
    Mat r = *this;
    for (auto& x : r.a_) x *= s;
    return r;
}

Echelon rref(const Mat& m)
{
    Echelon e;
    e.rref = m;
    Mat& a = e.rref;
    const int rows = a.rows(), cols = a.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (a.at(i, c) != 0) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < cols; ++j) swap(a.at(r, j), a.at(pr, j));
        const Rat pv = a.at(r, c);
        for (int j = c; j < cols; ++j) a.at(r, j) /= pv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            const Rat f = a.at(i, c);
            for (int j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.rank = int(e.pivot_cols.size());
    return e;
}

std::vector<Vec> nullspace(const Mat& m)
{
    const int cols = m.cols();
    const Echelon e = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        Vec v(cols, Rat(0));
        v[fc] = 1;
        for (size_t r = 0; r < e.pivot_cols.size(); ++r)
            v[e.pivot_cols[r]] = -e.rref.at(int(r), fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Mat& a, const Vec& b)
{
    assert(int(b.size()) == a.rows());
    Mat aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    const Echelon e = rref(aug);
    for (int c : e.pivot_cols)
        if (c == a.cols()) return std::nullopt;
    Vec x(a.cols(), Rat(0));
    for (size_t r = 0; r < e.pivot_cols.size(); ++r)
        x[e.pivot_cols[r]] = e.rref.at(int(r), a.cols());
    return x;
}

Vec mat_vec(const Mat& m, const Vec& v)
{
    assert(int(v.size()) == m.cols());
    Vec r(m.rows(), Rat(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0 && v[j] != 0) r[i] += m.at(i, j) * v[j];
    return r;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vecs)
{
    if (vecs.empty()) return {};
    const Echelon e = rref(Mat::from_rows(vecs));
    std::vector<Vec> basis;
    for (int r = 0; r < e.rank; ++r) basis.push_back(e.rref.row(r));
    return basis;
}

int span_rank(const std::vector<Vec>& vecs)
{
    if (vecs.empty()) return 0;
    return rref(Mat::from_rows(vecs)).rank;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v)
{
    bool zero = true;
    for (const auto& x : v)
        if (x != 0) { zero = false; break; }
    if (zero) return true;
    if (basis.empty()) return false;
    std::vector<Vec> all = basis;
    all.push_back(v);
    return span_rank(all) == span_rank(basis);
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b)
{
    return span_basis(a) == span_basis(b);
}

std::optional<Vec> coords_in(const std::vector<Vec>& basis, const Vec& v)
{
    if (basis.empty()) {
        for (const auto& x : v)
            if (x != 0) return std::nullopt;
        return Vec{};
    }
    // columns = basis vectors
    Mat m(int(v.size()), int(basis.size()));
    for (size_t k = 0; k < basis.size(); ++k)
        for (size_t i = 0; i < v.size(); ++i) m.at(int(i), int(k)) = basis[k][i];
    return solve(m, v);
}

} // namespace leibniz
