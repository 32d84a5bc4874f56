#pragma once

#include <leibniz/rat.hpp>

#include <optional>
#include <vector>

namespace leibniz {

using Vec = std::vector<Rat>;

/// Dense row-major matrix of exact rationals.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static Mat identity(int n)
    {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static Mat from_rows(const std::vector<Vec>& rows)
    {
        if (rows.empty()) return Mat(0, 0);
        Mat m(int(rows.size()), int(rows[0].size()));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    Vec row(int r) const { return Vec(a_.begin() + size_t(r) * cols_, a_.begin() + size_t(r + 1) * cols_); }

    bool is_zero() const
    {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const Mat&, const Mat&) = default;

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat scaled(const Rat& s) const;

    /// Flattened row-major entries.
    const std::vector<Rat>& entries() const { return a_; }
    std::vector<Rat>& entries() { return a_; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

/// Reduced row echelon form together with pivot bookkeeping.
struct Echelon {
    Mat rref;
    std::vector<int> pivot_cols;
    int rank = 0;
};

/// Gauss-Jordan elimination over Q. Pivot selection is the first nonzero
/// entry scanning top to bottom in the leftmost unresolved column, so the
/// output is deterministic for identical input.
Echelon rref(const Mat& m);

/// Canonical nullspace basis read off the RREF: one vector per free column
/// ordered by free-column index, unit entry in its own free column.
std::vector<Vec> nullspace(const Mat& m);

/// One particular solution of a*x = b (free variables set to 0),
/// or nullopt for an inconsistent system.
std::optional<Vec> solve(const Mat& a, const Vec& b);

Vec mat_vec(const Mat& m, const Vec& v);

/// Canonical echelonized basis of the span of the given vectors
/// (RREF rows of the stacked matrix, zero rows dropped).
std::vector<Vec> span_basis(const std::vector<Vec>& vecs);

/// Rank of the span of the given vectors.
int span_rank(const std::vector<Vec>& vecs);

/// True iff v lies in the span of basis (basis need not be echelonized).
bool in_span(const std::vector<Vec>& basis, const Vec& v);

/// True iff the two sets of vectors span the same subspace.
bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b);

/// Coordinates of v over the given (independent) basis, or nullopt.
std::optional<Vec> coords_in(const std::vector<Vec>& basis, const Vec& v);

} // namespace leibniz
