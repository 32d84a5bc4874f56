#pragma once

#include <leibniz/linalg.hpp>

#include <optional>
#include <string>
#include <vector>

namespace leibniz {

/// Finite-dimensional algebra given by structure constants c_{ij}^k
/// with [e_i, e_j] = sum_k c_{ij}^k e_k. Indices are 0-based internally;
/// file I/O and printed reports use the 1-based labels.
class Algebra {
public:
    Algebra() = default;
    explicit Algebra(int dim, std::vector<std::string> labels = {});

    int dim() const { return n_; }

    const Rat& c(int i, int j, int k) const { return c_[idx(i, j, k)]; }
    void set_c(int i, int j, int k, Rat v) { c_[idx(i, j, k)] = std::move(v); }
    void add_c(int i, int j, int k, const Rat& v) { c_[idx(i, j, k)] += v; }

    /// [e_i, e_j] as a coordinate vector.
    Vec bracket_basis(int i, int j) const;

    /// Bilinear extension of the structure tensor.
    Vec bracket(const Vec& x, const Vec& y) const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> l) { labels_ = std::move(l); }

private:
    size_t idx(int i, int j, int k) const { return (size_t(i) * n_ + j) * n_ + k; }
    int n_ = 0;
    std::vector<Rat> c_;
    std::vector<std::string> labels_;
};

/// A basis triple on which a Leibniz identity fails, with the residual
/// LHS - RHS.
struct Violation {
    int i, j, k;
    Vec residual;
};

/// Right Leibniz identity on all basis triples:
/// [[e_i,e_j],e_k] = [[e_i,e_k],e_j] + [e_i,[e_j,e_k]].
std::vector<Violation> check_right_leibniz(const Algebra& a);

/// Left Leibniz identity: [e_i,[e_j,e_k]] = [[e_i,e_j],e_k] + [e_j,[e_i,e_k]].
std::vector<Violation> check_left_leibniz(const Algebra& a);

/// Subspace of coordinate space, kept as a canonical echelonized basis.
struct Subspace {
    int ambient_dim = 0;
    std::vector<Vec> basis;

    int dim() const { return int(basis.size()); }
    static Subspace full(int n);
    static Subspace zero(int n);
    static Subspace span(int n, const std::vector<Vec>& vecs);
    bool contains(const Subspace& other) const;
};

/// Canonical span of {[x,y] : x in u, y in v}.
Subspace product_subspace(const Algebra& a, const Subspace& u, const Subspace& v);

struct SeriesReport {
    enum class Kind { lower_central, derived };
    Kind kind;
    /// Dimensions of successive terms, starting from the algebra itself,
    /// up to the first repeat or zero.
    std::vector<int> dims;
    /// 1-based index of the first zero term, when reached.
    std::optional<int> index;
};

SeriesReport lower_central_series(const Algebra& a);
SeriesReport derived_series(const Algebra& a);

inline bool is_nilpotent(const Algebra& a) { return lower_central_series(a).index.has_value(); }
inline bool is_solvable(const Algebra& a) { return derived_series(a).index.has_value(); }

/// dim L^i = n - i for 2 <= i <= n.
bool filiform_check(const Algebra& a);

} // namespace leibniz
