#include <leibniz/algebra.hpp>

#include <cassert>

namespace leibniz {

Algebra::Algebra(int dim, std::vector<std::string> labels)
    : n_(dim), c_(size_t(dim) * dim * dim), labels_(std::move(labels))
{
    assert(dim >= 1);
    if (labels_.empty())
        for (int i = 1; i <= dim; ++i) labels_.push_back("e" + std::to_string(i));
    assert(int(labels_.size()) == dim);
}

Vec Algebra::bracket_basis(int i, int j) const
{
    Vec r(n_, Rat(0));
    for (int k = 0; k < n_; ++k) r[k] = c(i, j, k);
    return r;
}

Vec Algebra::bracket(const Vec& x, const Vec& y) const
{
    assert(int(x.size()) == n_ && int(y.size()) == n_);
    Vec r(n_, Rat(0));
    for (int i = 0; i < n_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n_; ++j) {
            if (y[j] == 0) continue;
            const Rat f = x[i] * y[j];
            for (int k = 0; k < n_; ++k)
                if (c(i, j, k) != 0) r[k] += f * c(i, j, k);
        }
    }
    return r;
}

namespace {

bool vec_zero(const Vec& v)
{
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Vec unit(int n, int i)
{
    Vec v(n, Rat(0));
    v[i] = 1;
    return v;
}

} // namespace

std::vector<Violation> check_right_leibniz(const Algebra& a)
{
    const int n = a.dim();
    std::vector<Violation> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec l = a.bracket(a.bracket_basis(i, j), unit(n, k));
                Vec r1 = a.bracket(a.bracket_basis(i, k), unit(n, j));
                Vec r2 = a.bracket(unit(n, i), a.bracket_basis(j, k));
                Vec res(n, Rat(0));
                for (int m = 0; m < n; ++m) res[m] = l[m] - r1[m] - r2[m];
                if (!vec_zero(res)) out.push_back({i, j, k, std::move(res)});
            }
    return out;
}

std::vector<Violation> check_left_leibniz(const Algebra& a)
{
    const int n = a.dim();
    std::vector<Violation> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec l = a.bracket(unit(n, i), a.bracket_basis(j, k));
                Vec r1 = a.bracket(a.bracket_basis(i, j), unit(n, k));
                Vec r2 = a.bracket(unit(n, j), a.bracket_basis(i, k));
                Vec res(n, Rat(0));
                for (int m = 0; m < n; ++m) res[m] = l[m] - r1[m] - r2[m];
                if (!vec_zero(res)) out.push_back({i, j, k, std::move(res)});
            }
    return out;
}

Subspace Subspace::full(int n)
{
    Subspace s{n, {}};
    for (int i = 0; i < n; ++i) {
        Vec v(n, Rat(0));
        v[i] = 1;
        s.basis.push_back(std::move(v));
    }
    return s;
}

Subspace Subspace::zero(int n) { return {n, {}}; }

Subspace Subspace::span(int n, const std::vector<Vec>& vecs)
{
    return {n, span_basis(vecs)};
}

bool Subspace::contains(const Subspace& other) const
{
    for (const auto& v : other.basis)
        if (!in_span(basis, v)) return false;
    return true;
}

Subspace product_subspace(const Algebra& a, const Subspace& u, const Subspace& v)
{
    assert(u.ambient_dim == a.dim() && v.ambient_dim == a.dim());
    std::vector<Vec> prods;
    for (const auto& x : u.basis)
        for (const auto& y : v.basis) {
            Vec p = a.bracket(x, y);
            if (!vec_zero(p)) prods.push_back(std::move(p));
        }
    return Subspace::span(a.dim(), prods);
}

namespace {

SeriesReport run_series(const Algebra& a, SeriesReport::Kind kind)
{
    SeriesReport rep{kind, {a.dim()}, std::nullopt};
    const Subspace full = Subspace::full(a.dim());
    Subspace cur = full;
    if (a.dim() == 0) return rep;
    while (true) {
        Subspace next = (kind == SeriesReport::Kind::lower_central)
                            ? product_subspace(a, cur, full)
                            : product_subspace(a, cur, cur);
        rep.dims.push_back(next.dim());
        if (next.dim() == 0) {
            rep.index = int(rep.dims.size());
            break;
        }
        if (next.dim() == cur.dim()) break; // stabilized nonzero
        cur = std::move(next);
    }
    return rep;
}

} // namespace

SeriesReport lower_central_series(const Algebra& a)
{
    return run_series(a, SeriesReport::Kind::lower_central);
}

SeriesReport derived_series(const Algebra& a)
{
    return run_series(a, SeriesReport::Kind::derived);
}

bool filiform_check(const Algebra& a)
{
    const int n = a.dim();
    if (n < 2) return false;
    const SeriesReport s = lower_central_series(a);
    // need dim L^i = n - i for 2 <= i <= n (so L^{n+1} = 0 as well)
    for (int i = 2; i <= n + 1; ++i) {
        const int want = (i <= n) ? n - i : 0;
        const int got = (i - 1 < int(s.dims.size())) ? s.dims[i - 1] : s.dims.back();
        if (got != want) return false;
    }
    return true;
}

} // namespace leibniz
