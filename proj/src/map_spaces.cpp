#include <leibniz/map_spaces.hpp>

#include <cassert>

namespace leibniz {

Vec vectorize(const LinMap& m) { return m.entries(); }

Vec vectorize(const Bider& b)
{
    Vec v = b.d.entries();
    const Vec& w = b.D.entries();
    v.insert(v.end(), w.begin(), w.end());
    return v;
}

LinMap linmap_from_vec(int n, const Vec& v)
{
    assert(int(v.size()) == n * n);
    LinMap m(n, n);
    m.entries() = v;
    return m;
}

Bider bider_from_vec(int n, const Vec& v)
{
    assert(int(v.size()) == 2 * n * n);
    Bider b{LinMap(n, n), LinMap(n, n)};
    std::copy(v.begin(), v.begin() + n * n, b.d.entries().begin());
    std::copy(v.begin() + n * n, v.end(), b.D.entries().begin());
    return b;
}

LinMap MapSpace::map_at(size_t i) const
{
    assert(kind != SpaceKind::bider);
    return linmap_from_vec(n, basis[i]);
}

Bider MapSpace::bider_at(size_t i) const
{
    assert(kind == SpaceKind::bider);
    return bider_from_vec(n, basis[i]);
}

namespace {

bool row_zero(const Vec& v)
{
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// Unknown layout: entry (r, c) of the map sits at index r*n + c.
// Derivation rows: for (i, j, m):
//   sum_k c_ij^k d_{mk} - sum_p c_pj^m d_{pi} - sum_p c_ip^m d_{pj} = 0.
std::vector<Vec> der_rows(const Algebra& a, int offset, int width)
{
    const int n = a.dim();
    std::vector<Vec> rows;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int m = 0; m < n; ++m) {
                Vec row(width, Rat(0));
                for (int k = 0; k < n; ++k)
                    if (a.c(i, j, k) != 0) row[offset + m * n + k] += a.c(i, j, k);
                for (int p = 0; p < n; ++p) {
                    if (a.c(p, j, m) != 0) row[offset + p * n + i] -= a.c(p, j, m);
                    if (a.c(i, p, m) != 0) row[offset + p * n + j] -= a.c(i, p, m);
                }
                if (!row_zero(row)) rows.push_back(std::move(row));
            }
    return rows;
}

// Anti-derivation rows: D([e_i,e_j]) = [D(e_i),e_j] - [D(e_j),e_i]:
//   sum_k c_ij^k D_{mk} - sum_p c_pj^m D_{pi} + sum_p c_pi^m D_{pj} = 0.
std::vector<Vec> antider_rows(const Algebra& a, int offset, int width)
{
    const int n = a.dim();
    std::vector<Vec> rows;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int m = 0; m < n; ++m) {
                Vec row(width, Rat(0));
                for (int k = 0; k < n; ++k)
                    if (a.c(i, j, k) != 0) row[offset + m * n + k] += a.c(i, j, k);
                for (int p = 0; p < n; ++p) {
                    if (a.c(p, j, m) != 0) row[offset + p * n + i] -= a.c(p, j, m);
                    if (a.c(p, i, m) != 0) row[offset + p * n + j] += a.c(p, i, m);
                }
                if (!row_zero(row)) rows.push_back(std::move(row));
            }
    return rows;
}

Mat rows_to_mat(std::vector<Vec> rows, int width)
{
    if (rows.empty()) return Mat(0, width);
    return Mat::from_rows(rows);
}

bool right_leibniz_ok(const Algebra& a) { return check_right_leibniz(a).empty(); }

} // namespace

Mat derivation_system(const Algebra& a)
{
    const int n2 = a.dim() * a.dim();
    return rows_to_mat(der_rows(a, 0, n2), n2);
}

Mat antiderivation_system(const Algebra& a)
{
    const int n2 = a.dim() * a.dim();
    return rows_to_mat(antider_rows(a, 0, n2), n2);
}

Mat biderivation_system(const Algebra& a)
{
    const int n = a.dim();
    const int n2 = n * n;
    std::vector<Vec> rows = der_rows(a, 0, 2 * n2);
    for (auto& r : antider_rows(a, n2, 2 * n2)) rows.push_back(std::move(r));
    // compatibility, imposed on all basis pairs (x, y):
    //   sum_p c_xp^m (d_{py} - D_{py}) = 0
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int m = 0; m < n; ++m) {
                Vec row(2 * n2, Rat(0));
                for (int p = 0; p < n; ++p) {
                    const Rat& cv = a.c(x, p, m);
                    if (cv != 0) {
                        row[p * n + y] += cv;
                        row[n2 + p * n + y] -= cv;
                    }
                }
                if (!row_zero(row)) rows.push_back(std::move(row));
            }
    return rows_to_mat(std::move(rows), 2 * n2);
}

MapSpace derivation_space(const Algebra& a)
{
    MapSpace s{SpaceKind::der, a.dim(), nullspace(derivation_system(a))};
    s.leibniz_warning = !right_leibniz_ok(a);
    return s;
}

MapSpace antiderivation_space(const Algebra& a)
{
    MapSpace s{SpaceKind::antider, a.dim(), nullspace(antiderivation_system(a))};
    s.leibniz_warning = !right_leibniz_ok(a);
    return s;
}

MapSpace biderivation_space(const Algebra& a)
{
    MapSpace s{SpaceKind::bider, a.dim(), nullspace(biderivation_system(a))};
    s.leibniz_warning = !right_leibniz_ok(a);
    return s;
}

LinMap inner_derivation(const Algebra& a, const Vec& x)
{
    const int n = a.dim();
    assert(int(x.size()) == n);
    LinMap m(n, n);
    for (int j = 0; j < n; ++j) {
        Vec ej(n, Rat(0));
        ej[j] = 1;
        Vec col = a.bracket(ej, x);
        for (int r = 0; r < n; ++r) m.at(r, j) = col[r];
    }
    return m;
}

LinMap left_adjoint(const Algebra& a, const Vec& x)
{
    const int n = a.dim();
    assert(int(x.size()) == n);
    LinMap m(n, n);
    for (int j = 0; j < n; ++j) {
        Vec ej(n, Rat(0));
        ej[j] = 1;
        Vec col = a.bracket(x, ej);
        for (int r = 0; r < n; ++r) m.at(r, j) = col[r];
    }
    return m;
}

Bider inner_biderivation(const Algebra& a, const Vec& x)
{
    return {-inner_derivation(a, x), left_adjoint(a, x)};
}

namespace {

Vec unit(int n, int i)
{
    Vec v(n, Rat(0));
    v[i] = 1;
    return v;
}

Vec sub(const Vec& a, const Vec& b)
{
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec col_of(const LinMap& m, int j)
{
    Vec v(m.rows());
    for (int r = 0; r < m.rows(); ++r) v[r] = m.at(r, j);
    return v;
}

} // namespace

std::optional<MapWitness> derivation_violation(const Algebra& a, const LinMap& m)
{
    const int n = a.dim();
    assert(m.rows() == n && m.cols() == n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec lhs = mat_vec(m, a.bracket_basis(i, j));
            Vec rhs = a.bracket(col_of(m, i), unit(n, j));
            Vec rhs2 = a.bracket(unit(n, i), col_of(m, j));
            for (size_t k = 0; k < rhs.size(); ++k) rhs[k] += rhs2[k];
            Vec res = sub(lhs, rhs);
            if (!row_zero(res)) return MapWitness{i, j, std::move(res)};
        }
    return std::nullopt;
}

std::optional<MapWitness> antiderivation_violation(const Algebra& a, const LinMap& m)
{
    const int n = a.dim();
    assert(m.rows() == n && m.cols() == n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec lhs = mat_vec(m, a.bracket_basis(i, j));
            Vec rhs = a.bracket(col_of(m, i), unit(n, j));
            Vec rhs2 = a.bracket(col_of(m, j), unit(n, i));
            for (size_t k = 0; k < rhs.size(); ++k) rhs[k] -= rhs2[k];
            Vec res = sub(lhs, rhs);
            if (!row_zero(res)) return MapWitness{i, j, std::move(res)};
        }
    return std::nullopt;
}

std::optional<MapWitness> biderivation_violation(const Algebra& a, const Bider& b)
{
    if (auto w = derivation_violation(a, b.d)) return w;
    if (auto w = antiderivation_violation(a, b.D)) return w;
    const int n = a.dim();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Vec lhs = a.bracket(unit(n, x), col_of(b.d, y));
            Vec rhs = a.bracket(unit(n, x), col_of(b.D, y));
            Vec res = sub(lhs, rhs);
            if (!row_zero(res)) return MapWitness{x, y, std::move(res)};
        }
    return std::nullopt;
}

LinMap der_bracket(const LinMap& d1, const LinMap& d2)
{
    return d1 * d2 - d2 * d1;
}

Bider bider_bracket(const Bider& b1, const Bider& b2)
{
    return {b1.d * b2.d - b2.d * b1.d, b1.D * b2.d - b2.d * b1.D};
}

bool span_contains(const MapSpace& s, const LinMap& m)
{
    assert(s.kind != SpaceKind::bider);
    return in_span(s.basis, vectorize(m));
}

bool span_contains(const MapSpace& s, const Bider& b)
{
    assert(s.kind == SpaceKind::bider);
    return in_span(s.basis, vectorize(b));
}

MapSpace inner_bider_space(const Algebra& a)
{
    const int n = a.dim();
    std::vector<Vec> gens;
    for (int i = 0; i < n; ++i)
        gens.push_back(vectorize(inner_biderivation(a, unit(n, i))));
    MapSpace s{SpaceKind::bider, n, span_basis(gens)};
    s.leibniz_warning = !check_right_leibniz(a).empty();
    return s;
}

} // namespace leibniz
