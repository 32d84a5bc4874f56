#include <doctest.h>

#include <leibniz/catalog.hpp>

using namespace leibniz;

TEST_SUITE_BEGIN("map_spaces");

namespace {

Vec unit(int n, int i)
{
    Vec v(n, Rat(0));
    v[i] = 1;
    return v;
}

std::vector<Vec> squares_span_vectors(const Algebra& a)
{
    std::vector<Vec> out;
    const int n = a.dim();
    for (int i = 0; i < n; ++i) {
        out.push_back(a.bracket_basis(i, i));
        for (int j = i + 1; j < n; ++j) {
            Vec v = a.bracket_basis(i, j);
            const Vec w = a.bracket_basis(j, i);
            for (int k = 0; k < n; ++k) v[k] += w[k];
            out.push_back(std::move(v));
        }
    }
    return out;
}

} // namespace

TEST_CASE("space dimensions match the frozen table")
{
    struct Row {
        FamilyTag tag;
        int n;
        int der, antider, bider;
    };
    const Row rows[] = {
        {FamilyTag::NF, 2, 2, 2, 3},    {FamilyTag::NF, 4, 4, 4, 7},
        {FamilyTag::NF, 5, 5, 5, 9},    {FamilyTag::F1, 4, 5, 6, 9},
        {FamilyTag::F1, 5, 6, 7, 11},   {FamilyTag::F2, 4, 6, 6, 11},
        {FamilyTag::F2, 5, 7, 7, 13},   {FamilyTag::R_NF, 2, 2, 3, 3},
        {FamilyTag::R_NF, 4, 2, 5, 5},  {FamilyTag::R_F1, 4, 3, 7, 6},
        {FamilyTag::R_F1, 5, 3, 8, 7},  {FamilyTag::L1, 4, 4, 6, 6},
        {FamilyTag::L1, 5, 4, 7, 7},    {FamilyTag::L2, 4, 3, 7, 6},
        {FamilyTag::L2, 5, 3, 8, 7},
    };
    for (const auto& r : rows) {
        CAPTURE(family_name(r.tag));
        CAPTURE(r.n);
        const Algebra a = make_algebra({r.tag, r.n});
        CHECK(derivation_space(a).dim() == r.der);
        CHECK(antiderivation_space(a).dim() == r.antider);
        CHECK(biderivation_space(a).dim() == r.bider);
    }
}

TEST_CASE("computed basis elements satisfy the defining identities")
{
    for (FamilyTag t : all_families()) {
        const int n = std::max(family_min_n(t), 4);
        const Algebra a = make_algebra({t, n});
        const MapSpace der = derivation_space(a);
        for (int i = 0; i < der.dim(); ++i)
            CHECK(is_derivation(a, der.map_at(i)));
        const MapSpace anti = antiderivation_space(a);
        for (int i = 0; i < anti.dim(); ++i)
            CHECK(is_antiderivation(a, anti.map_at(i)));
        const MapSpace bid = biderivation_space(a);
        for (int i = 0; i < bid.dim(); ++i)
            CHECK(is_biderivation(a, bid.bider_at(i)));
    }
}

TEST_CASE("violation witnesses point at real failures")
{
    const Algebra a = make_algebra({FamilyTag::NF, 3});
    LinMap m = Mat::identity(3); // identity is not a derivation of NF_3
    const auto w = derivation_violation(a, m);
    REQUIRE(w.has_value());
    CHECK(w->residual != Vec(3, Rat(0)));
    CHECK_FALSE(is_derivation(a, m));
    CHECK(is_derivation(a, LinMap(3, 3)));
    CHECK(is_antiderivation(a, LinMap(3, 3)));
}

TEST_CASE("right multiplications are derivations, pairs are biderivations")
{
    for (FamilyTag t : all_families()) {
        const int n = std::max(family_min_n(t), 4);
        const Algebra a = make_algebra({t, n});
        for (int i = 0; i < a.dim(); ++i) {
            const Vec x = unit(a.dim(), i);
            CHECK(is_derivation(a, inner_derivation(a, x)));
            CHECK(is_biderivation(a, inner_biderivation(a, x)));
        }
    }
}

TEST_CASE("anti-derivations annihilate the span of squares")
{
    for (FamilyTag t : all_families()) {
        for (int n = std::max(family_min_n(t), 4); n <= 6; ++n) {
            const Algebra a = make_algebra({t, n});
            const MapSpace anti = antiderivation_space(a);
            for (int i = 0; i < anti.dim(); ++i) {
                const LinMap D = anti.map_at(i);
                for (const auto& sq : squares_span_vectors(a))
                    CHECK(mat_vec(D, sq) == Vec(a.dim(), Rat(0)));
            }
        }
    }
}

TEST_CASE("rank-nullity holds on every assembled system")
{
    for (FamilyTag t : all_families()) {
        const int n = std::max(family_min_n(t), 4);
        const Algebra a = make_algebra({t, n});
        const int d = a.dim();
        const Mat sys[] = {derivation_system(a), antiderivation_system(a),
                           biderivation_system(a)};
        const int unknowns[] = {d * d, d * d, 2 * d * d};
        const int soldim[] = {derivation_space(a).dim(),
                              antiderivation_space(a).dim(),
                              biderivation_space(a).dim()};
        for (int k = 0; k < 3; ++k) {
            CHECK(sys[k].cols() == unknowns[k]);
            CHECK(rref(sys[k]).rank + soldim[k] == unknowns[k]);
        }
    }
}

TEST_CASE("brackets of derivations and biderivations stay in their spaces")
{
    const Algebra a = make_algebra({FamilyTag::F1, 5});
    const MapSpace der = derivation_space(a);
    for (int i = 0; i < der.dim(); ++i)
        for (int j = 0; j < der.dim(); ++j) {
            const LinMap c = der_bracket(der.map_at(i), der.map_at(j));
            CHECK(is_derivation(a, c));
            CHECK(span_contains(der, c));
        }
    const MapSpace bid = biderivation_space(a);
    for (int i = 0; i < bid.dim(); ++i)
        for (int j = 0; j < bid.dim(); ++j) {
            const Bider c = bider_bracket(bid.bider_at(i), bid.bider_at(j));
            CHECK(is_biderivation(a, c));
            CHECK(span_contains(bid, c));
        }
}

TEST_CASE("bider bracket follows the defining formula")
{
    const int n = 3;
    Bider b1{Mat(n, n), Mat(n, n)}, b2{Mat(n, n), Mat(n, n)};
    int v = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            b1.d.at(i, j) = v++;
            b1.D.at(i, j) = v++;
            b2.d.at(i, j) = v++;
            b2.D.at(i, j) = v++;
        }
    const Bider c = bider_bracket(b1, b2);
    CHECK(c.d == b1.d * b2.d - b2.d * b1.d);
    CHECK(c.D == b1.D * b2.d - b2.d * b1.D);
}

TEST_CASE("vectorization round-trips")
{
    const Algebra a = make_algebra({FamilyTag::L2, 4});
    const MapSpace bid = biderivation_space(a);
    REQUIRE(bid.dim() > 0);
    const Bider b = bid.bider_at(0);
    CHECK(bider_from_vec(a.dim(), vectorize(b)) == b);
    const MapSpace der = derivation_space(a);
    const LinMap m = der.map_at(0);
    CHECK(linmap_from_vec(a.dim(), vectorize(m)) == m);
}

TEST_CASE("inner biderivation space of NF_n has dimension n-1")
{
    for (int n = 2; n <= 6; ++n) {
        const Algebra a = make_algebra({FamilyTag::NF, n});
        // e_n is central with zero right multiplication, so its pair drops out
        CHECK(inner_bider_space(a).dim() == n - 1);
    }
}

TEST_CASE("non-Leibniz input is flagged but still solved exactly")
{
    Algebra broken(2);
    broken.set_c(0, 0, 1, 1);
    broken.set_c(1, 0, 0, 1);
    const MapSpace der = derivation_space(broken);
    CHECK(der.leibniz_warning);
    for (int i = 0; i < der.dim(); ++i) CHECK(is_derivation(broken, der.map_at(i)));
}

TEST_SUITE_END();
