#include <doctest.h>

#include <leibniz/catalog.hpp>

using namespace leibniz;

TEST_SUITE_BEGIN("algebra");

namespace {

Algebra so3()
{
    Algebra a(3);
    a.set_c(0, 1, 2, 1);
    a.set_c(1, 0, 2, -1);
    a.set_c(1, 2, 0, 1);
    a.set_c(2, 1, 0, -1);
    a.set_c(2, 0, 1, 1);
    a.set_c(0, 2, 1, -1);
    return a;
}

Vec unit(int n, int i)
{
    Vec v(n, Rat(0));
    v[i] = 1;
    return v;
}

} // namespace

TEST_CASE("bracket is the bilinear extension of the structure constants")
{
    const Algebra a = make_algebra({FamilyTag::NF, 3});
    CHECK(a.bracket_basis(0, 0) == Vec{Rat(0), Rat(1), Rat(0)});
    CHECK(a.bracket_basis(1, 0) == Vec{Rat(0), Rat(0), Rat(1)});
    const Vec x{Rat(2), Rat(1, 2), Rat(0)};
    const Vec y{Rat(1), Rat(0), Rat(3)};
    // [2e1 + e2/2, e1 + 3e3] = 2e2 + e3/2
    CHECK(a.bracket(x, y) == Vec{Rat(0), Rat(2), Rat(1, 2)});
}

TEST_CASE("right and left Leibniz checks")
{
    CHECK(check_right_leibniz(make_algebra({FamilyTag::NF, 3})).empty());
    CHECK(check_right_leibniz(so3()).empty());
    CHECK(check_left_leibniz(so3()).empty());
    // non-Lie Leibniz algebras need not satisfy the left identity
    const auto viol = check_left_leibniz(make_algebra({FamilyTag::NF, 3}));
    REQUIRE_FALSE(viol.empty());
    CHECK(viol.front().i == 0);
    CHECK(viol.front().j == 0);
    CHECK(viol.front().k == 0);

    Algebra broken(2);
    broken.set_c(0, 0, 1, 1);
    broken.set_c(1, 0, 0, 1); // [[e1,e1],e1] = e1, but rhs vanishes
    CHECK_FALSE(check_right_leibniz(broken).empty());
}

TEST_CASE("violation residual is lhs minus rhs")
{
    Algebra broken(2);
    broken.set_c(0, 0, 1, 1);
    broken.set_c(1, 0, 0, 1);
    const auto viol = check_right_leibniz(broken);
    REQUIRE_FALSE(viol.empty());
    const auto& v = viol.front();
    const Vec lhs = broken.bracket(broken.bracket_basis(v.i, v.j), unit(2, v.k));
    Vec rhs = broken.bracket(broken.bracket_basis(v.i, v.k), unit(2, v.j));
    const Vec r2 = broken.bracket(unit(2, v.i), broken.bracket_basis(v.j, v.k));
    for (int m = 0; m < 2; ++m) rhs[m] += r2[m];
    for (int m = 0; m < 2; ++m) CHECK(v.residual[m] == lhs[m] - rhs[m]);
}

TEST_CASE("subspaces and products")
{
    const Algebra a = make_algebra({FamilyTag::NF, 4});
    const Subspace full = Subspace::full(4);
    const Subspace sq = product_subspace(a, full, full);
    CHECK(sq.dim() == 3); // span(e2, e3, e4)
    CHECK(full.contains(sq));
    CHECK_FALSE(sq.contains(full));
    CHECK(Subspace::zero(4).dim() == 0);
    const Subspace s = Subspace::span(3, {{Rat(1), Rat(1), Rat(0)},
                                          {Rat(2), Rat(2), Rat(0)}});
    CHECK(s.dim() == 1);
}

TEST_CASE("series on frozen examples")
{
    const auto nf4_lcs = lower_central_series(make_algebra({FamilyTag::NF, 4}));
    CHECK(nf4_lcs.dims == std::vector<int>{4, 3, 2, 1, 0});
    CHECK(nf4_lcs.index == 5);
    const auto nf4_ds = derived_series(make_algebra({FamilyTag::NF, 4}));
    CHECK(nf4_ds.dims == std::vector<int>{4, 3, 0});
    CHECK(nf4_ds.index == 3);

    const Algebra r = make_algebra({FamilyTag::R_NF, 3}); // dim 4, solvable
    const auto r_lcs = lower_central_series(r);
    CHECK(r_lcs.dims == std::vector<int>{4, 3, 3}); // stabilizes, nonzero
    CHECK_FALSE(r_lcs.index.has_value());
    const auto r_ds = derived_series(r);
    CHECK(r_ds.dims == std::vector<int>{4, 3, 2, 0});
    CHECK(r_ds.index == 4);

    const Algebra abelian(3);
    const auto ab_lcs = lower_central_series(abelian);
    CHECK(ab_lcs.dims == std::vector<int>{3, 0});
    CHECK(ab_lcs.index == 2);

    CHECK(is_nilpotent(make_algebra({FamilyTag::NF, 5})));
    CHECK_FALSE(is_nilpotent(r));
    CHECK(is_solvable(r));
}

TEST_CASE("filiform detection")
{
    CHECK(filiform_check(make_algebra({FamilyTag::F1, 4})));
    CHECK(filiform_check(make_algebra({FamilyTag::F2, 5})));
    CHECK_FALSE(filiform_check(make_algebra({FamilyTag::NF, 4})));
    CHECK_FALSE(filiform_check(Algebra(4)));
}

TEST_SUITE_END();
