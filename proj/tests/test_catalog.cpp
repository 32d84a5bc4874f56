#include <doctest.h>

#include <leibniz/catalog.hpp>

using namespace leibniz;

TEST_SUITE_BEGIN("catalog");

namespace {

MapSpace solve_space(const Algebra& a, SpaceKind kind)
{
    switch (kind) {
    case SpaceKind::der: return derivation_space(a);
    case SpaceKind::antider: return antiderivation_space(a);
    default: return biderivation_space(a);
    }
}

} // namespace

TEST_CASE("family metadata")
{
    CHECK(family_from_name("NF") == FamilyTag::NF);
    CHECK(family_from_name("R_F1") == FamilyTag::R_F1);
    CHECK_FALSE(family_from_name("nope").has_value());
    CHECK(std::string(family_name(FamilyTag::L2)) == "L2");
    CHECK(family_total_dim({FamilyTag::NF, 5}) == 5);
    CHECK(family_total_dim({FamilyTag::R_NF, 5}) == 6);
    CHECK(family_total_dim({FamilyTag::L1, 5}) == 7);
    CHECK(all_families().size() == 7);
    CHECK_THROWS_AS(make_algebra({FamilyTag::F1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(make_algebra({FamilyTag::R_NF, 1}), std::invalid_argument);
}

TEST_CASE("multiplication tables of small representatives")
{
    const Algebra nf3 = make_algebra({FamilyTag::NF, 3});
    CHECK(nf3.c(0, 0, 1) == 1); // [e1,e1] = e2
    CHECK(nf3.c(1, 0, 2) == 1); // [e2,e1] = e3
    CHECK(nf3.c(2, 0, 0) == 0);

    const Algebra r = make_algebra({FamilyTag::R_NF, 3}); // basis (h, e1..e3)
    CHECK(r.labels()[0] == "h");
    CHECK(r.c(0, 1, 1) == -1);          // [h,e1] = -e1
    CHECK(r.c(2, 0, 2) == 2);           // [e2,h] = 2 e2
    CHECK(r.c(3, 0, 3) == 3);           // [e3,h] = 3 e3
    CHECK(r.c(1, 1, 2) == 1);           // [e1,e1] = e2

    const Algebra l1 = make_algebra({FamilyTag::L1, 4}); // (h1,h2,e1..e4)
    CHECK(l1.c(0, 3, 3) == -1); // [h1,e2] = -e2
    const Algebra l2 = make_algebra({FamilyTag::L2, 4});
    CHECK(l2.c(0, 3, 3) == 0);  // absent in the second variant
    CHECK(l2.c(3, 0, 3) == 1);  // [e2,h1] = e2 in both
    CHECK(l1.c(2, 2, 4) == 1);  // [e1,e1] = e3

    const Algebra f2 = make_algebra({FamilyTag::F2, 5});
    CHECK(f2.c(0, 0, 2) == 1); // [e1,e1] = e3
    CHECK(f2.c(1, 0, 2) == 0); // [e2,e1] = 0 distinguishes F2 from F1
    CHECK(make_algebra({FamilyTag::F1, 5}).c(1, 0, 2) == 1);
}

TEST_CASE("all catalog algebras satisfy the right Leibniz identity")
{
    for (FamilyTag t : all_families())
        for (int n = std::max(family_min_n(t), 2); n <= 8; ++n) {
            CAPTURE(family_name(t));
            CAPTURE(n);
            CHECK(check_right_leibniz(make_algebra({t, n})).empty());
        }
}

TEST_CASE("closed-form generator counts and spot values")
{
    const ParametricForm nf_der = paper_form({FamilyTag::NF, 4}, SpaceKind::der);
    REQUIRE(nf_der.count() == 4);
    CHECK(nf_der.params[0] == "alpha_1");
    const LinMap g1 = linmap_from_vec(4, nf_der.generators[0]);
    for (int i = 0; i < 4; ++i) CHECK(g1.at(i, i) == i + 1); // diag(1,2,3,4)

    const ParametricForm f1_anti = paper_form({FamilyTag::F1, 5}, SpaceKind::antider);
    REQUIRE(f1_anti.count() == 7);
    CHECK(f1_anti.params[5] == "beta_6");
    const LinMap b6 = linmap_from_vec(5, f1_anti.generators[5]);
    CHECK(b6.at(0, 1) == 1);  // D(e2) = e1 - e2
    CHECK(b6.at(1, 1) == -1);

    const ParametricForm rnf_bid = paper_form({FamilyTag::R_NF, 4}, SpaceKind::bider);
    REQUIRE(rnf_bid.count() == 5); // alpha_1, alpha_2, beta_3..beta_5
    CHECK(rnf_bid.params == std::vector<std::string>{"alpha_1", "alpha_2",
                                                     "beta_3", "beta_4",
                                                     "beta_5"});
}

TEST_CASE("every generator satisfies its defining identity")
{
    for (FamilyTag t : all_families()) {
        const int n = std::max(family_min_n(t), 4);
        const Algebra a = make_algebra({t, n});
        for (SpaceKind kind :
             {SpaceKind::der, SpaceKind::antider, SpaceKind::bider}) {
            const ParametricForm pf = paper_form({t, n}, kind);
            for (const auto& g : pf.generators) {
                if (kind == SpaceKind::der)
                    CHECK(is_derivation(a, linmap_from_vec(a.dim(), g)));
                else if (kind == SpaceKind::antider)
                    CHECK(is_antiderivation(a, linmap_from_vec(a.dim(), g)));
                else
                    CHECK(is_biderivation(a, bider_from_vec(a.dim(), g)));
            }
        }
    }
}

TEST_CASE("closed forms span exactly the solver spaces")
{
    for (FamilyTag t : all_families()) {
        for (int n :
             {std::max(family_min_n(t), 4), std::max(family_min_n(t), 4) + 1}) {
            const Algebra a = make_algebra({t, n});
            for (SpaceKind kind :
                 {SpaceKind::der, SpaceKind::antider, SpaceKind::bider}) {
                CAPTURE(family_name(t));
                CAPTURE(n);
                CAPTURE(int(kind));
                const ParametricForm pf = paper_form({t, n}, kind);
                const MapSpace s = solve_space(a, kind);
                CHECK(span_rank(pf.generators) == pf.count());
                CHECK(pf.count() == s.dim());
                CHECK(same_span(span_basis(pf.generators), s.basis));
            }
        }
    }
}

TEST_CASE("named basis elements match the printed matrix units")
{
    const PaperBiderBasis nf4 = paper_bider_basis({FamilyTag::NF, 4});
    CHECK(nf4.names == std::vector<std::string>{"X1", "X2", "Y2", "X3", "Y3",
                                                "X4", "Y4"});
    const Bider& x2 = nf4.elements[nf4.index_of("X2")];
    LinMap want(4, 4);
    want.at(1, 0) = 1;
    want.at(2, 1) = 1;
    want.at(3, 2) = 1; // E21 + E32 + E43
    CHECK(x2.d == want);
    CHECK(x2.D == LinMap(4, 4));
    const Bider& y2 = nf4.elements[nf4.index_of("Y2")];
    CHECK(y2.d == LinMap(4, 4));
    CHECK(y2.D.at(1, 0) == 1);

    const PaperBiderBasis f15 = paper_bider_basis({FamilyTag::F1, 5});
    const Bider& x6 = f15.elements[f15.index_of("X6")];
    CHECK(x6.d.at(4, 1) == 1); // E_{n2}
    CHECK(x6.D == LinMap(5, 5));
    const Bider& y6 = f15.elements[f15.index_of("Y6")];
    CHECK(y6.D.at(4, 1) == 1);

    const PaperBiderBasis l15 = paper_bider_basis({FamilyTag::L1, 5});
    const Bider& x2l = l15.elements[l15.index_of("X2")];
    CHECK(x2l.d.at(3, 0) == -1); // (-E41, -E41)
    CHECK(x2l.D.at(3, 0) == -1);
}

TEST_CASE("every named element is a biderivation of its algebra")
{
    for (FamilyTag t : all_families()) {
        const int n = std::max(family_min_n(t), 4);
        const Algebra a = make_algebra({t, n});
        const PaperBiderBasis pb = paper_bider_basis({t, n});
        CHECK(pb.elements.size() == pb.names.size());
        for (size_t i = 0; i < pb.elements.size(); ++i) {
            CAPTURE(family_name(t));
            CAPTURE(pb.names[i]);
            CHECK(is_biderivation(a, pb.elements[i]));
        }
    }
}

TEST_CASE("named bases span exactly the biderivation spaces")
{
    for (FamilyTag t : all_families()) {
        for (int n = std::max(family_min_n(t), 2); n <= 6; ++n) {
            CAPTURE(family_name(t));
            CAPTURE(n);
            const Algebra a = make_algebra({t, n});
            const PaperBiderBasis pb = paper_bider_basis({t, n});
            std::vector<Vec> vecs;
            for (const auto& el : pb.elements) vecs.push_back(vectorize(el));
            CHECK(span_rank(vecs) == int(vecs.size()));
            CHECK(same_span(vecs, biderivation_space(a).basis));
        }
    }
}

TEST_CASE("stated dimensions and the flagged discrepancies")
{
    const ExpectedDim nf = expected_dim({FamilyTag::NF, 6}, SpaceKind::bider);
    CHECK(nf.stated == 11);
    CHECK_FALSE(nf.discrepancy);
    const ExpectedDim f2 = expected_dim({FamilyTag::F2, 6}, SpaceKind::bider);
    CHECK(f2.stated == 15);
    const ExpectedDim rnf = expected_dim({FamilyTag::R_NF, 4}, SpaceKind::bider);
    CHECK(rnf.stated == 6);
    CHECK(rnf.param_count == 5);
    CHECK(rnf.discrepancy);
    const ExpectedDim f1d = expected_dim({FamilyTag::F1, 5}, SpaceKind::der);
    CHECK(f1d.stated == 5);
    CHECK(f1d.param_count == 6);
    CHECK(f1d.discrepancy);
}

TEST_SUITE_END();
