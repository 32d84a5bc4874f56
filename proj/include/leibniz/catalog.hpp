#pragma once

#include <leibniz/map_spaces.hpp>

#include <map>
#include <string>

namespace leibniz {

enum class FamilyTag { NF, F1, F2, R_NF, R_F1, L1, L2 };

/// A family together with the nilradical dimension n. Total dimension is
/// n for NF/F1/F2, n+1 for R_NF, n+2 for R_F1/L1/L2.
struct FamilyId {
    FamilyTag tag;
    int n;
};

const char* family_name(FamilyTag t);
std::optional<FamilyTag> family_from_name(const std::string& s);
std::vector<FamilyTag> all_families();

/// Smallest n for which the family's table is well formed.
int family_min_n(FamilyTag t);
int family_total_dim(FamilyId f);

/// The multiplication table of the family; omitted products are zero.
/// Basis order puts the h generators first: (h, e_1..e_n) for R_NF and
/// (h_1, h_2, e_1..e_n) for R_F1/L1/L2, so the closed-form matrices below
/// align column-for-column. Throws std::invalid_argument when n is below
/// the family minimum.
Algebra make_algebra(FamilyId f);

/// Closed-form family of maps with one generator per free parameter,
/// already vectorized (length n^2, or 2n^2 for bider pairs).
struct ParametricForm {
    FamilyId family;
    SpaceKind kind;
    std::vector<std::string> params;
    std::vector<Vec> generators;

    int count() const { return int(generators.size()); }
};

ParametricForm paper_form(FamilyId f, SpaceKind kind);

/// Linear combination of named basis elements.
using Combo = std::vector<std::pair<std::string, Rat>>;

/// Named biderivation basis with the expected bracket table; pairs absent
/// from the table are expected to bracket to zero.
struct PaperBiderBasis {
    FamilyId family;
    std::vector<std::string> names;
    std::vector<Bider> elements;
    std::map<std::pair<std::string, std::string>, Combo> table;

    int index_of(const std::string& name) const;
};

PaperBiderBasis paper_bider_basis(FamilyId f);

/// Stated dimension next to the free-parameter count of the closed form;
/// `discrepancy` flags the places where the two disagree.
struct ExpectedDim {
    int stated = 0;
    int param_count = 0;
    bool discrepancy = false;
    std::string note;
};

ExpectedDim expected_dim(FamilyId f, SpaceKind kind);

} // namespace leibniz
