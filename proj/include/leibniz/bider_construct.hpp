#pragma once

#include <leibniz/catalog.hpp>

namespace leibniz {

/// Bider(L) assembled as an algebra over the canonical solver basis.
struct InducedAlgebra {
    MapSpace basis;
    Algebra algebra;
    bool closure_ok = true;
    /// First pair whose bracket left the span, when closure fails.
    std::optional<std::pair<int, int>> failed_pair;
};

InducedAlgebra bider_algebra(const Algebra& a);

/// One table row whose computed bracket differs from the expected entry.
struct TableDelta {
    std::string lhs, rhs;
    Combo expected;
    /// Computed bracket in the named basis, when it lies in its span.
    std::optional<Combo> got;
};

struct ConformanceReport {
    FamilyId family;
    /// Elements that fail is_biderivation on the family algebra.
    std::vector<std::string> basis_defects;
    std::vector<TableDelta> mismatches;
    int checked_pairs = 0;

    bool ok() const { return basis_defects.empty() && mismatches.empty(); }
};

/// Brackets every ordered pair of named elements and compares against the
/// table (absent pairs expect zero). Mismatches are reported, not thrown.
ConformanceReport verify_table(const Algebra& a, const PaperBiderBasis& pb);

/// Deterministic plain-text rendering, one line per pair checked summary
/// plus one line per delta.
std::string format_conformance(const ConformanceReport& rep);

struct InnernessReport {
    int dim_bider = 0;
    int dim_inner = 0;
    bool inner_equals_all = false;
};

InnernessReport innerness(const Algebra& a);

/// Isomorphism-invariant profile: cheap necessary conditions only.
struct InvariantFingerprint {
    int dim = 0;
    std::vector<int> lower_central;
    std::vector<int> derived;
    int squares_dim = 0;
    int bracket_rank = 0;

    friend bool operator==(const InvariantFingerprint&,
                           const InvariantFingerprint&) = default;
};

InvariantFingerprint fingerprint(const Algebra& a);

/// Verdict of checking a candidate isomorphism matrix.
struct HomWitness {
    bool ok = false;
    std::string reason; // empty when ok
    int i = -1, j = -1; // first basis pair violating the hom property
};

/// True iff p is invertible and p([x,y]) = [p(x), p(y)] on all basis pairs.
HomWitness verify_hom(const Algebra& src, const Algebra& dst, const LinMap& p);

} // namespace leibniz
