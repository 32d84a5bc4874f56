#pragma once

#include <leibniz/algebra.hpp>

namespace leibniz {

/// Square matrix of a linear map; column j is the image of e_j.
using LinMap = Mat;

/// Pair (d, D): derivation part and anti-derivation part.
struct Bider {
    LinMap d, D;
    friend bool operator==(const Bider&, const Bider&) = default;
};

enum class SpaceKind { der, antider, bider };

/// Vectorization fixing the canonical coordinates: row-major flatten of d,
/// then (for pairs) row-major flatten of D.
Vec vectorize(const LinMap& m);
Vec vectorize(const Bider& b);
LinMap linmap_from_vec(int n, const Vec& v);
Bider bider_from_vec(int n, const Vec& v);

/// Echelonized basis of a linear space of maps or pairs.
struct MapSpace {
    SpaceKind kind;
    int n = 0;
    std::vector<Vec> basis;
    /// Set when the source algebra failed the right Leibniz check; the
    /// space is still the exact solution set of the linear systems.
    bool leibniz_warning = false;

    int dim() const { return int(basis.size()); }
    LinMap map_at(size_t i) const;
    Bider bider_at(size_t i) const;
};

/// Coefficient matrices of the defining linear systems (zero rows dropped,
/// assembly order fixed by (i, j, coordinate)). Unknowns are the vectorized
/// map entries.
Mat derivation_system(const Algebra& a);
Mat antiderivation_system(const Algebra& a);
/// Stacked system in 2n^2 unknowns: derivation rows on d, anti-derivation
/// rows on D, then the compatibility [x, d(y)] = [x, D(y)] rows.
Mat biderivation_system(const Algebra& a);

MapSpace derivation_space(const Algebra& a);
MapSpace antiderivation_space(const Algebra& a);
MapSpace biderivation_space(const Algebra& a);

/// Matrix of the right adjoint y -> [y, x].
LinMap inner_derivation(const Algebra& a, const Vec& x);
/// Matrix of the left adjoint y -> [x, y].
LinMap left_adjoint(const Algebra& a, const Vec& x);
/// The pair (-ad_x, Ad_x).
Bider inner_biderivation(const Algebra& a, const Vec& x);

/// First basis pair on which the defining identity fails.
struct MapWitness {
    int i, j;
    Vec residual;
};

std::optional<MapWitness> derivation_violation(const Algebra& a, const LinMap& m);
std::optional<MapWitness> antiderivation_violation(const Algebra& a, const LinMap& m);
std::optional<MapWitness> biderivation_violation(const Algebra& a, const Bider& b);

inline bool is_derivation(const Algebra& a, const LinMap& m) { return !derivation_violation(a, m); }
inline bool is_antiderivation(const Algebra& a, const LinMap& m) { return !antiderivation_violation(a, m); }
inline bool is_biderivation(const Algebra& a, const Bider& b) { return !biderivation_violation(a, b); }

/// [d1, d2] = d1 o d2 - d2 o d1.
LinMap der_bracket(const LinMap& d1, const LinMap& d2);

/// [(d,D),(d',D')] = (d o d' - d' o d, D o d' - d' o D).
Bider bider_bracket(const Bider& b1, const Bider& b2);

bool span_contains(const MapSpace& s, const LinMap& m);
bool span_contains(const MapSpace& s, const Bider& b);

/// Echelonized span of the inner biderivations of the basis vectors.
MapSpace inner_bider_space(const Algebra& a);

} // namespace leibniz
