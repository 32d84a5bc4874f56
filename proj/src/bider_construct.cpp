#include <leibniz/bider_construct.hpp>

#include <sstream>

namespace leibniz {

InducedAlgebra bider_algebra(const Algebra& a)
{
    InducedAlgebra out;
    out.basis = biderivation_space(a);
    const int m = out.basis.dim();
    out.algebra = Algebra(m > 0 ? m : 1);
    if (m == 0) return out;
    std::vector<Bider> els;
    for (int i = 0; i < m; ++i) els.push_back(out.basis.bider_at(i));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const Vec br = vectorize(bider_bracket(els[i], els[j]));
            const auto coords = coords_in(out.basis.basis, br);
            if (!coords) {
                out.closure_ok = false;
                if (!out.failed_pair) out.failed_pair = {i, j};
                continue;
            }
            for (int k = 0; k < m; ++k)
                if ((*coords)[k] != 0) out.algebra.set_c(i, j, k, (*coords)[k]);
        }
    return out;
}

namespace {

Vec combo_vec(const PaperBiderBasis& pb, const std::vector<Vec>& vecs,
              const Combo& combo)
{
    Vec out(vecs.empty() ? 0 : vecs[0].size(), Rat(0));
    for (const auto& [name, coef] : combo) {
        const int idx = pb.index_of(name);
        if (idx < 0) continue;
        for (size_t i = 0; i < out.size(); ++i) out[i] += coef * vecs[idx][i];
    }
    return out;
}

std::string rat_coef(const Rat& r) { return rat_str(r); }

std::string combo_str(const Combo& combo)
{
    if (combo.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, coef] : combo) {
        if (coef == 0) continue;
        Rat c = coef;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (c != 1) os << rat_coef(c) << "*";
        os << name;
        first = false;
    }
    if (first) return "0";
    return os.str();
}

} // namespace

ConformanceReport verify_table(const Algebra& a, const PaperBiderBasis& pb)
{
    ConformanceReport rep;
    rep.family = pb.family;
    const size_t m = pb.elements.size();
    for (size_t i = 0; i < m; ++i)
        if (!is_biderivation(a, pb.elements[i]))
            rep.basis_defects.push_back(pb.names[i]);
    std::vector<Vec> vecs;
    for (const auto& el : pb.elements) vecs.push_back(vectorize(el));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            ++rep.checked_pairs;
            const Vec got = vectorize(bider_bracket(pb.elements[i], pb.elements[j]));
            Combo expected;
            const auto it = pb.table.find({pb.names[i], pb.names[j]});
            if (it != pb.table.end()) expected = it->second;
            if (got == combo_vec(pb, vecs, expected)) continue;
            TableDelta d;
            d.lhs = pb.names[i];
            d.rhs = pb.names[j];
            d.expected = std::move(expected);
            if (auto coords = coords_in(vecs, got)) {
                Combo c;
                for (size_t k = 0; k < coords->size(); ++k)
                    if ((*coords)[k] != 0) c.push_back({pb.names[k], (*coords)[k]});
                d.got = std::move(c);
            }
            rep.mismatches.push_back(std::move(d));
        }
    return rep;
}

std::string format_conformance(const ConformanceReport& rep)
{
    std::ostringstream os;
    os << "family " << family_name(rep.family.tag) << " n=" << rep.family.n
       << " pairs=" << rep.checked_pairs
       << " defects=" << rep.basis_defects.size()
       << " mismatches=" << rep.mismatches.size() << "\n";
    for (const auto& name : rep.basis_defects)
        os << "  defect: " << name << " is not a biderivation\n";
    for (const auto& d : rep.mismatches) {
        os << "  [" << d.lhs << "," << d.rhs << "] expected "
           << combo_str(d.expected) << ", computed ";
        if (d.got)
            os << combo_str(*d.got);
        else
            os << "(outside the span of the listed elements)";
        os << "\n";
    }
    return os.str();
}

InnernessReport innerness(const Algebra& a)
{
    InnernessReport rep;
    const MapSpace all = biderivation_space(a);
    const MapSpace inner = inner_bider_space(a);
    rep.dim_bider = all.dim();
    rep.dim_inner = inner.dim();
    bool contained = true;
    for (const auto& v : inner.basis)
        if (!in_span(all.basis, v)) contained = false;
    rep.inner_equals_all = contained && rep.dim_inner == rep.dim_bider;
    return rep;
}

InvariantFingerprint fingerprint(const Algebra& a)
{
    InvariantFingerprint fp;
    const int n = a.dim();
    fp.dim = n;
    fp.lower_central = lower_central_series(a).dims;
    fp.derived = derived_series(a).dims;
    // span of {[x,x]}: polarization gives [e_i,e_i] and [e_i,e_j]+[e_j,e_i]
    std::vector<Vec> sq;
    for (int i = 0; i < n; ++i) {
        sq.push_back(a.bracket_basis(i, i));
        for (int j = i + 1; j < n; ++j) {
            Vec v = a.bracket_basis(i, j);
            const Vec w = a.bracket_basis(j, i);
            for (int k = 0; k < n; ++k) v[k] += w[k];
            sq.push_back(std::move(v));
        }
    }
    fp.squares_dim = span_rank(sq);
    std::vector<Vec> all;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) all.push_back(a.bracket_basis(i, j));
    fp.bracket_rank = span_rank(all);
    return fp;
}

HomWitness verify_hom(const Algebra& src, const Algebra& dst, const LinMap& p)
{
    HomWitness w;
    const int n = src.dim();
    if (dst.dim() != n || p.rows() != n || p.cols() != n) {
        w.reason = "dimension mismatch";
        return w;
    }
    std::vector<Vec> cols;
    for (int j = 0; j < n; ++j) {
        Vec c(n);
        for (int r = 0; r < n; ++r) c[r] = p.at(r, j);
        cols.push_back(std::move(c));
    }
    if (span_rank(cols) != n) {
        w.reason = "matrix is singular";
        return w;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Vec lhs = mat_vec(p, src.bracket_basis(i, j));
            const Vec rhs = dst.bracket(cols[i], cols[j]);
            if (lhs != rhs) {
                w.reason = "bracket not preserved";
                w.i = i;
                w.j = j;
                return w;
            }
        }
    w.ok = true;
    return w;
}

} // namespace leibniz
