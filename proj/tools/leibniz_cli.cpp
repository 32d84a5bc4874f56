#include <leibniz/algebra_io.hpp>
#include <leibniz/bider_construct.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace leibniz;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct SourceOpts {
    std::string family;
    int n = 0;
    std::string file;
};

void add_source_opts(CLI::App* cmd, SourceOpts& s)
{
    cmd->add_option("--family", s.family, "catalog family (NF, F1, F2, R_NF, R_F1, L1, L2)");
    cmd->add_option("--n", s.n, "nilradical dimension n");
    cmd->add_option("--file", s.file, "algebra file (JSON)");
}

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Algebra resolve_algebra(const SourceOpts& s)
{
    if (!s.file.empty()) {
        if (!s.family.empty())
            throw InputError("give either --file or --family, not both");
        try {
            return load_algebra(s.file);
        } catch (const ParseError& e) {
            throw InputError(e.what());
        }
    }
    if (s.family.empty())
        throw InputError("an algebra source is required: --file or --family with --n");
    const auto tag = family_from_name(s.family);
    if (!tag) throw InputError("unknown family: " + s.family);
    if (s.n <= 0) throw InputError("--n is required with --family");
    try {
        return make_algebra({*tag, s.n});
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

json rat_vec_json(const Vec& v)
{
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_str(x));
    return a;
}

json mat_json(const Mat& m)
{
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) rows.push_back(rat_vec_json(m.row(i)));
    return rows;
}

void print_matrix(std::ostream& os, const Mat& m, const std::string& indent)
{
    std::vector<std::vector<std::string>> cells(m.rows());
    std::vector<size_t> width(m.cols(), 0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            cells[i].push_back(rat_str(m.at(i, j)));
            width[j] = std::max(width[j], cells[i][j].size());
        }
    for (int i = 0; i < m.rows(); ++i) {
        os << indent << "[";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << " ";
            os << std::string(width[j] - cells[i][j].size(), ' ') << cells[i][j];
        }
        os << "]\n";
    }
}

void emit_report(const json& j, bool as_json, const std::string& pretty)
{
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << pretty;
}

std::string triple_str(const Algebra& a, int i, int j, int k)
{
    const auto& l = a.labels();
    return "(" + l[i] + "," + l[j] + "," + l[k] + ")";
}

int cmd_check(const SourceOpts& src, bool left, bool as_json)
{
    const Algebra a = resolve_algebra(src);
    const auto viol = left ? check_left_leibniz(a) : check_right_leibniz(a);
    const char* conv = left ? "left" : "right";
    json j;
    j["command"] = "check";
    j["convention"] = conv;
    j["dim"] = a.dim();
    j["ok"] = viol.empty();
    json jv = json::array();
    for (const auto& v : viol) {
        json rec;
        rec["i"] = v.i + 1;
        rec["j"] = v.j + 1;
        rec["k"] = v.k + 1;
        rec["residual"] = rat_vec_json(v.residual);
        jv.push_back(std::move(rec));
    }
    j["violations"] = std::move(jv);
    std::ostringstream os;
    if (viol.empty()) {
        os << conv << " Leibniz: OK\n";
    } else {
        os << conv << " Leibniz: FAIL (" << viol.size()
           << " violating triples)\n";
        const auto& v = viol.front();
        os << "first violation at " << triple_str(a, v.i, v.j, v.k)
           << ", residual " << rat_vec_json(v.residual).dump() << "\n";
    }
    emit_report(j, as_json, os.str());
    return viol.empty() ? kExitOk : kExitFail;
}

int cmd_space(const std::string& name, SpaceKind kind, const SourceOpts& src,
              bool as_json)
{
    const Algebra a = resolve_algebra(src);
    MapSpace s;
    switch (kind) {
    case SpaceKind::der: s = derivation_space(a); break;
    case SpaceKind::antider: s = antiderivation_space(a); break;
    case SpaceKind::bider: s = biderivation_space(a); break;
    }
    json j;
    j["command"] = name;
    j["dim"] = s.dim();
    json basis = json::array();
    for (int i = 0; i < s.dim(); ++i) {
        if (kind == SpaceKind::bider) {
            const Bider b = s.bider_at(i);
            json rec;
            rec["d"] = mat_json(b.d);
            rec["D"] = mat_json(b.D);
            basis.push_back(std::move(rec));
        } else {
            json rec;
            rec["d"] = mat_json(s.map_at(i));
            basis.push_back(std::move(rec));
        }
    }
    j["basis"] = std::move(basis);
    json warnings = json::array();
    if (s.leibniz_warning) warnings.push_back("input is not a right Leibniz algebra");
    j["warnings"] = std::move(warnings);

    std::ostringstream os;
    os << name << ": dim " << s.dim() << "\n";
    if (s.leibniz_warning)
        os << "warning: input is not a right Leibniz algebra\n";
    for (int i = 0; i < s.dim(); ++i) {
        os << "basis element " << (i + 1) << ":\n";
        if (kind == SpaceKind::bider) {
            const Bider b = s.bider_at(i);
            os << " d (columns are images):\n";
            print_matrix(os, b.d, "  ");
            os << " D (columns are images):\n";
            print_matrix(os, b.D, "  ");
        } else {
            print_matrix(os, s.map_at(i), "  ");
        }
    }
    emit_report(j, as_json, os.str());
    return kExitOk;
}

json series_json(const SeriesReport& r)
{
    json j;
    j["dims"] = r.dims;
    if (r.index)
        j["vanishing_index"] = *r.index;
    else
        j["vanishing_index"] = nullptr;
    return j;
}

int cmd_series(const SourceOpts& src, bool as_json)
{
    const Algebra a = resolve_algebra(src);
    const auto lcs = lower_central_series(a);
    const auto ds = derived_series(a);
    json j;
    j["command"] = "series";
    j["dim"] = a.dim();
    j["lower_central"] = series_json(lcs);
    j["derived"] = series_json(ds);
    j["nilpotent"] = lcs.index.has_value();
    j["solvable"] = ds.index.has_value();

    std::ostringstream os;
    auto dims_str = [](const std::vector<int>& d) {
        std::string s;
        for (size_t i = 0; i < d.size(); ++i)
            s += (i ? " " : "") + std::to_string(d[i]);
        return s;
    };
    os << "lower central dims: " << dims_str(lcs.dims) << "\n";
    os << "derived dims: " << dims_str(ds.dims) << "\n";
    os << "nilpotent: " << (lcs.index ? "yes" : "no")
       << ", solvable: " << (ds.index ? "yes" : "no") << "\n";
    emit_report(j, as_json, os.str());
    return kExitOk;
}

int cmd_bider_algebra(const SourceOpts& src, const std::string& emit_path,
                      bool as_json)
{
    const Algebra a = resolve_algebra(src);
    const InducedAlgebra ind = bider_algebra(a);
    const auto ds = derived_series(ind.algebra);
    const InnernessReport inn = innerness(a);
    json j;
    j["command"] = "bider-algebra";
    j["dim"] = ind.basis.dim();
    j["closure_ok"] = ind.closure_ok;
    j["solvable"] = ds.index.has_value();
    j["derived_dims"] = ds.dims;
    json inner;
    inner["dim_bider"] = inn.dim_bider;
    inner["dim_inner"] = inn.dim_inner;
    inner["inner_equals_all"] = inn.inner_equals_all;
    j["innerness"] = std::move(inner);
    json brackets = json::array();
    const Algebra& ia = ind.algebra;
    if (ind.basis.dim() > 0)
        for (int i = 0; i < ia.dim(); ++i)
            for (int jj = 0; jj < ia.dim(); ++jj)
                for (int k = 0; k < ia.dim(); ++k) {
                    if (ia.c(i, jj, k) == 0) continue;
                    json rec;
                    rec["i"] = i + 1;
                    rec["j"] = jj + 1;
                    rec["k"] = k + 1;
                    rec["c"] = rat_str(ia.c(i, jj, k));
                    brackets.push_back(std::move(rec));
                }
    j["brackets"] = std::move(brackets);

    if (!emit_path.empty()) {
        if (!ind.closure_ok)
            throw InputError("cannot emit: bracket left the computed span");
        save_algebra(ind.algebra, emit_path);
    }

    std::ostringstream os;
    os << "Bider algebra: dim " << ind.basis.dim() << ", closure "
       << (ind.closure_ok ? "ok" : "FAILED") << ", "
       << (ds.index ? "solvable" : "not solvable") << "\n";
    os << "inner biderivations: dim " << inn.dim_inner << " of "
       << inn.dim_bider
       << (inn.inner_equals_all ? " (all biderivations are inner)" : "")
       << "\n";
    os << "nonzero structure constants: " << j["brackets"].size() << "\n";
    if (!emit_path.empty()) os << "wrote " << emit_path << "\n";
    emit_report(j, as_json, os.str());
    return ind.closure_ok ? kExitOk : kExitFail;
}

// One row of the verify-paper report. PASS/FAIL rows are asserted claims;
// DELTA rows record known discrepancies and do not affect the exit status.
struct ClaimRow {
    std::string family;
    int n;
    std::string claim;
    std::string status;
    std::string detail;
};

std::string dims_to_str(const std::vector<int>& d)
{
    std::string s = "[";
    for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + "]";
}

void verify_family(FamilyId f, std::vector<ClaimRow>& rows)
{
    const std::string fam = family_name(f.tag);
    const int n = f.n;
    auto row = [&](const std::string& claim, bool pass, std::string detail) {
        rows.push_back({fam, n, claim, pass ? "PASS" : "FAIL", std::move(detail)});
    };
    auto delta = [&](const std::string& claim, std::string detail) {
        rows.push_back({fam, n, claim, "DELTA", std::move(detail)});
    };

    const Algebra a = make_algebra(f);
    row("right-leibniz", check_right_leibniz(a).empty(), "");

    const char* kind_name[] = {"der", "antider", "bider"};
    MapSpace spaces[3];
    for (int ki = 0; ki < 3; ++ki) {
        const auto kind = SpaceKind(ki);
        switch (kind) {
        case SpaceKind::der: spaces[ki] = derivation_space(a); break;
        case SpaceKind::antider: spaces[ki] = antiderivation_space(a); break;
        case SpaceKind::bider: spaces[ki] = biderivation_space(a); break;
        }
        const MapSpace& s = spaces[ki];
        const ParametricForm pf = paper_form(f, kind);

        bool indep = span_rank(pf.generators) == pf.count();
        bool sub = true, sup = true;
        for (const auto& g : pf.generators)
            if (!in_span(s.basis, g)) sub = false;
        for (const auto& v : s.basis)
            if (!in_span(pf.generators, v)) sup = false;
        row(std::string("span-") + kind_name[ki], indep && sub && sup,
            "parameters " + std::to_string(pf.count()) + ", solver dim " +
                std::to_string(s.dim()));

        const ExpectedDim ed = expected_dim(f, kind);
        std::ostringstream ddet;
        ddet << "computed " << s.dim() << ", stated " << ed.stated
             << ", parameters " << ed.param_count;
        if (ed.discrepancy) {
            ddet << " -- " << ed.note;
            delta(std::string("dim-") + kind_name[ki], ddet.str());
        } else {
            row(std::string("dim-") + kind_name[ki], s.dim() == ed.stated,
                ddet.str());
        }
    }

    const ConformanceReport conf = verify_table(a, paper_bider_basis(f));
    std::ostringstream cdet;
    cdet << conf.checked_pairs << " pairs, " << conf.mismatches.size()
         << " mismatches, " << conf.basis_defects.size() << " basis defects";
    if (f.tag == FamilyTag::NF)
        row("table", conf.ok(), cdet.str());
    else if (conf.ok())
        rows.push_back({fam, n, "table", "PASS", cdet.str()});
    else
        delta("table", cdet.str());

    const InnernessReport inn = innerness(a);
    const bool solvable_family = f.tag == FamilyTag::R_NF ||
                                 f.tag == FamilyTag::R_F1 ||
                                 f.tag == FamilyTag::L1 || f.tag == FamilyTag::L2;
    std::ostringstream idet;
    idet << "dim inner " << inn.dim_inner << " of " << inn.dim_bider;
    if (solvable_family)
        row("innerness", inn.inner_equals_all, idet.str());
    else
        delta("innerness", idet.str() + " -- not all biderivations are inner");

    const InducedAlgebra ind = bider_algebra(a);
    row("bider-closure", ind.closure_ok, "");
    row("bider-leibniz", check_right_leibniz(ind.algebra).empty(), "");
    const auto ds = derived_series(ind.algebra);
    row("bider-solvable", ds.index.has_value(),
        "derived dims " + dims_to_str(ds.dims));

    if (solvable_family) {
        const auto fa = fingerprint(a);
        const auto fb = fingerprint(ind.algebra);
        std::ostringstream fdet;
        fdet << "L: dim " << fa.dim << " lcs " << dims_to_str(fa.lower_central)
             << " ds " << dims_to_str(fa.derived) << "; Bider: dim " << fb.dim
             << " lcs " << dims_to_str(fb.lower_central) << " ds "
             << dims_to_str(fb.derived);
        if (fa == fb)
            rows.push_back({fam, n, "fingerprint", "PASS", fdet.str()});
        else
            delta("fingerprint", "mismatch -- " + fdet.str());
    }
}

int cmd_verify_paper(const std::string& family, int n, bool all, int n_max,
                     bool as_json)
{
    std::vector<FamilyId> targets;
    if (all) {
        if (n_max <= 0) throw InputError("--all requires --n-max");
        for (FamilyTag t : all_families()) {
            const int lo = std::max(family_min_n(t), 2);
            for (int k = lo; k <= n_max; ++k) targets.push_back({t, k});
        }
    } else {
        if (family.empty()) throw InputError("give --family with --n, or --all");
        const auto tag = family_from_name(family);
        if (!tag) throw InputError("unknown family: " + family);
        if (n <= 0) throw InputError("--n is required with --family");
        if (n < family_min_n(*tag))
            throw InputError(family + " requires n >= " +
                             std::to_string(family_min_n(*tag)));
        targets.push_back({*tag, n});
    }

    std::vector<ClaimRow> rows;
    for (const auto& f : targets) verify_family(f, rows);

    int fails = 0;
    for (const auto& r : rows)
        if (r.status == "FAIL") ++fails;

    json j;
    j["command"] = "verify-paper";
    json jr = json::array();
    for (const auto& r : rows) {
        json rec;
        rec["family"] = r.family;
        rec["n"] = r.n;
        rec["claim"] = r.claim;
        rec["status"] = r.status;
        rec["detail"] = r.detail;
        jr.push_back(std::move(rec));
    }
    j["rows"] = std::move(jr);
    j["failures"] = fails;

    std::ostringstream os;
    for (const auto& r : rows) {
        os << r.status << "  " << r.family << " n=" << r.n << "  " << r.claim;
        if (!r.detail.empty()) os << "  (" << r.detail << ")";
        os << "\n";
    }
    os << (fails ? "result: FAIL (" + std::to_string(fails) + " failing claims)"
                 : "result: OK")
       << "\n";
    emit_report(j, as_json, os.str());
    return fails ? kExitFail : kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact-arithmetic toolkit for finite-dimensional Leibniz "
                 "algebras: identity checking, derivation/anti-derivation/"
                 "biderivation spaces, series, and the induced biderivation "
                 "algebra"};
    app.require_subcommand(1);
    app.fallthrough(); // allow --format after the subcommand name

    std::string format = "pretty";
    app.add_option("--format", format, "output format: json or pretty")
        ->check(CLI::IsMember({"json", "pretty"}));

    SourceOpts src;
    bool left = false;
    auto* check = app.add_subcommand("check", "verify the Leibniz identity");
    add_source_opts(check, src);
    check->add_flag("--left", left, "check the left Leibniz identity instead");

    auto* der = app.add_subcommand("der", "derivation space");
    add_source_opts(der, src);
    auto* antider = app.add_subcommand("antider", "anti-derivation space");
    add_source_opts(antider, src);
    auto* bider = app.add_subcommand("bider", "biderivation space");
    add_source_opts(bider, src);

    auto* series = app.add_subcommand("series", "lower central and derived series");
    add_source_opts(series, src);

    std::string emit_path;
    auto* balg = app.add_subcommand("bider-algebra",
                                    "the Leibniz algebra of biderivations");
    add_source_opts(balg, src);
    balg->add_option("--emit", emit_path, "write the induced algebra to a file");

    bool all = false;
    int n_max = 0;
    std::string vfamily;
    int vn = 0;
    auto* verify = app.add_subcommand("verify-paper",
                                      "run the full verification suite");
    verify->add_option("--family", vfamily, "catalog family");
    verify->add_option("--n", vn, "nilradical dimension n");
    verify->add_flag("--all", all, "sweep all families");
    verify->add_option("--n-max", n_max, "largest n for --all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    const bool as_json = format == "json";
    try {
        if (check->parsed()) return cmd_check(src, left, as_json);
        if (der->parsed()) return cmd_space("der", SpaceKind::der, src, as_json);
        if (antider->parsed())
            return cmd_space("antider", SpaceKind::antider, src, as_json);
        if (bider->parsed())
            return cmd_space("bider", SpaceKind::bider, src, as_json);
        if (series->parsed()) return cmd_series(src, as_json);
        if (balg->parsed()) return cmd_bider_algebra(src, emit_path, as_json);
        if (verify->parsed())
            return cmd_verify_paper(vfamily, vn, all, n_max, as_json);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
