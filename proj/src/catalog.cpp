#include <leibniz/catalog.hpp>

#include <stdexcept>

namespace leibniz {

namespace {

struct FamilyInfo {
    FamilyTag tag;
    const char* name;
    int min_n;
    int extra; // appended h generators
};

constexpr FamilyInfo kFamilies[] = {
    {FamilyTag::NF, "NF", 1, 0},   {FamilyTag::F1, "F1", 4, 0},
    {FamilyTag::F2, "F2", 4, 0},   {FamilyTag::R_NF, "R_NF", 2, 1},
    {FamilyTag::R_F1, "R_F1", 4, 2}, {FamilyTag::L1, "L1", 4, 2},
    {FamilyTag::L2, "L2", 4, 2},
};

const FamilyInfo& info(FamilyTag t)
{
    for (const auto& f : kFamilies)
        if (f.tag == t) return f;
    throw std::logic_error("unknown family tag");
}

} // namespace

const char* family_name(FamilyTag t) { return info(t).name; }

std::optional<FamilyTag> family_from_name(const std::string& s)
{
    for (const auto& f : kFamilies)
        if (s == f.name) return f.tag;
    return std::nullopt;
}

std::vector<FamilyTag> all_families()
{
    std::vector<FamilyTag> out;
    for (const auto& f : kFamilies) out.push_back(f.tag);
    return out;
}

int family_min_n(FamilyTag t) { return info(t).min_n; }

int family_total_dim(FamilyId f) { return f.n + info(f.tag).extra; }

namespace {

void require_n(FamilyId f)
{
    if (f.n < family_min_n(f.tag))
        throw std::invalid_argument(std::string(family_name(f.tag)) +
                                    " requires n >= " +
                                    std::to_string(family_min_n(f.tag)));
}

std::vector<std::string> h_labels(int extra, int n)
{
    std::vector<std::string> l;
    if (extra == 1) l.push_back("h");
    if (extra == 2) {
        l.push_back("h1");
        l.push_back("h2");
    }
    for (int i = 1; i <= n; ++i) l.push_back("e" + std::to_string(i));
    return l;
}

} // namespace

Algebra make_algebra(FamilyId f)
{
    require_n(f);
    const int n = f.n;
    const int extra = info(f.tag).extra;
    Algebra a(family_total_dim(f), h_labels(extra, n));
    // 0-based basis index of e_i
    auto E = [extra](int i) { return extra + i - 1; };
    switch (f.tag) {
    case FamilyTag::NF:
        for (int i = 1; i <= n - 1; ++i) a.set_c(E(i), E(1), E(i + 1), 1);
        break;
    case FamilyTag::F1:
        a.set_c(E(1), E(1), E(3), 1);
        for (int i = 2; i <= n - 1; ++i) a.set_c(E(i), E(1), E(i + 1), 1);
        break;
    case FamilyTag::F2:
        a.set_c(E(1), E(1), E(3), 1);
        for (int i = 3; i <= n - 1; ++i) a.set_c(E(i), E(1), E(i + 1), 1);
        break;
    case FamilyTag::R_NF: {
        const int H = 0;
        for (int i = 1; i <= n - 1; ++i) a.set_c(E(i), E(1), E(i + 1), 1);
        a.set_c(H, E(1), E(1), -1);
        for (int i = 1; i <= n; ++i) a.set_c(E(i), H, E(i), i);
        break;
    }
    case FamilyTag::R_F1: {
        const int H1 = 0, H2 = 1;
        for (int i = 2; i <= n - 1; ++i) a.set_c(E(i), E(1), E(i + 1), 1);
        a.set_c(E(1), H2, E(1), 1);
        for (int i = 2; i <= n; ++i) a.set_c(E(i), H1, E(i), 1);
        for (int i = 2; i <= n; ++i) a.set_c(E(i), H2, E(i), i - 1);
        a.set_c(H2, E(1), E(1), -1);
        break;
    }
    case FamilyTag::L1:
    case FamilyTag::L2: {
        const int H1 = 0, H2 = 1;
        a.set_c(E(1), E(1), E(3), 1);
        for (int i = 3; i <= n - 1; ++i) a.set_c(E(i), E(1), E(i + 1), 1);
        a.set_c(E(1), H2, E(1), 1);
        a.set_c(H2, E(1), E(1), -1);
        a.set_c(E(2), H1, E(2), 1);
        if (f.tag == FamilyTag::L1) a.set_c(H1, E(2), E(2), -1);
        for (int i = 3; i <= n; ++i) a.set_c(E(i), H2, E(i), i - 1);
        break;
    }
    }
    return a;
}

// ---------------------------------------------------------------------------
// Closed-form generator families. Matrix entries are 1-based (E(r,c) puts v
// at row r, column c); column c is the image of basis vector c.
// ---------------------------------------------------------------------------

namespace {

LinMap Z(int d) { return LinMap(d, d); }

void E(LinMap& m, int r, int c, const Rat& v = Rat(1)) { m.at(r - 1, c - 1) += v; }

std::string alpha(int i) { return "alpha_" + std::to_string(i); }
std::string beta(int i) { return "beta_" + std::to_string(i); }

struct FormBuilder {
    ParametricForm form;

    void add(std::string name, const LinMap& m)
    {
        form.params.push_back(std::move(name));
        form.generators.push_back(vectorize(m));
    }
    void add(std::string name, const LinMap& d, const LinMap& D)
    {
        form.params.push_back(std::move(name));
        form.generators.push_back(vectorize(Bider{d, D}));
    }
};

// --- NF_n ---

LinMap nf_d(int n, int t)
{
    LinMap m = Z(n);
    if (t == 1)
        for (int i = 1; i <= n; ++i) E(m, i, i, i);
    else
        for (int i = 1; i <= n - t + 1; ++i) E(m, i + t - 1, i);
    return m;
}

void build_NF(FormBuilder& b, int n, SpaceKind kind)
{
    if (kind == SpaceKind::der) {
        for (int t = 1; t <= n; ++t) b.add(alpha(t), nf_d(n, t));
    } else if (kind == SpaceKind::antider) {
        for (int j = 1; j <= n; ++j) {
            LinMap m = Z(n);
            E(m, j, 1);
            b.add(beta(j), m);
        }
    } else {
        LinMap D1 = Z(n);
        E(D1, 1, 1);
        b.add(alpha(1), nf_d(n, 1), D1);
        for (int t = 2; t <= n; ++t) b.add(alpha(t), nf_d(n, t), Z(n));
        for (int j = 2; j <= n; ++j) {
            LinMap D = Z(n);
            E(D, j, 1);
            b.add(beta(j), Z(n), D);
        }
    }
}

// --- F1_n ---

LinMap f1_d(int n, int t)
{
    LinMap m = Z(n);
    if (t == 1) {
        E(m, 1, 1);
        E(m, 2, 2);
        for (int j = 3; j <= n; ++j) E(m, j, j, j - 1);
    } else if (t == 2) {
        E(m, 2, 1);
        for (int j = 2; j <= n; ++j) E(m, j, j);
    } else if (t == n + 1) {
        E(m, n, 2);
    } else {
        E(m, t, 1);
        if (t <= n - 1) E(m, t, 2);
        for (int j = 3; j <= n - t + 2; ++j) E(m, j + t - 2, j);
    }
    return m;
}

LinMap f1_a(int n, int j)
{
    LinMap m = Z(n);
    if (j <= n) {
        E(m, j, 1);
    } else if (j == n + 1) {
        E(m, 1, 2);
        E(m, 2, 2, -1);
    } else {
        E(m, n, 2);
    }
    return m;
}

void build_F1(FormBuilder& b, int n, SpaceKind kind)
{
    if (kind == SpaceKind::der) {
        for (int t = 1; t <= n + 1; ++t) b.add(alpha(t), f1_d(n, t));
    } else if (kind == SpaceKind::antider) {
        for (int j = 1; j <= n + 2; ++j) b.add(beta(j), f1_a(n, j));
    } else {
        LinMap D1 = Z(n);
        E(D1, 1, 1);
        b.add(alpha(1), f1_d(n, 1), D1);
        for (int t = 2; t <= n + 1; ++t) b.add(alpha(t), f1_d(n, t), Z(n));
        for (int j = 2; j <= n; ++j) b.add(beta(j), Z(n), f1_a(n, j));
        b.add(beta(n + 2), Z(n), f1_a(n, n + 2));
    }
}

// --- F2_n ---

LinMap f2_d(int n, int t)
{
    LinMap m = Z(n);
    if (t == 1) {
        E(m, 1, 1);
        for (int j = 3; j <= n; ++j) E(m, j, j, j - 1);
    } else if (t == 2) {
        E(m, 2, 1);
    } else if (t == n + 1) {
        E(m, 2, 2);
    } else if (t == n + 2) {
        E(m, n, 2);
    } else {
        E(m, t, 1);
        for (int j = 3; j <= n - t + 2; ++j) E(m, j + t - 2, j);
    }
    return m;
}

LinMap f2_a(int n, int j)
{
    LinMap m = Z(n);
    if (j <= n)
        E(m, j, 1);
    else if (j == n + 1)
        E(m, 2, 2);
    else
        E(m, n, 2, 2);
    return m;
}

void build_F2(FormBuilder& b, int n, SpaceKind kind)
{
    if (kind == SpaceKind::der) {
        for (int t = 1; t <= n + 2; ++t) b.add(alpha(t), f2_d(n, t));
    } else if (kind == SpaceKind::antider) {
        for (int j = 1; j <= n + 2; ++j) b.add(beta(j), f2_a(n, j));
    } else {
        LinMap D1 = Z(n);
        E(D1, 1, 1);
        b.add(alpha(1), f2_d(n, 1), D1);
        for (int t = 2; t <= n + 2; ++t) b.add(alpha(t), f2_d(n, t), Z(n));
        for (int j = 2; j <= n + 2; ++j) b.add(beta(j), Z(n), f2_a(n, j));
    }
}

// --- R_NF: basis (h, e_1..e_n); matrix index of h is 1, of e_i is i+1 ---

void build_RNF(FormBuilder& b, int n, SpaceKind kind)
{
    const int d = n + 1;
    const int H = 1;
    auto Ei = [](int i) { return i + 1; };
    auto dgen = [&](int t) {
        LinMap m = Z(d);
        if (t == 1) { // ad_{e_1}
            E(m, Ei(1), H, -1);
            for (int i = 1; i <= n - 1; ++i) E(m, Ei(i + 1), Ei(i));
        } else { // ad_h
            for (int i = 1; i <= n; ++i) E(m, Ei(i), Ei(i), i);
        }
        return m;
    };
    auto agen = [&](int j) {
        LinMap m = Z(d);
        if (j == 1) {
            E(m, Ei(1), Ei(1));
        } else if (j <= n) {
            E(m, Ei(j - 1), H, j - 1);
            E(m, Ei(j), Ei(1));
        } else {
            E(m, Ei(n), H);
        }
        return m;
    };
    if (kind == SpaceKind::der) {
        b.add(alpha(1), dgen(1));
        b.add(alpha(2), dgen(2));
    } else if (kind == SpaceKind::antider) {
        for (int j = 1; j <= n + 1; ++j) b.add(beta(j), agen(j));
    } else {
        LinMap D1 = Z(d);
        E(D1, Ei(1), H, -1);
        E(D1, Ei(2), Ei(1), -1);
        LinMap D2 = Z(d);
        E(D2, Ei(1), Ei(1));
        b.add(alpha(1), dgen(1), D1);
        b.add(alpha(2), dgen(2), D2);
        for (int j = 3; j <= n + 1; ++j) b.add(beta(j), Z(d), agen(j));
    }
}

// --- R_F1: basis (h_1, h_2, e_1..e_n) ---

void build_RF1(FormBuilder& b, int n, SpaceKind kind)
{
    const int d = n + 2;
    const int H1 = 1, H2 = 2;
    auto Ei = [](int i) { return i + 2; };
    auto dgen = [&](int t) {
        LinMap m = Z(d);
        if (t == 1) {
            for (int i = 2; i <= n; ++i) E(m, Ei(i), Ei(i));
        } else if (t == 2) { // ad_{e_1}
            E(m, Ei(1), H2, -1);
            for (int i = 2; i <= n - 1; ++i) E(m, Ei(i + 1), Ei(i));
        } else { // ad_{h_2}
            E(m, Ei(1), Ei(1));
            for (int i = 2; i <= n; ++i) E(m, Ei(i), Ei(i), i - 1);
        }
        return m;
    };
    auto agen = [&](int j) {
        LinMap m = Z(d);
        if (j == 1) {
            E(m, Ei(1), Ei(1));
        } else if (j == 2) {
            E(m, Ei(1), H2);
        } else if (j <= n) {
            E(m, Ei(j - 1), H1);
            E(m, Ei(j - 1), H2, j - 2);
            E(m, Ei(j), Ei(1));
        } else if (j == n + 1) {
            E(m, Ei(n), H1);
            E(m, Ei(n), H2, n - 1);
        } else if (j == n + 2) {
            E(m, H1, H1);
        } else {
            E(m, H1, H2);
        }
        return m;
    };
    if (kind == SpaceKind::der) {
        for (int t = 1; t <= 3; ++t) b.add(alpha(t), dgen(t));
    } else if (kind == SpaceKind::antider) {
        for (int j = 1; j <= n + 3; ++j) b.add(beta(j), agen(j));
    } else {
        LinMap D2 = Z(d);
        E(D2, Ei(1), H2, -1);
        LinMap D3 = Z(d);
        E(D3, Ei(1), Ei(1));
        b.add(alpha(1), dgen(1), Z(d));
        b.add(alpha(2), dgen(2), D2);
        b.add(alpha(3), dgen(3), D3);
        for (int j = 3; j <= n + 1; ++j) b.add(beta(j), Z(d), agen(j));
    }
}

// --- L1 / L2: basis (h_1, h_2, e_1..e_n) ---

void build_L1(FormBuilder& b, int n, SpaceKind kind)
{
    const int d = n + 2;
    const int H1 = 1, H2 = 2;
    auto Ei = [](int i) { return i + 2; };
    auto dgen = [&](int t) {
        LinMap m = Z(d);
        if (t == 1) { // ad_{e_1}
            E(m, Ei(1), H2, -1);
            E(m, Ei(3), Ei(1));
            for (int i = 3; i <= n - 1; ++i) E(m, Ei(i + 1), Ei(i));
        } else if (t == 2) { // ad_{e_2}
            E(m, Ei(2), H1, -1);
        } else if (t == 3) { // ad_{h_1}
            E(m, Ei(2), Ei(2));
        } else { // ad_{h_2}
            E(m, Ei(1), Ei(1));
            for (int i = 3; i <= n; ++i) E(m, Ei(i), Ei(i), i - 1);
        }
        return m;
    };
    auto agen = [&](int j) {
        LinMap m = Z(d);
        if (j == 1) {
            E(m, Ei(1), Ei(1));
        } else if (j == 2) {
            E(m, Ei(2), Ei(2));
        } else if (j == 3) {
            E(m, Ei(1), H2);
            E(m, Ei(3), Ei(1));
        } else if (j <= n) {
            E(m, Ei(j - 1), H2, j - 2);
            E(m, Ei(j), Ei(1));
        } else if (j == n + 1) {
            E(m, Ei(n), H2, n - 1);
        } else {
            E(m, Ei(2), H1);
        }
        return m;
    };
    if (kind == SpaceKind::der) {
        for (int t = 1; t <= 4; ++t) b.add(alpha(t), dgen(t));
    } else if (kind == SpaceKind::antider) {
        for (int j = 1; j <= n + 2; ++j) b.add(beta(j), agen(j));
    } else {
        b.add(alpha(1), dgen(1), -agen(3));
        b.add(alpha(2), dgen(2), -agen(n + 2));
        b.add(alpha(3), dgen(3), agen(2));
        b.add(alpha(4), dgen(4), agen(1));
        for (int j = 4; j <= n + 1; ++j) b.add(beta(j), Z(d), agen(j));
    }
}

void build_L2(FormBuilder& b, int n, SpaceKind kind)
{
    const int d = n + 2;
    const int H1 = 1, H2 = 2;
    auto Ei = [](int i) { return i + 2; };
    auto dgen = [&](int t) {
        LinMap m = Z(d);
        if (t == 1) { // ad_{e_1}
            E(m, Ei(1), H2, -1);
            E(m, Ei(3), Ei(1));
            for (int i = 3; i <= n - 1; ++i) E(m, Ei(i + 1), Ei(i));
        } else if (t == 2) { // ad_{h_1}
            E(m, Ei(2), Ei(2));
        } else { // ad_{h_2}
            E(m, Ei(1), Ei(1));
            for (int i = 3; i <= n; ++i) E(m, Ei(i), Ei(i), i - 1);
        }
        return m;
    };
    auto agen = [&](int j) {
        LinMap m = Z(d);
        if (j == 1) {
            E(m, Ei(1), Ei(1));
        } else if (j == 2) {
            E(m, H1, H2);
        } else if (j == 3) {
            E(m, Ei(1), H2);
            E(m, Ei(3), Ei(1));
        } else if (j <= n) {
            E(m, Ei(j - 1), H2, j - 2);
            E(m, Ei(j), Ei(1));
        } else if (j == n + 1) {
            E(m, Ei(n), H2, n - 1);
        } else if (j == n + 2) {
            E(m, H1, H1);
        } else {
            E(m, Ei(2), H1);
        }
        return m;
    };
    if (kind == SpaceKind::der) {
        for (int t = 1; t <= 3; ++t) b.add(alpha(t), dgen(t));
    } else if (kind == SpaceKind::antider) {
        for (int j = 1; j <= n + 3; ++j) b.add(beta(j), agen(j));
    } else {
        b.add(alpha(1), dgen(1), -agen(3));
        b.add(alpha(2), dgen(2), Z(d));
        b.add(alpha(3), dgen(3), agen(1));
        for (int j = 4; j <= n + 1; ++j) b.add(beta(j), Z(d), agen(j));
        b.add(beta(n + 2), Z(d), agen(n + 3));
    }
}

} // namespace

ParametricForm paper_form(FamilyId f, SpaceKind kind)
{
    require_n(f);
    FormBuilder b;
    b.form.family = f;
    b.form.kind = kind;
    switch (f.tag) {
    case FamilyTag::NF: build_NF(b, f.n, kind); break;
    case FamilyTag::F1: build_F1(b, f.n, kind); break;
    case FamilyTag::F2: build_F2(b, f.n, kind); break;
    case FamilyTag::R_NF: build_RNF(b, f.n, kind); break;
    case FamilyTag::R_F1: build_RF1(b, f.n, kind); break;
    case FamilyTag::L1: build_L1(b, f.n, kind); break;
    case FamilyTag::L2: build_L2(b, f.n, kind); break;
    }
    return std::move(b.form);
}

// ---------------------------------------------------------------------------
// Named biderivation bases and bracket tables.
// ---------------------------------------------------------------------------

namespace {

struct BasisBuilder {
    PaperBiderBasis pb;

    void el(std::string name, LinMap d, LinMap D)
    {
        pb.names.push_back(std::move(name));
        pb.elements.push_back({std::move(d), std::move(D)});
    }
    void tab(const std::string& lhs, const std::string& rhs, Combo c)
    {
        pb.table[{lhs, rhs}] = std::move(c);
    }
};

std::string X(int i) { return "X" + std::to_string(i); }
std::string Y(int i) { return "Y" + std::to_string(i); }

void basis_NF(BasisBuilder& b, int n)
{
    {
        LinMap d = Z(n), D = Z(n);
        for (int i = 1; i <= n; ++i) E(d, i, i, i);
        E(D, 1, 1);
        b.el(X(1), d, D);
    }
    for (int k = 2; k <= n; ++k) {
        LinMap d = Z(n), D = Z(n);
        for (int j = 1; j <= n - k + 1; ++j) E(d, k + j - 1, j);
        E(D, k, 1);
        b.el(X(k), d, Z(n));
        b.el(Y(k), Z(n), D);
    }
    for (int k = 2; k <= n; ++k) {
        b.tab(X(1), X(k), {{X(k), 1}, {Y(k), -1}});
        b.tab(X(k), X(1), {{X(k), -1}});
        b.tab(Y(k), X(1), {{Y(k), -(k - 1)}});
        for (int l = 2; l <= n; ++l)
            if (k + l - 1 <= n) b.tab(Y(k), X(l), {{Y(k + l - 1), -1}});
    }
}

void basis_F1(BasisBuilder& b, int n)
{
    {
        LinMap d = Z(n), D = Z(n);
        E(d, 1, 1);
        E(d, 2, 2);
        for (int i = 3; i <= n; ++i) E(d, i, i, i - 1);
        E(D, 1, 1);
        b.el(X(1), d, D);
    }
    {
        LinMap d = Z(n);
        E(d, 2, 1);
        for (int i = 2; i <= n; ++i) E(d, i, i);
        b.el(X(2), d, Z(n));
        LinMap D = Z(n);
        E(D, 2, 1);
        b.el(Y(2), Z(n), D);
    }
    for (int k = 3; k <= n; ++k) {
        LinMap d = Z(n), D = Z(n);
        E(d, k, 1);
        if (k <= n - 1) E(d, k, 2);
        for (int j = 3; j <= n - k + 2; ++j) E(d, j + k - 2, j);
        E(D, k, 1);
        b.el(X(k), d, Z(n));
        b.el(Y(k), Z(n), D);
    }
    {
        LinMap d = Z(n), D = Z(n);
        E(d, n, 2);
        E(D, n, 2);
        b.el(X(n + 1), d, Z(n));
        b.el(Y(n + 1), Z(n), D);
    }
    // general rows first; the named rows below overwrite where both apply
    for (int k = 2; k <= n + 1; ++k)
        for (int l = 3; l <= n + 1; ++l)
            if (k + l - 2 <= n + 1) b.tab(Y(k), X(l), {{Y(k + l - 2), -1}});
    for (int k = 2; k <= n + 1; ++k) b.tab(Y(k), X(2), {{Y(k), -1}});
    for (int k = 3; k <= n; ++k) {
        b.tab(Y(k), X(1), {{Y(k), -(k - 2)}});
        b.tab(X(k), X(1), {{X(k), -(k - 2)}});
        b.tab(X(1), Y(k), {{X(k), k - 2}, {Y(k), -1}});
    }
    b.tab(X(1), X(2), {{Y(2), -1}});
    b.tab(X(1), X(n + 1), {{X(n + 1), n - 2}, {Y(n + 1), -1}});
    b.tab(X(n + 1), X(1), {{X(n + 1), -(n - 2)}});
    b.tab(Y(n + 1), X(1), {{Y(n + 1), -(n - 2)}});
    b.tab(X(1), Y(2), {{Y(2), -1}});
    b.tab(Y(2), X(n + 1), {{Y(2), -1}});
}

void basis_F2(BasisBuilder& b, int n)
{
    {
        LinMap d = Z(n), D = Z(n);
        E(d, 1, 1);
        for (int i = 3; i <= n; ++i) E(d, i, i, i - 1);
        E(D, 1, 1);
        b.el(X(1), d, D);
    }
    {
        LinMap d = Z(n), D = Z(n);
        E(d, 2, 1);
        E(D, 2, 1);
        b.el(X(2), d, Z(n));
        b.el(Y(2), Z(n), D);
    }
    for (int k = 3; k <= n; ++k) {
        LinMap d = Z(n), D = Z(n);
        E(d, k, 1);
        for (int j = 3; j <= n - k + 2; ++j) E(d, j + k - 2, j);
        E(D, k, 1);
        b.el(X(k), d, Z(n));
        b.el(Y(k), Z(n), D);
    }
    {
        LinMap d = Z(n), D = Z(n);
        E(d, 2, 2);
        E(D, 2, 2);
        b.el(X(n + 1), d, Z(n));
        b.el(Y(n + 1), Z(n), D);
    }
    {
        LinMap d = Z(n), D = Z(n);
        E(d, n, 2);
        E(D, n, 2);
        b.el(X(n + 2), d, Z(n));
        b.el(Y(n + 2), Z(n), D);
    }
    for (int k = 3; k <= n - 1; ++k)
        for (int l = 3; l <= n - 1; ++l)
            if (k + l - 2 <= n) b.tab(Y(k), X(l), {{Y(k + l - 2), -1}});
    b.tab(X(1), X(2), {{Y(2), -1}});
    b.tab(X(2), X(1), {{X(2), 1}});
    b.tab(X(1), X(n), {{X(n), n - 2}, {Y(n), -1}});
    b.tab(X(n), X(1), {{X(n), 1}});
    b.tab(Y(2), X(1), {{Y(2), 1}});
    b.tab(Y(n + 1), X(2), {{Y(2), 1}});
    b.tab(X(1), X(n + 2), {{X(n + 2), n - 1}});
    b.tab(X(n + 2), X(1), {{X(n + 2), -(n - 2)}});
    b.tab(Y(n + 2), X(1), {{Y(n + 2), -(n - 1)}});
    b.tab(Y(n + 2), X(2), {{Y(n + 2), 1}});
    b.tab(Y(n + 1), X(n + 2), {{Y(n + 2), 1}});
    for (int k = 3; k <= n; ++k) b.tab(Y(k), X(1), {{Y(k), -(k - 2)}});
    for (int k = 3; k <= n - 1; ++k) {
        b.tab(X(1), X(k), {{X(k), k - 2}, {Y(k), -1}});
        b.tab(X(k), X(1), {{X(k), -(k - 2)}});
    }
}

// R_NF basis is (h, e_1..e_n): matrix index of h is 1, of e_i is i+1.
void basis_RNF(BasisBuilder& b, int n)
{
    const int d = n + 1;
    {
        LinMap dd = Z(d), D = Z(d);
        for (int i = 1; i <= n; ++i) E(dd, i + 1, i + 1, i);
        E(D, 2, 2);
        b.el("H", dd, D);
    }
    {
        LinMap dd = Z(d), D = Z(d);
        E(dd, 2, 1, -1);
        for (int i = 2; i <= n; ++i) E(dd, i + 1, i);
        E(D, 2, 1, -1);
        E(D, 3, 2, -1);
        b.el(X(1), dd, D);
    }
    for (int i = 2; i <= n - 1; ++i) {
        LinMap D = Z(d);
        E(D, i + 1, 1, i);
        E(D, i + 2, 2);
        b.el(X(i), Z(d), D);
    }
    {
        LinMap D = Z(d);
        E(D, n + 1, 1);
        b.el(X(n), Z(d), D);
    }
    b.tab("H", X(1), {{X(1), 1}});
    for (int i = 1; i <= n - 1; ++i) b.tab(X(i), X(1), {{X(i + 1), -1}});
    for (int i = 1; i <= n; ++i) b.tab(X(i), "H", {{X(i), i}});
}

// R_F1 basis is (h_1, h_2, e_1..e_n): h_1 -> 1, h_2 -> 2, e_i -> i+2.
void basis_RF1(BasisBuilder& b, int n)
{
    const int d = n + 2;
    {
        LinMap dd = Z(d);
        for (int j = 4; j <= n + 2; ++j) E(dd, j, j, -1);
        b.el("H1", dd, Z(d));
    }
    {
        LinMap dd = Z(d), D = Z(d);
        E(dd, 3, 3);
        E(dd, 4, 4);
        for (int j = 5; j <= n + 2; ++j) E(dd, j, j, j - 3);
        E(D, 3, 3);
        b.el("H2", dd, D);
    }
    {
        LinMap dd = Z(d), D = Z(d);
        E(dd, 3, 2);
        for (int j = 4; j <= n + 1; ++j) E(dd, j + 1, j, -1);
        E(D, 3, 2);
        b.el(X(1), dd, D);
    }
    for (int i = 2; i <= n - 1; ++i) {
        LinMap D = Z(d);
        E(D, i + 2, 1);
        E(D, i + 2, 2, i - 1);
        E(D, i + 3, 3);
        b.el(X(i), Z(d), D);
    }
    {
        LinMap D = Z(d);
        E(D, n + 2, 1);
        E(D, n + 2, 2, n - 1);
        b.el(X(n), Z(d), D);
    }
    b.tab(X(1), "H2", {{X(1), 1}});
    b.tab("H2", X(1), {{X(1), -1}});
    for (int i = 2; i <= n; ++i) {
        b.tab(X(i), "H1", {{X(i), 1}});
        b.tab(X(i), "H2", {{X(i), i - 1}});
    }
    for (int i = 2; i <= n - 1; ++i) b.tab(X(i), X(1), {{X(i + 1), 1}});
}

void basis_L(BasisBuilder& b, int n, bool variant_one)
{
    const int d = n + 2;
    {
        LinMap dd = Z(d), D = Z(d);
        E(dd, 4, 4);
        if (variant_one) E(D, 4, 4);
        b.el("H1", dd, D);
    }
    {
        LinMap dd = Z(d), D = Z(d);
        E(dd, 3, 3);
        for (int j = 5; j <= n + 2; ++j) E(dd, j, j, j - 3);
        E(D, 3, 3);
        b.el("H2", dd, D);
    }
    {
        LinMap dd = Z(d), D = Z(d);
        E(dd, 3, 2, -1);
        E(dd, 5, 3);
        for (int j = 5; j <= n + 1; ++j) E(dd, j + 1, j);
        E(D, 3, 2, -1);
        E(D, 5, 3, -1);
        b.el(X(1), dd, D);
    }
    {
        LinMap dd = Z(d), D = Z(d);
        if (variant_one) {
            E(dd, 4, 1, -1);
            E(D, 4, 1, -1);
        } else {
            E(D, 4, 1);
        }
        b.el(X(2), dd, D);
    }
    for (int i = 3; i <= n - 1; ++i) {
        LinMap D = Z(d);
        E(D, i + 2, 2, i - 1);
        E(D, i + 3, 3);
        b.el(X(i), Z(d), D);
    }
    {
        LinMap D = Z(d);
        E(D, n + 2, 2);
        b.el(X(n), Z(d), D);
    }
    b.tab(X(1), X(1), {{X(3), 1}});
    b.tab(X(1), X(4), {{X(1), -1}});
    b.tab(X(4), X(1), {{X(1), 1}});
    b.tab(X(2), "H1", {{X(2), -1}});
    if (variant_one) b.tab("H1", X(2), {{X(2), 1}});
    for (int i = 3; i <= n - 1; ++i) {
        b.tab(X(i), X(1), {{X(i + 1), -1}});
        b.tab(X(i), "H2", {{X(i), -(i - 1)}});
    }
    b.tab(X(n), "H2", {{X(n), -(n - 1)}});
}

} // namespace

int PaperBiderBasis::index_of(const std::string& name) const
{
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return int(i);
    return -1;
}

PaperBiderBasis paper_bider_basis(FamilyId f)
{
    require_n(f);
    BasisBuilder b;
    b.pb.family = f;
    switch (f.tag) {
    case FamilyTag::NF: basis_NF(b, f.n); break;
    case FamilyTag::F1: basis_F1(b, f.n); break;
    case FamilyTag::F2: basis_F2(b, f.n); break;
    case FamilyTag::R_NF: basis_RNF(b, f.n); break;
    case FamilyTag::R_F1: basis_RF1(b, f.n); break;
    case FamilyTag::L1: basis_L(b, f.n, true); break;
    case FamilyTag::L2: basis_L(b, f.n, false); break;
    }
    return std::move(b.pb);
}

ExpectedDim expected_dim(FamilyId f, SpaceKind kind)
{
    require_n(f);
    const int n = f.n;
    const int count = paper_form(f, kind).count();
    ExpectedDim e;
    e.param_count = count;
    e.stated = count;
    switch (f.tag) {
    case FamilyTag::NF:
        break;
    case FamilyTag::F1:
        if (kind == SpaceKind::der) {
            e.stated = n;
            e.note = "displayed matrix names alpha_1..alpha_n; entry (n,2) "
                     "carries an independent parameter";
        }
        break;
    case FamilyTag::F2:
        if (kind == SpaceKind::der) {
            e.stated = n + 1;
            e.note = "displayed matrix names alpha_1..alpha_{n+1}; entry "
                     "(n,2) carries an independent parameter";
        }
        break;
    case FamilyTag::R_NF:
        if (kind == SpaceKind::bider) {
            e.stated = n + 2;
            e.note = "stated (n+2)-dimensional; the displayed pair has n+1 "
                     "free parameters";
        }
        break;
    case FamilyTag::R_F1:
    case FamilyTag::L1:
    case FamilyTag::L2:
        break;
    }
    e.discrepancy = (e.stated != e.param_count);
    return e;
}

} // namespace leibniz
