#include <leibniz/algebra_io.hpp>

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace leibniz {

using nlohmann::json;

Algebra parse_algebra(const std::string& json_text)
{
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dim") ||
        !j["dim"].is_number_integer())
        throw ParseError("missing or non-integer \"dim\"");
    const int dim = j["dim"].get<int>();
    if (dim < 1) throw ParseError("\"dim\" must be at least 1");

    std::vector<std::string> labels;
    if (j.contains("basis")) {
        if (!j["basis"].is_array())
            throw ParseError("\"basis\" must be an array of names");
        for (const auto& b : j["basis"]) {
            if (!b.is_string())
                throw ParseError("\"basis\" entries must be strings");
            labels.push_back(b.get<std::string>());
        }
        if (int(labels.size()) != dim)
            throw ParseError("\"basis\" length does not match \"dim\"");
    }

    Algebra a(dim, std::move(labels));
    if (!j.contains("brackets")) return a;
    if (!j["brackets"].is_array())
        throw ParseError("\"brackets\" must be an array");
    std::set<std::tuple<int, int, int>> seen;
    for (const auto& rec : j["brackets"]) {
        if (!rec.is_object() || !rec.contains("i") || !rec.contains("j") ||
            !rec.contains("k") || !rec.contains("c"))
            throw ParseError("bracket records need fields i, j, k, c");
        for (const char* f : {"i", "j", "k"})
            if (!rec[f].is_number_integer())
                throw ParseError(std::string("bracket field \"") + f +
                                 "\" must be an integer");
        const int i = rec["i"].get<int>();
        const int jj = rec["j"].get<int>();
        const int k = rec["k"].get<int>();
        for (int idx : {i, jj, k})
            if (idx < 1 || idx > dim) {
                std::ostringstream os;
                os << "bracket index " << idx << " out of range [1," << dim
                   << "]";
                throw ParseError(os.str());
            }
        if (!seen.insert({i, jj, k}).second) {
            std::ostringstream os;
            os << "duplicate bracket entry (" << i << "," << jj << "," << k
               << ")";
            throw ParseError(os.str());
        }
        if (!rec["c"].is_string())
            throw ParseError("bracket field \"c\" must be a rational string");
        Rat c;
        try {
            c = rat_parse(rec["c"].get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("bad rational \"") +
                             rec["c"].get<std::string>() + "\": " + e.what());
        }
        a.set_c(i - 1, jj - 1, k - 1, std::move(c));
    }
    return a;
}

Algebra load_algebra(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str());
}

std::string emit_algebra(const Algebra& a)
{
    json j;
    j["dim"] = a.dim();
    j["basis"] = a.labels();
    json brackets = json::array();
    for (int i = 0; i < a.dim(); ++i)
        for (int jj = 0; jj < a.dim(); ++jj)
            for (int k = 0; k < a.dim(); ++k) {
                if (a.c(i, jj, k) == 0) continue;
                json rec;
                rec["i"] = i + 1;
                rec["j"] = jj + 1;
                rec["k"] = k + 1;
                rec["c"] = rat_str(a.c(i, jj, k));
                brackets.push_back(std::move(rec));
            }
    j["brackets"] = std::move(brackets);
    return j.dump(2) + "\n";
}

void save_algebra(const Algebra& a, const std::string& path)
{
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file: " + path);
    out << emit_algebra(a);
}

} // namespace leibniz
