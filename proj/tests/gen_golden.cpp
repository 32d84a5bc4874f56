// Regenerates golden/table_conformance.txt. Run with the output path as the
// single argument, then review the diff before committing.
#include <leibniz/bider_construct.hpp>

#include <fstream>
#include <iostream>

using namespace leibniz;

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: gen_golden <output-file>\n";
        return 2;
    }
    std::ofstream out(argv[1]);
    if (!out) {
        std::cerr << "cannot open " << argv[1] << "\n";
        return 2;
    }
    for (FamilyTag t : all_families()) {
        const int lo = std::max(family_min_n(t), 2);
        for (int n = lo; n <= 6; ++n) {
            const FamilyId f{t, n};
            out << format_conformance(
                verify_table(make_algebra(f), paper_bider_basis(f)));
        }
    }
    return 0;
}
