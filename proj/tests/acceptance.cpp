// Acceptance suite: runs every verification criterion at its pinned
// parameters and prints one PASS/FAIL line per criterion. Exits nonzero
// if any criterion fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include "edgeideals/verify.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = edgeideals::verify::kDefaultSeed;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
    std::cout << "acceptance criteria (corpus seed " << seed << ")\n";
    int failures = 0;
    int index = 0;
    for (const auto& name : edgeideals::verify::suite_names()) {
        auto results = edgeideals::verify::run_suite(name, seed);
        for (const auto& c : results) {
            ++index;
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << "criterion " << index << " ("
                      << c.id << "): " << c.detail << std::endl;
            if (!c.pass) ++failures;
        }
    }
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
