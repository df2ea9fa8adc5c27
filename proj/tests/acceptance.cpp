// Runs the ten acceptance checks and prints one PASS/FAIL line per check.
#include <cstdlib>
#include <iostream>

#include "arbor/testing/acceptance.hpp"

int main() {
    std::uint64_t seed = arbor::corpus::kDefaultSeed;
    if (const char* s = std::getenv("ARBOR_SEED")) {
        seed = std::strtoull(s, nullptr, 10);
    }
    int failed = 0;
    for (const auto& r : arbor::acceptance::run_all(seed)) {
        std::cout << arbor::acceptance::format_line(r) << std::endl;
        failed += r.passed ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
