// Standalone acceptance runner: executes the full paper-reproduction
// suite and prints one line per check. Exit status 0 iff every check
// passes.

#include <cstdio>
#include <cstdlib>

#include "pbt/verify.hpp"

int main(int argc, char** argv) {
    unsigned seed = 0;
    if (argc > 1) seed = (unsigned)std::strtoul(argv[1], nullptr, 10);
    bool all = true;
    for (const auto& c : pbt::verify::run_paper_checks(seed)) {
        std::printf("%-4s %2d  %-55s %6lld ms%s%s\n", c.pass ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), c.millis, c.detail.empty() ? "" : "  -- ",
                    c.detail.c_str());
        all = all && c.pass;
    }
    return all ? 0 : 1;
}
