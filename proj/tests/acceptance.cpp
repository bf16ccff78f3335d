#include "verify.hpp"

#include <cstdio>

// One line per acceptance criterion, exit status 0 only if all pass.
int main() {
    const struct {
        const char* label;
        const char* suite;
    } rows[] = {
        {"1 golden path table and expansion (G2, second fundamental weight)", "g2golden"},
        {"2 exact operator identity for every w (A2 B2 G2 A3)", "thm42"},
        {"3 path character vs operator character vs dimension", "character"},
        {"4 push-pull operator algebra on random inputs", "identities31"},
        {"5 point class transported to every parabolic class", "pointclasses"},
        {"6 cover layer vs classical degree-one product", "chevalley"},
        {"7 string, crystal, and expansion bookkeeping properties", "strings"},
        {"8 polynomial model: squares, degrees, extraction", "cohomology"},
    };
    const std::uint64_t seed = 20260819ULL;
    bool all_ok = true;
    for (const auto& row : rows) {
        flagk::Report rep = flagk::run_suite(row.suite, seed);
        bool ok = rep.ok();
        all_ok = all_ok && ok;
        std::printf("criterion %s: %s\n", row.label, ok ? "PASS" : "FAIL");
        if (!ok)
            for (const auto& c : rep.checks)
                if (!c.ok) std::printf("    %s (%s)\n", c.name.c_str(), c.detail.c_str());
        std::fflush(stdout);
    }
    return all_ok ? 0 : 1;
}
