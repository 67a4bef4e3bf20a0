// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any
// failure. Optional arguments: samples per representative, seed.

#include "sl3/verify.hpp"

#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv) {
    sl3::SuiteOptions opts;
    if (argc > 1) opts.samples = std::strtoul(argv[1], nullptr, 10);
    if (argc > 2) opts.seed = std::strtoull(argv[2], nullptr, 10);
    auto results = sl3::run_acceptance(opts);
    bool ok = true;
    int n = 0;
    for (const auto& r : results) {
        std::printf("%2d %s  %-26s %8.3f s  %s\n", ++n, r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                    r.detail.c_str());
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}
