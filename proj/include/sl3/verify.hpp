#pragma once

// The acceptance suite: representative round trips, stability under random
// conjugation, isomorphism and conjugator fixtures, parameter orbit rules,
// branching multisets, the involution swap, inequivalence and uniqueness.
// Shared by the verify-paper command and the acceptance test binary.

#include "sl3/classify.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sl3 {

struct CheckResult {
    std::string name;
    bool pass = false;
    double seconds = 0;
    /// Counts on success, the first failure otherwise.
    std::string detail;
};

struct SuiteOptions {
    std::size_t samples = 25;  // random conjugates per representative
    std::uint64_t seed = 1;
};

/// Runs every check in order; the last entry is the overall time limit.
/// Deterministic for fixed options.
std::vector<CheckResult> run_acceptance(const SuiteOptions& opts = {});

/// det A = 1 and A^{-1} S A = T.
bool conjugates_onto(const Subalgebra& s, const Subalgebra& t, const Matrix& A);

/// A claimed isomorphism from a standard form onto a subalgebra: images[i]
/// is the image of z_{i+1}.
struct IsoFixture {
    std::string name;
    std::vector<Element> generators;
    IsoType claimed;
    std::vector<Element> images;
};

/// A hand-derived conjugator with its source and target.
struct ConjugatorFixture {
    std::string name;
    std::vector<Element> source;
    std::vector<Element> target;
    Matrix conjugator;
    /// Set when the stated pair is known not to hold, with the reason.
    std::string erratum;
};

std::vector<IsoFixture> iso_fixtures();
std::vector<ConjugatorFixture> conjugator_fixtures();

/// Empty when the fixture checks out, else what failed.
std::string check_iso_fixture(const IsoFixture& f);
std::string check_conjugator_fixture(const ConjugatorFixture& f);

}  // namespace sl3
