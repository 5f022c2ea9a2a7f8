// verify.hpp
// Seeded randomized property suites for the three library layers. The CLI's
// `verify` command runs them all; tests reuse individual suites and the
// check harness. Draws are reproducible across platforms for a given seed
// (mt19937_64 plus fixed mappings, no distribution objects from <random>).

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nogo/qcore.hpp"

namespace nogo {

inline constexpr std::uint64_t kDefaultVerifySeed = 0xC0FFEE;

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // empty on pass; the failing case's inputs otherwise
};

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> checks;

    std::size_t passed() const;
    std::size_t failed() const;
    bool all_passed() const;
};

// Deterministic draw source. Raw engine output is mapped manually so results
// are identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform();                        // [0, 1)
    double uniform(double lo, double hi);    // [lo, hi)
    double gaussian();                       // standard normal (Box-Muller)
    Complex gaussian_complex();              // independent N(0,1) parts
    Complex unit_disk();                     // |z| <= 1, uniform (rejection)
    std::size_t index(std::size_t n);        // {0, ..., n-1}

    // Haar-ish random pure state via normalized Gaussian amplitudes.
    StateVector state(std::vector<std::size_t> dims);
    // Random 2x2 unitary: Gram-Schmidt on Gaussian columns.
    ComplexMatrix unitary_2x2();

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Runs one named property body; pass = body returns an empty optional.
// Exceptions become failures carrying the message.
CheckResult run_check(const std::string& name,
                      const std::function<std::optional<std::string>()>& body);

SuiteResult run_qcore_suite(std::uint64_t seed);
SuiteResult run_machine_suite(std::uint64_t seed);
SuiteResult run_scenario_suite(std::uint64_t seed);

// All three suites in order.
std::vector<SuiteResult> run_all_suites(std::uint64_t seed = kDefaultVerifySeed);

}  // namespace nogo
