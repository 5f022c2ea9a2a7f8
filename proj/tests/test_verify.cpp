#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>

#include "nogo/scenarios.hpp"
#include "nogo/verify.hpp"

using namespace nogo;

TEST_CASE("all suites pass on the default seed") {
    const auto suites = run_all_suites(kDefaultVerifySeed);
    REQUIRE(suites.size() == 3);
    CHECK(suites[0].name == "qcore");
    CHECK(suites[1].name == "machine");
    CHECK(suites[2].name == "nogo");
    for (const SuiteResult& suite : suites) {
        CAPTURE(suite.name);
        CHECK(suite.checks.size() > 0);
        for (const CheckResult& check : suite.checks) {
            CAPTURE(check.name);
            CAPTURE(check.detail);
            CHECK(check.passed);
        }
        CHECK(suite.all_passed());
        CHECK(suite.failed() == 0);
        CHECK(suite.passed() == suite.checks.size());
    }
}

TEST_CASE("suites are robust to a different seed") {
    for (const SuiteResult& suite : run_all_suites(0xDEADBEEF)) {
        CAPTURE(suite.name);
        CHECK(suite.all_passed());
    }
}

TEST_CASE("suite results are deterministic for a fixed seed") {
    const auto first = run_all_suites(0x1234);
    const auto second = run_all_suites(0x1234);
    REQUIRE(first.size() == second.size());
    for (std::size_t s = 0; s < first.size(); ++s) {
        REQUIRE(first[s].checks.size() == second[s].checks.size());
        for (std::size_t i = 0; i < first[s].checks.size(); ++i) {
            CHECK(first[s].checks[i].name == second[s].checks[i].name);
            CHECK(first[s].checks[i].passed == second[s].checks[i].passed);
            CHECK(first[s].checks[i].detail == second[s].checks[i].detail);
        }
    }
}

TEST_CASE("draw source is deterministic and well-ranged") {
    Rng a(42), b(42);
    for (int i = 0; i < 1000; ++i) {
        const double u = a.uniform();
        CHECK(u == b.uniform());
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    Rng c(7);
    for (int i = 0; i < 200; ++i) {
        const double v = c.uniform(2.0, 3.0);
        CHECK(v >= 2.0);
        CHECK(v < 3.0);
        CHECK(std::abs(c.unit_disk()) <= 1.0);
        CHECK(c.index(5) < 5);
    }
    // Random states are normalized; random unitaries are unitary.
    Rng d(99);
    for (int i = 0; i < 50; ++i) {
        CHECK_NOTHROW(d.state({2, 3}));  // the constructor enforces the norm
        const ComplexMatrix u = d.unitary_2x2();
        CHECK((u.adjoint() * u).max_abs_diff(ComplexMatrix::identity(2)) < 1e-12);
    }
}

TEST_CASE("check harness reports pass, failure detail, and exceptions") {
    const CheckResult ok = run_check("trivially true", [] { return std::optional<std::string>{}; });
    CHECK(ok.passed);
    CHECK(ok.detail.empty());

    const CheckResult bad =
        run_check("always fails", [] { return std::optional<std::string>{"x=3 broke"}; });
    CHECK_FALSE(bad.passed);
    CHECK(bad.detail == "x=3 broke");

    const CheckResult threw = run_check("throws", []() -> std::optional<std::string> {
        throw std::runtime_error("boom");
    });
    CHECK_FALSE(threw.passed);
    CHECK(threw.detail.find("boom") != std::string::npos);
}

TEST_CASE("an injected sign fault in the closed form is detected") {
    // Meta-test of the property machinery: run the closed-form comparison
    // with a deliberately wrong model (mirror of the true one around 1/2).
    // The harness must flag it, proving the comparison has teeth.
    const CheckResult mutated =
        run_check("wrong-sign closed form", []() -> std::optional<std::string> {
            Rng rng(kDefaultVerifySeed);
            for (int i = 0; i < 20; ++i) {
                const double a = rng.uniform(0.2, 0.8);
                const double c = rng.uniform(0.2, 0.8);
                const double theta = rng.uniform(0.5, 2.0);
                const double b = std::sqrt(1.0 - a * a);
                const double d = std::sqrt(1.0 - c * c);
                const EntanglementReport r = monotonicity_test(a, b, c, d, theta);
                const double wrong_after = 0.5 - 0.5 * std::norm(r.alpha);
                if (std::abs(r.lambda_after - wrong_after) > 1e-9)
                    return "model mismatch at a=" + std::to_string(a);
            }
            return std::nullopt;
        });
    CHECK_FALSE(mutated.passed);
    CHECK(mutated.detail.find("model mismatch") != std::string::npos);
}
