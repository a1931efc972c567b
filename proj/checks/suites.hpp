#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conedual/sampling.hpp"

namespace conedual::checks {

struct CriterionResult
{
    explicit CriterionResult(std::string n) : name(std::move(n)) {}

    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<std::string> failures;     // first few failure descriptions

    void record(bool ok, const std::string& description);
    bool ok() const { return failed == 0 && passed > 0; }
};

struct SuiteReport
{
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CriterionResult> criteria;

    bool ok() const;
    /// Canonical JSON text; identical runs give identical bytes.
    std::string serialize() const;
};

/// Names accepted by runSuite, in the order runAll uses.
const std::vector<std::string>& suiteNames();

/// Throws std::invalid_argument for an unknown name.
SuiteReport runSuite(const std::string& name, std::uint64_t seed = Sampler::kDefaultSeed);
std::vector<SuiteReport> runAll(std::uint64_t seed = Sampler::kDefaultSeed);

SuiteReport extrealSuite(std::uint64_t seed);
SuiteReport separationSuite(std::uint64_t seed);
SuiteReport interpolationSuite(std::uint64_t seed);
SuiteReport minkowskiSuite(std::uint64_t seed);
SuiteReport schroderSimpsonSuite(std::uint64_t seed);
SuiteReport regressionSuite(std::uint64_t seed);
SuiteReport lemma1Suite(std::uint64_t seed);

}   // namespace conedual::checks
