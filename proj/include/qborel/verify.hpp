#pragma once

// Invariant suites run by `qborel verify` and by the acceptance driver.
// Every suite returns one result per property, aggregated over its cases.

#include "qborel/hopf.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qborel {

struct CheckResult {
    std::string name;
    bool pass = false;
    long cases = 0;
    std::string detail; // first failure, if any
};

struct SuiteOptions {
    int height = 0; // 0: default bound of the normal-form context
    std::uint32_t seed = 20240607;
    int random_cases = 1000; // Bruhat equivalence samples above |W| = 12
    int random_chains = 100;
    int psi_pairs = 100;
    int hopf_height = 4;
    int hopf_samples = 12;
};

const std::vector<std::string>& suite_names();
/// Throws BadIndex for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite, const RootSystem& rs, const SuiteOptions& opt = {});

/// Elements the algebraic suites iterate over: all of W at rank <= 2,
/// the longest element otherwise.
std::vector<WeylElt> suite_elements(const RootSystem& rs, bool combinatorial);

/// Weights in Q_+ of height 1..max_height.
std::vector<QVec> weights_up_to(const RootSystem& rs, int max_height);

} // namespace qborel
