#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace htp {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // counterexample or short summary
};

struct VerifyOptions {
    int max_degree = 4;     // symbolic degree cap for randomized identities
    int big_n = 2;          // matrix size for oracle comparisons
    long samples = 20000;   // Monte Carlo samples per case
    std::uint64_t seed = 1;
};

std::vector<CheckResult> verify_perm(const VerifyOptions& opts);
std::vector<CheckResult> verify_algebra(const VerifyOptions& opts);
std::vector<CheckResult> verify_characters(const VerifyOptions& opts);
std::vector<CheckResult> verify_fock(const VerifyOptions& opts);
std::vector<CheckResult> verify_oracle(const VerifyOptions& opts);
std::vector<CheckResult> verify_mc(const VerifyOptions& opts);

// suite in {perm, algebra, characters, fock, oracle, mc, all}.
std::vector<CheckResult> verify_suite(const std::string& suite, const VerifyOptions& opts);

}  // namespace htp
