#pragma once

#include <string>
#include <vector>

namespace akblocks {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct SelftestOptions {
    bool quick = false;          // combinatorial checks only
    std::string inject_fault;    // "gram" corrupts one Gram entry (negative control)
};

namespace checks {

CheckResult example_weight_reproduction();
CheckResult bipartition_conjugation_weight();
CheckResult reversed_parameter_conjugation();
CheckResult dominance_reversal_under_conjugation();
CheckResult block_weight_constancy();
CheckResult weight_one_chain_structure();
CheckResult weight_one_block_s3_verification();
CheckResult weight_one_block_s2_verification();
CheckResult structural_identity_suite(const std::string& inject_fault = "", uint32_t max_n = 3);
CheckResult radical_ideal_certification();

}  // namespace checks

std::vector<CheckResult> run_selftest(const SelftestOptions& options);

}  // namespace akblocks
