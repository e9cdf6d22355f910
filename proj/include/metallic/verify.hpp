#pragma once

#include <string>
#include <vector>

namespace metallic {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;   // measured values, or what went wrong
    double seconds = 0;   // wall time; each check carries a time budget
};

struct VerifyOptions {
    int kmax = 8;          // criteria 3-5 run over k = 2..kmax, m = 1..mmax
    int mmax = 6;
    std::string cli_path;  // when set, the sequence-reproduction check also
                           // spawns the real CLI and compares bytes
};

/// The full verification suite: certified mean constants, exact sequence
/// reproduction, invert-chain equivalence, root bracketing and dominance,
/// the simplicity certificate, ratio convergence, the cubic modulus law,
/// the tiling oracle, the triangle-inequality refinement, and round trips.
/// Checks with a fixed published grid keep it; kmax/mmax only widen or
/// narrow the three big-grid checks.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace metallic
