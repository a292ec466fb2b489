#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "kym/surface.hpp"
#include "kym/threefold.hpp"

namespace kym {

enum class CheckStatus { pass, fail, skipped };

/// One verification check. For identity checks, status == pass iff the exact
/// residual is the zero object; `witness` carries the canonical residual or
/// offending value on failure (and context notes on skips).
struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::skipped;
    std::optional<std::string> witness;
    std::chrono::duration<double> elapsed{0};
};

struct VerificationReport {
    std::string fingerprint;  // family and all input parameters
    std::vector<CheckResult> checks;
    bool overall = false;     // true iff no check failed

    const CheckResult* find(const std::string& id) const;
    bool only_failure_is(const std::string& id) const;
};

/// Re-derives every checkable identity of the solution from its raw inputs
/// and compares against the stored fields (the stored solution is the object
/// under test, the re-derivation the reference). Checks run in a fixed
/// order with no early exit:
///   boundary_conditions, ode_residual, coupled_residual, positivity,
///   class_integrality, alpha_ratios, cym_coefficient.
/// Failures are statuses, never exceptions. A non-positive CYM coefficient
/// and a non-integral (a, b) class choice are reported as skipped (with the
/// value as witness): they are properties of the parameters, not failed
/// identities.
VerificationReport verify_solution(const SurfaceSolution& sol);
VerificationReport verify_solution(const ThreefoldSolution& sol);

std::string to_string(CheckStatus status);

}  // namespace kym
