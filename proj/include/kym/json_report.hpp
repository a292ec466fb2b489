#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "kym/cym.hpp"
#include "kym/verifier.hpp"

namespace kym {

/// Reproducibility header embedded verbatim in every output file.
struct RunManifest {
    std::string command;
    std::string parameters;
    std::string version;
    std::string timestamp;   // ISO-8601 UTC; the only run-dependent field
    std::string input_hash;  // FNV-1a 64 of command + parameters, hex
};

RunManifest make_manifest(const std::string& command, const std::string& parameters);
std::string artifact_version();

nlohmann::json to_json(const RunManifest& manifest);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const MinimalityReport& report);

/// The full report schema:
/// { manifest, family, inputs, constants{..}, classes{omega, gamma, integral},
///   checks:[{id, status, witness?}], cym{coefficient, positive, perturbations[]} }.
/// Rationals are "p/q" strings, never floats.
nlohmann::json solution_report(const RunManifest& manifest, const SurfaceSolution& sol,
                               const VerificationReport& verification,
                               const std::optional<MinimalityReport>& minimality);
nlohmann::json solution_report(const RunManifest& manifest, const ThreefoldSolution& sol,
                               const VerificationReport& verification,
                               const std::optional<MinimalityReport>& minimality);

/// Report stub for parameters whose kappa system is inconsistent (no
/// solution object exists).
nlohmann::json inconsistent_report(const RunManifest& manifest, const ThreefoldConfig& cfg);

}  // namespace kym
