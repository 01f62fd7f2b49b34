#pragma once

#include <exception>
#include <string>

#include "hsmf/inputspec.hpp"

namespace hsmf {

inline constexpr const char* kToolName = "hsmf";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

/// One command run, rendered both ways. The JSON document is deterministic
/// for a fixed input and tool version; wall-clock timing only ever appears in
/// the text rendering.
struct Report {
    std::string command;
    std::string text;
    std::string json;
};

Report run_analyze(const InputSpec& spec);
Report run_hh(const InputSpec& spec, int kmin, int kmax);
Report run_hom(const InputSpec& spec, int m, int t);
Report run_gamma(const InputSpec& spec);
Report run_pairing(const InputSpec& spec, int e1, int e2, bool include_matrix);

/// Exit-code contract: 2 parse/validation, 3 non-isolated singularity,
/// 4 indeterminate composition, 1 anything else.
int exit_code_for(const std::exception& e);

}  // namespace hsmf
