#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hsmf/parser.hpp"
#include "hsmf/polynomial.hpp"

namespace hsmf {

struct CliOptions {
    bool json = false;
    bool no_oracle = false;
    bool assume_restriction_action = false;
    std::optional<std::uint64_t> modulus;
};

/// Parsed input description: variable system, polynomial text and options.
struct InputSpec {
    VarSystem vars;
    std::string omega_text;
    CliOptions options;
};

/// Reads a key-value description file with keys vars, weights, degree, omega
/// and options. '#' starts a comment; vars and weights accept space- or
/// comma-separated lists. Throws Error on malformed files and validates
/// the variable system.
InputSpec load_input_file(const std::string& path);

/// Same, from an in-memory string (used by tests).
InputSpec parse_input_text(const std::string& text);

/// Parses omega and checks it is quasi-homogeneous of the declared degree.
Polynomial parse_omega(const InputSpec& spec);

}  // namespace hsmf
