#pragma once

#include "msurf/cli/input.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace msurf::cli {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr std::uint64_t kDefaultSeed = 1;

enum class ExitStatus { ok = 0, check_failed = 1, input_error = 2 };

/// One verification record. status is "pass", "fail" or "skip".
struct Check {
    std::string name;
    std::string status;
    std::string certifies;
    nlohmann::json witness = nlohmann::json::object();
};

/// A report is a json tree with sorted keys and no floating-point values.
struct Report {
    nlohmann::json tree;
    ExitStatus status = ExitStatus::ok;
};

struct JobOptions {
    std::string mode = "symbolic";  // symbolic | sampled
    std::uint64_t seed = kDefaultSeed;
    bool corrupt = false;
    bool timing = false;
    std::string input_label;        // printed as the input path
    std::string input_bytes;        // digested
};

Report cmd_analyze(const InputSpec& spec, const JobOptions& opt);
Report cmd_involutions(const InputSpec& spec, const JobOptions& opt);
Report cmd_lattice(int d, const JobOptions& opt);
Report cmd_hypersurface(const InputSpec& spec, const JobOptions& opt);

/// Invariant violation reported as a structured document (exit status 2).
Report rejection_report(const std::string& command, const std::string& invariant, const std::string& message,
                        const JobOptions& opt);

/// Seeded sample files, in the input format.
std::string sample_surface_file(int d, std::uint64_t seed);
std::string sample_hypersurface_file(int n, int m, int d, std::uint64_t seed);

std::string render_structured(const Report& r);
std::string render_human(const Report& r);

/// 64-bit FNV-1a, hex.
std::string digest(const std::string& bytes);

}  // namespace msurf::cli
