#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric::cli {

enum class OutputFormat { Text, Json, Csv };

struct CommandConfig {
    std::string command; ///< intersect, check-snp, gen-snp, volume, factorize, chain, lift, verify-cert
    std::optional<std::string> germ_path;
    std::optional<std::string> weights; ///< "p1:q1,..." or "@file.json"
    OutputFormat format = OutputFormat::Text;
    std::optional<int> decimal_digits;
    unsigned jobs = 1;

    std::optional<std::size_t> n;
    std::optional<std::string> p1;
    bool oracle = false;
    std::size_t samples = 5;
    bool volumes = false;
    std::optional<std::string> csv_path;
    std::optional<int> d;
    std::optional<std::string> v;
    std::optional<std::string> cert_path;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable consulted when --germ is absent.
inline constexpr const char* kGermEnvVar = "TORIC_VOLUME_GERM";

/// Parses argv into a config. Returns std::nullopt and sets `exit_code` when
/// the process should stop (help requested: 0, bad usage: 2).
std::optional<CommandConfig> parse_command_line(
    const std::vector<std::string>& args, std::ostream& out, std::ostream& err, int& exit_code);

/// Runs one command. 0 on success, 1 on domain/validation failure, 2 on usage errors.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

/// parse_command_line + run.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace toric::cli
