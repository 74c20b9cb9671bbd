#pragma once

// Batch command surface: expand, dissect, predict, verify, detect, census,
// corpus and catalog, with text, CSV or JSON reports.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qsign::cli {

enum class Command { Expand, Dissect, Predict, Verify, Detect, Census, Corpus, Catalog };
enum class OutputFormat { Text, Csv, Json };

inline constexpr int schema_version = 1;

/// Exit statuses.
inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;

struct CommandRequest {
    Command command = Command::Expand;
    std::string spec;
    std::optional<long> p;
    std::optional<long> i;
    std::optional<long> m;
    std::optional<long> M;
    std::optional<long> j;
    std::optional<long> K;
    std::optional<long> T;
    std::optional<std::string> pattern; ///< explicit class string for verify
    long onset = -1;                    ///< onset for an explicit pattern
    std::optional<std::string> corpus_file;
    OutputFormat format = OutputFormat::Text;
    std::optional<std::string> output_path;
};

/// Default precision for expand/verify/detect/catalog: 2000, or the value of
/// the QSIGN_DEFAULT_T environment variable when set to a nonnegative integer.
long default_precision();

/// Executes a request and writes the report to `out`; diagnostics go to `err`.
/// Returns 0 when every verdict passes, 1 when one fails, 2 on bad parameters.
int run(const CommandRequest &request, std::ostream &out, std::ostream &err);

/// Parses argv (argv[0] is the program name), runs the request, and writes the
/// report to stdout-like `out` or to the requested output file.
int run_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace qsign::cli
