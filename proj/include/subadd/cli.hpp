#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace subadd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::string_view kReportSchema = "subadd-report/1";

/// Malformed, empty, or non-finite input.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class InputFormat { automatic, csv, json };

/// Numbers separated by commas and/or whitespace; `#` starts a comment that
/// runs to the end of the line.
std::vector<double> parse_csv(std::string_view text);

/// A JSON array of numbers, or an object whose "values" member is one (the
/// shape `generate` emits).
std::vector<double> parse_json(std::string_view text);

/// Picks the parser from `format`, else the path's extension (.json, .csv,
/// .txt), else the first non-blank character of the text.
std::vector<double> parse_input(std::string_view text, std::string_view path, InputFormat format);

/// Shortest decimal string that parses back to the same binary64 value.
std::string format_number(double x);

/// Entry point behind the `subadd` executable. `args` excludes argv[0].
/// Returns 0 on success, 1 when the checked property fails, 2 on input or
/// parameter errors (with a one-line diagnostic on `err`).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace subadd::cli
