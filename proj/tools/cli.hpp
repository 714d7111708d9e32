#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fc::cli {

enum class Format { text, json, csv };

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kVerificationFailed = 3,
};

struct Command {
  std::string verb;
  /// Polynomial expressions, in order. resultant takes two.
  std::vector<std::string> polys;
  /// JSON coefficient arrays (ascending degree); used when polys is empty.
  std::vector<std::string> coeffs;
  std::optional<double> x;
  std::optional<unsigned long> p;
  double tol = 1e-12;
  bool monogenic = false;
  Format format = Format::text;
  long precision = 96;
  bool exact = false;
};

/// Verbs accepted by run().
const std::vector<std::string>& verbs();

/// Executes one command, writing the report to `out` and diagnostics to `err`.
int run(const Command& command, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and runs the command.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace fc::cli
