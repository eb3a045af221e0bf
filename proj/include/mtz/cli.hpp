#pragma once

// Request type and dispatcher behind the `mtz` command-line tool. Responses
// are JSON objects tagged with "schema": "mtz.cli/1".

#include "mtz/exact.hpp"

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mtz {

inline constexpr const char* kCliSchema = "mtz.cli/1";

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kVerifyFailed = 3 };

struct CommandRequest {
  std::string subcommand;  // reduce verify eval convert bern-expand partitions characters
  std::vector<int> s;
  std::optional<Rational> alpha;
  std::optional<std::pair<long, long>> chi;  // (modulus, index)
  std::optional<std::complex<double>> z;
  long precision_bits = 256;
  int N = 3000;
  double tol = 1e-8;
  std::string format = "json";
  std::string kind = "fat";      // partitions: fat | pre-fat
  std::string method = "nice";   // bern-expand: naive | carlitz | berprod | nice
  long modulus = 0;              // characters
};

/// "a", "a+bi", "a-bi", "bi" with decimal components.
std::complex<double> parse_complex(std::string_view text);

/// Throws std::invalid_argument when the request is inconsistent.
void validate(const CommandRequest& req);

/// Writes the response to `out` and diagnostics to `err`; returns an ExitCode.
int run(const CommandRequest& req, std::ostream& out, std::ostream& err);

}  // namespace mtz
