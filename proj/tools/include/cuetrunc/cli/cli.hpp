// Copyright 2026 The cuetrunc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CUETRUNC_CLI_CLI_HPP_
#define CUETRUNC_CLI_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cuetrunc/cli/emit.hpp"
#include "cuetrunc/normalization.hpp"
#include "cuetrunc/sampler.hpp"

namespace cuetrunc::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 2,
  kExitNumerical = 3,
  kExitIo = 4,
};

enum class Command { kConstants, kCdf, kQuantile, kSample, kGof, kConverge, kLemma, kOracle };

struct Grid {
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;
};

/// Parsed command line. Depth is either a number or one of the rules
/// "logsq" (ceil((log n)^2)) and "sublog" (max(2, ceil(0.3 log n))).
struct RunConfig {
  Command command = Command::kConstants;
  std::vector<std::int64_t> n;
  std::optional<std::string> k;
  std::optional<std::int64_t> p;
  std::optional<RegimeLabel> regime;  // empty means auto
  std::vector<double> r;
  std::vector<double> x;
  std::vector<double> q;
  std::optional<std::size_t> count;
  std::uint64_t seed = 0;
  SampleMethod method = SampleMethod::kBetaMax;
  std::optional<Grid> grid;
  Format format = Format::kJson;
  std::optional<std::string> out;
  std::optional<int> which;
  std::optional<std::int64_t> m;
  std::optional<std::int64_t> window;
};

struct RunResult {
  int exit_code = kExitOk;
  std::vector<Record> records;
  std::string message;  // diagnostic for stderr; empty on clean success
};

/// Executes the command and collects output records without writing them.
RunResult run(const RunConfig& config);

/// Parses argv, runs, and writes to out (or --out) and err. Returns the
/// process exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Raised for output failures; maps to kExitIo.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes text to path through a temporary file in the same directory and a
/// rename. Throws IoError on failure.
void write_atomically(const std::string& path, const std::string& text);

}  // namespace cuetrunc::cli

#endif  // CUETRUNC_CLI_CLI_HPP_
