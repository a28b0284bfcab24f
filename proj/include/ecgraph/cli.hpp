#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ecgraph/connect.hpp"
#include "ecgraph/core.hpp"
#include "ecgraph/io.hpp"

namespace ecg {

enum ExitCode : int { kExitOk = 0, kExitError = 1, kExitUsage = 2, kExitNegative = 3, kExitUnsupported = 4, kExitBudget = 5 };

struct AnalyzeOptions {
  int max_n = 10;             // oracle fallback only up to this many vertices
  int max_m = 22;             // and this many edges
  bool timing = false;        // adds elapsed_ms per entry; output is then no longer byte-stable
  bool witness_oracle = false;
  Exec exec = Exec::Parallel;
};

// Question order of every report.
const std::vector<std::string>& analysis_questions();

// {"vertices", "edges", "questions": [{question, answer, method, witness | counterexample, ...}]}.
// answer is true, false or "unknown"; method is "fast", "oracle" or "none".
Json analyze(const Graph& g, const AnalyzeOptions& opt = {});

// One entry of the report above.
Json analyze_question(const Graph& g, const std::string& question, const AnalyzeOptions& opt = {});

std::string analysis_table(const Json& report);

// args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ecg
