#include "jacal/dsl/executor.hpp"
#include "jacal/harness.hpp"
#include "corpus_scripts.inc"

namespace jacal {

CorpusReport run_example_corpus(int s_max) {
  CorpusReport report;
  for (const auto& script : example_corpus()) {
    dsl::RunOptions options;
    options.fixture = script.name;
    options.s_max = s_max;
    dsl::RunReport run = dsl::run_script(script.source, options);
    for (auto& line : run.assertions()) report.lines.push_back(std::move(line));
    for (const auto& c : run.commands)
      if (!c.assertion && c.cmd.rfind("contains(", 0) == 0)
        report.notes.push_back("verdict " + script.name + ": " + c.cmd + " = " + c.value);
    if (run.diagnostic) {
      report.lines.push_back({false, script.name, "script", "no diagnostic", *run.diagnostic});
    }
  }
  return report;
}

}  // namespace jacal
