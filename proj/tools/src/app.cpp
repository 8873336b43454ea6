// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#include "gri_cli/app.hpp"

#include <ostream>

#include "CLI11.hpp"
#include "gri/error.hpp"
#include "gri_cli/commands.hpp"

namespace gri::cli {

int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Estimation and inference for inequality and poverty indices", "gri"};
  app.add_option("command", c.command, "estimate | compare | decompose | validate")
      ->required()
      ->check(CLI::IsMember({"estimate", "compare", "decompose", "validate"}));
  app.add_option("--index", c.index,
                 "fgt, sen, kakwani, shorrocks, thon, takayama, takayama-ratio, central-moment, odd-moment, "
                 "even-moment");
  app.add_option("--alpha", c.alpha, "FGT exponent (default 0)");
  app.add_option("--k", c.k, "Kakwani exponent (default 1)");
  app.add_option("--order", c.order, "moment order (default 2)");
  app.add_option("--poverty-line", c.poverty_line, "poverty line Z");
  app.add_option("--level", c.level, "confidence level (default 0.95)");
  app.add_option("--grid", c.grid, "quadrature panels for parametric models")->check(CLI::PositiveNumber);
  app.add_option("--seed", c.seed, "master seed (validate)");
  std::string format = "text";
  app.add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--experiment", c.experiment, "normality | coverage | cre2 | decomposability");
  app.add_option("--input", c.input, "CSV file, - for stdin");
  app.add_option("--input2", c.input2, "second CSV file (period 2, or group labels)");
  app.add_option("--threads", c.threads, "worker threads for validate, 0 = all cores");
  app.add_option("--n", c.n, "sample size per replicate (validate; smallest n for cre2)");
  app.add_option("--replicates", c.replicates, "number of replicates (validate)");
  app.add_option("--family", c.families, "e.g. lognormal(0,1); repeat per group (validate)");
  app.add_option("--weight", c.weights, "group probabilities (validate decomposability)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  c.format = format == "json" ? Format::Json : Format::Text;
  if (c.command == "validate" && c.experiment.empty()) {
    err << "error: validate needs --experiment\n";
    return 2;
  }

  try {
    const CommandOutput result = run_command(c);
    for (const auto& w : result.warnings) err << "warning: " << w << "\n";
    out << render(result, c.format);
    if (result.exit_code == 3) err << "acceptance band failed\n";
    return result.exit_code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::UnknownExperiment ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace gri::cli
