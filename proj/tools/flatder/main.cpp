#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "flatder/commands.hpp"

namespace {

using flatder::cli::Format;
using flatder::cli::kExitUsage;
using flatder::cli::UsageError;

struct Flags {
  std::string pattern;
  std::optional<int> n;
  std::optional<int> n_max;
  std::string method;
  std::string y;
  std::string format;
  int order = 14;
  int workers = 1;
  std::string scope = "all";
  int m_max = 25;
};

flatder::cli::RunConfig make_config(const Flags& flags, Format default_format, bool poly_by_default) {
  flatder::cli::RunConfig config;
  config.pattern = flags.pattern;
  if (flags.n) config.n_min = *flags.n;
  config.n_max = flags.n_max.value_or(flags.n ? *flags.n : 10);
  if (!flags.method.empty()) config.method = flatder::cli::parse_method(flags.method);
  if (flags.y.empty()) {
    if (!poly_by_default) config.y = flatder::BigInt(1);
  } else if (flags.y != "poly") {
    flatder::BigInt value;
    if (value.set_str(flags.y, 10) != 0) throw UsageError("--y expects an integer or 'poly'");
    config.y = value;
  }
  config.format = flags.format.empty() ? default_format : *flatder::cli::parse_format(flags.format);
  config.order = flags.order;
  config.workers = flags.workers;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycle distributions of flattened derangements avoiding vincular patterns"};
  app.require_subcommand(1);
  Flags flags;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--method", flags.method, "brute, recurrence, formula or series")
        ->check(CLI::IsMember({"brute", "recurrence", "formula", "series"}));
    cmd->add_option("--y", flags.y, "integer evaluation point for y, or 'poly'");
    cmd->add_option("--format", flags.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--workers", flags.workers, "threads for brute force")->check(CLI::PositiveNumber);
  };

  auto* table = app.add_subcommand("table", "d_tau(n) for a range of n");
  table->add_option("--pattern", flags.pattern, "pattern such as 3-21")->required();
  table->add_option("--n", flags.n, "first n (default 2)");
  table->add_option("--n-max", flags.n_max, "last n (default 10)");
  add_common(table);

  auto* dist = app.add_subcommand("dist", "d_tau(n; y) as a polynomial in y");
  dist->add_option("--pattern", flags.pattern, "pattern such as 3-12")->required();
  dist->add_option("--n", flags.n, "length")->required();
  add_common(dist);

  auto* table1 = app.add_subcommand("table1", "recompute the table of d_tau(n), 2 <= n <= 10");
  add_common(table1);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("scope", flags.scope, "table1, oracle-vs-recurrence, formulas, series, equivalences, "
                                           "identities or all")
      ->check(CLI::IsMember({"table1", "oracle-vs-recurrence", "formulas", "series", "equivalences",
                             "identities", "all"}));
  verify->add_option("--n-max", flags.n_max, "largest n for brute-force checks (default 9)");
  verify->add_option("--m-max", flags.m_max, "largest m for the alternating-sum identity (default 25)");
  verify->add_option("--order", flags.order, "series truncation order (default 14)");
  verify->add_option("--format", flags.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--workers", flags.workers, "threads for brute force")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*table) return flatder::cli::cmd_table(make_config(flags, Format::csv, false), std::cout);
    if (*dist) return flatder::cli::cmd_dist(make_config(flags, Format::text, true), std::cout);
    if (*table1) return flatder::cli::cmd_table1(make_config(flags, Format::text, false), std::cout);
    flatder::verify::Options options;
    options.n_max = flags.n_max.value_or(options.n_max);
    options.m_max = flags.m_max;
    options.order = flags.order;
    options.workers = flags.workers;
    const Format format = flags.format == "json" ? Format::json : Format::text;
    return flatder::cli::cmd_verify(*flatder::verify::parse_scope(flags.scope), options, format, std::cout);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
