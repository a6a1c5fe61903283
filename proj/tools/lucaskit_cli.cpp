#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lucaskit/lucaskit.h"

namespace {

struct Options {
  std::optional<std::string> k;
  std::optional<long> limit;
  std::optional<long> n_max;
  std::optional<int> digits;
  std::optional<std::string> M;
  std::string format = "json";
  bool long_run = false;
  int workers = 1;
};

CLI::App* add_command(CLI::App& parent, const std::string& name, const std::string& help, Options& o,
                      bool k, bool limit, bool n_max, bool digits, bool m) {
  CLI::App* c = parent.add_subcommand(name, help);
  if (k) c->add_option("--k", o.k, "order k, or a range A..B");
  if (limit) c->add_option("--limit", o.limit, "largest index or parameter scanned");
  if (n_max) c->add_option("--n-max", o.n_max, "largest index checked");
  if (digits) c->add_option("--digits", o.digits, "starting working precision in decimal digits");
  if (m) c->add_option("--M", o.M, "bound M on the exponents, e.g. 1.5e46");
  c->add_option("--format", o.format, "json, tsv or text")->check(CLI::IsMember({"json", "tsv", "text"}));
  c->add_flag("--long-run", o.long_run, "allow runs beyond the default size gates");
  c->add_option("--workers", o.workers, "worker threads")->check(CLI::Range(1, 64));
  return c;
}

int run(const nlohmann::ordered_json& config, const std::string& format) {
  lk_context* ctx = lk_context_create();
  if (!ctx) return 2;
  lk_report* report = nullptr;
  const std::string text = config.dump();
  if (lk_run(ctx, text.c_str(), &report) != LK_OK) {
    std::fprintf(stderr, "lucaskit: %s\n", lk_last_error(ctx));
    lk_context_destroy(ctx);
    return 2;
  }
  char* out = nullptr;
  int code = lk_report_exit_code(report);
  if (lk_report_render(ctx, report, format.c_str(), &out) == LK_OK) {
    std::fputs(out, stdout);
    lk_string_free(out);
  } else {
    std::fprintf(stderr, "lucaskit: %s\n", lk_last_error(ctx));
    code = 2;
  }
  lk_report_destroy(report);
  lk_context_destroy(ctx);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeros, closed forms and bounds for k-generalized Lucas sequences at negative indices"};
  app.set_version_flag("--version", std::string("lucaskit ") + lk_version());
  app.require_subcommand(1);
  Options o;

  add_command(app, "zeros", "list n >= 0 with L_{-n} = 0", o, true, true, false, false, false);
  CLI::App* verify = app.add_subcommand("verify", "check closed forms and identities against the recurrence");
  verify->require_subcommand(1);
  add_command(*verify, "closed-forms", "every closed form for L at negative indices", o, true, false, true, false, false);
  add_command(*verify, "identities", "relations between L, F and their negative-index mirrors", o, true, false, true,
              false, false);
  add_command(*verify, "signs", "sign pattern of L_{-n} for even k", o, true, false, true, false, false);
  add_command(app, "roots", "certified roots of the characteristic polynomial", o, true, false, false, true, false);
  add_command(app, "bounds", "linear-form and chain bounds", o, true, false, false, true, false);
  add_command(app, "reduce", "continued-fraction reduction for odd k", o, true, false, false, true, true);
  CLI::App* audit = app.add_subcommand("audit", "checks of auxiliary claims");
  audit->require_subcommand(1);
  add_command(*audit, "kummer", "2-adic valuations of the psi combination", o, false, true, false, false, false);
  add_command(*audit, "root-properties", "root modulus and f_k bounds", o, true, false, false, true, false);
  add_command(*audit, "bands", "band constants for odd k between 501 and 885", o, true, false, false, true, false);
  CLI::App* report = app.add_subcommand("report", "tables");
  report->require_subcommand(1);
  add_command(*report, "table1", "zeros of L_{-n} for k = 2..7", o, false, false, false, false, false);
  add_command(app, "selftest", "quick consistency checks", o, false, false, false, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  nlohmann::ordered_json config;
  CLI::App* cmd = app.get_subcommands().front();
  config["command"] = cmd->get_name();
  if (!cmd->get_subcommands().empty()) config["subcommand"] = cmd->get_subcommands().front()->get_name();
  if (o.k) config["k"] = *o.k;
  if (o.limit) config["limit"] = *o.limit;
  if (o.n_max) config["n_max"] = *o.n_max;
  if (o.digits) config["digits"] = *o.digits;
  if (o.M) config["M"] = *o.M;
  config["format"] = o.format;
  config["long_run"] = o.long_run;
  config["workers"] = o.workers;
  return run(config, o.format);
}
