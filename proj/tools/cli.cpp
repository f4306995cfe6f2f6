#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace dws::cli {

using nlohmann::json;
using suites::CaseKind;
using suites::SuiteConfig;
using suites::SuiteReport;

namespace {

const char* kind_name(CaseKind k) {
  switch (k) {
    case CaseKind::Numeric: return "numeric";
    case CaseKind::Exact: return "exact";
    case CaseKind::Count: return "count";
    case CaseKind::Info: return "info";
  }
  return "?";
}

std::vector<int> parse_ints(const std::string& s, const char* what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("bad integer list for ") + what + ": " + s);
    }
  }
  return out;
}

std::vector<std::string> parse_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void summarize(const SuiteReport& rep, std::ostream& err) {
  std::size_t info = 0;
  for (const auto& c : rep.cases) info += c.kind == CaseKind::Info;
  err << rep.suite << ": " << rep.cases.size() - rep.failures() << "/" << rep.cases.size() << " cases pass";
  if (info) err << " (" << info << " informational)";
  err << ", " << std::fixed << std::setprecision(2) << rep.wall_seconds << " s\n";
  err.unsetf(std::ios::floatfield);
  for (const auto& [k, v] : rep.summary) err << "  " << k << ": " << v << "\n";
  std::size_t shown = 0;
  for (const auto& c : rep.cases) {
    if (c.pass) continue;
    if (++shown > 20) {
      err << "  ... " << rep.failures() - 20 << " more failures\n";
      break;
    }
    err << "  FAIL " << c.id << " [" << c.params << "] residual=" << std::setprecision(6) << c.residual << "\n";
  }
}

}  // namespace

json config_json(const SuiteConfig& cfg) {
  return json{{"n", cfg.n},
              {"r", cfg.r},
              {"lambda", cfg.lambda},
              {"x", cfg.x},
              {"delta", cfg.delta},
              {"trunc", cfg.trunc},
              {"tol", cfg.tol},
              {"seed", cfg.seed},
              {"window", cfg.window},
              {"lattice", cfg.lattice},
              {"relations", cfg.relations},
              {"points", cfg.points}};
}

json report_json(const SuiteReport& rep) {
  json cases = json::array();
  for (const auto& c : rep.cases) {
    json j{{"id", c.id}, {"params", c.params}, {"kind", kind_name(c.kind)}, {"pass", c.pass}};
    if (c.kind == CaseKind::Exact) {
      j["exact_zero"] = c.pass;
      j["nonzero_terms"] = static_cast<std::int64_t>(c.residual);
    } else if (c.kind != CaseKind::Info) {
      j["residual"] = std::isfinite(c.residual) ? json(c.residual) : json(nullptr);
      j["tol"] = c.tol;
    }
    if (!c.extra.empty()) j["extra"] = c.extra;
    if (!c.exact_terms.empty()) {
      json terms = json::object();
      for (const auto& [word, poly] : c.exact_terms) {
        json p = json::object();
        for (const auto& [e, coef] : poly) p[std::to_string(e)] = coef;
        terms[word] = p;
      }
      j["difference"] = terms;
    }
    cases.push_back(std::move(j));
  }
  return json{{"suite", rep.suite},
              {"pass", rep.pass()},
              {"failures", rep.failures()},
              {"summary", rep.summary},
              {"cases", cases},
              {"wall_seconds", rep.wall_seconds}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification harness for the deformed W-algebra screening complex", "dws"};
  app.require_subcommand(1, 1);

  SuiteConfig cfg;
  std::string lambda, lattice, relations, out_file;
  std::string suite = "theta";
  bool want_json = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "rank of sl_n")->capture_default_str();
    sub->add_option("--r", cfg.r, "level parameter r >= n + 2")->capture_default_str();
    sub->add_option("--lambda", lambda, "dominant weight in the fundamental basis, e.g. 2,1");
    sub->add_option("--x", cfg.x, "elliptic nome x in [0.2, 0.8]")->capture_default_str();
    sub->add_option("--delta", cfg.delta, "deformation shift of the *-product")->capture_default_str();
    sub->add_option("--trunc", cfg.trunc, "theta product truncation depth")->capture_default_str();
    sub->add_option("--tol", cfg.tol, "relative tolerance")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
    sub->add_option("--window", cfg.window, "bound on |gamma| coordinates")->capture_default_str();
    sub->add_option("--lattice", lattice, "sign periodicity in gamma coordinates, e.g. 1,2");
    sub->add_option("--relations", relations, "comma-separated relation names for the star suite");
    sub->add_option("--out", out_file, "write the JSON report to FILE");
    sub->add_flag("--json", want_json, "print the JSON report to stdout");
  };
  auto* orbit_cmd = app.add_subcommand("orbit", "orbit listing audit");
  auto* signs_cmd = app.add_subcommand("signs", "sign solve and d^2 audit");
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  add_common(orbit_cmd);
  add_common(signs_cmd);
  add_common(verify_cmd);
  verify_cmd->add_option("--suite", suite, "theta, star, zeros, membership, signs-cross, qshuffle or all")
      ->capture_default_str();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitPass;
    }
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  std::vector<std::string> names;
  std::string command;
  try {
    if (!lambda.empty()) {
      cfg.lambda = parse_ints(lambda, "--lambda");
    } else if (cfg.n != 3) {
      cfg.lambda.assign(std::max(cfg.n - 1, 0), 1);
      if (!cfg.lambda.empty()) cfg.lambda[0] = 2;
    }
    if (!lattice.empty()) cfg.lattice = parse_ints(lattice, "--lattice");
    if (!relations.empty()) cfg.relations = parse_names(relations);
    cfg.validate();
    if (orbit_cmd->parsed()) {
      command = "orbit";
      names = {"orbit"};
    } else if (signs_cmd->parsed()) {
      command = "signs";
      names = {"signs"};
    } else {
      command = "verify";
      if (suite == "all") {
        names = suites::suite_names();
      } else {
        const auto& known = suites::suite_names();
        if (std::find(known.begin(), known.end(), suite) == known.end())
          throw std::invalid_argument("unknown suite: " + suite);
        names = {suite};
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  json reports = json::array();
  bool all_pass = true;
  for (const auto& name : names) {
    SuiteReport rep;
    try {
      rep = suites::run_suite(name, cfg);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return kExitConfig;
    }
    summarize(rep, err);
    all_pass &= rep.pass();
    reports.push_back(report_json(rep));
  }
  json doc{{"schema", 1}, {"command", command}, {"config", config_json(cfg)}, {"pass", all_pass}, {"reports", reports}};
  const std::string text = doc.dump(2) + "\n";
  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) {
      err << "error: cannot write " << out_file << "\n";
      return kExitConfig;
    }
    f << text;
  }
  if (want_json) out << text;
  return all_pass ? kExitPass : kExitFailure;
}

}  // namespace dws::cli
