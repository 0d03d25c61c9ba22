#include "walks/cli.hpp"

#include "walks/asymptotics.hpp"
#include "walks/diagonal.hpp"
#include "walks/enumerate.hpp"
#include "walks/holonomic.hpp"
#include "walks/report.hpp"
#include "walks/stepset.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <ostream>

namespace walks {

namespace {

using nlohmann::json;

struct Options {
  std::string steps;
  std::string format = "text";
  std::string kind = "walks";
  std::string exec = "auto";
  int n = -1;
  int terms = 1;
  int digits = 12;
  bool emit_rational = false;
  bool inject_fault = false;
  bool endpoints = false;
  bool excursions = false;
  std::string ode_path;
  std::string recurrence_path;
};

constexpr int max_endpoint_length = 30;

class ExecGuard {
 public:
  explicit ExecGuard(const std::string& mode) : saved_(default_exec()) {
    if (mode == "serial") set_default_exec(Exec::serial);
    if (mode == "parallel") set_default_exec(Exec::parallel);
  }
  ~ExecGuard() { set_default_exec(saved_); }
  ExecGuard(const ExecGuard&) = delete;
  ExecGuard& operator=(const ExecGuard&) = delete;

 private:
  Exec saved_;
};

DpOptions dp_options(bool keep_layers) {
  DpOptions o;
  o.keep_layers = keep_layers;
  if (const char* env = std::getenv("WALKS_DP_CELL_BUDGET"); env && *env) {
    const std::string text(env);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || v == 0)
      throw std::invalid_argument("WALKS_DP_CELL_BUDGET must be a positive integer, got '" + text + "'");
    o.cell_budget = v;
  }
  return o;
}

bool as_json(const Options& o) { return o.format == "json"; }

int cmd_asymptotics(const Options& o, std::ostream& out) {
  const StepSet s = parse_stepset(o.steps);
  const SeriesKind kind = parse_series_kind(o.kind);
  const AsymptoticExpansion e = asymptotics(s, o.terms, kind);
  ReportInput in;
  in.model = o.steps;
  in.steps = &s;
  (kind == SeriesKind::walks ? in.walks : in.excursions) = &e;
  in.emit_rational = o.emit_rational;
  in.digits = o.digits;
  if (as_json(o))
    out << report_json(in).dump(2) << "\n";
  else
    out << report_text(in);
  return exit_ok;
}

int cmd_count(const Options& o, std::ostream& out) {
  const StepSet s = parse_stepset(o.steps);
  const int N = o.n < 0 ? 10 : o.n;
  if (o.endpoints && N > max_endpoint_length)
    throw std::invalid_argument("--endpoints needs --n <= " + std::to_string(max_endpoint_length));
  const CountTable table = count_walks(s, N, dp_options(o.endpoints));

  if (as_json(o)) {
    json doc{{"model", o.steps}, {"N", N}};
    json rows = json::array();
    for (int n = 0; n <= N; ++n) {
      json row{{"n", n}, {"s", table.totals()[n].get_str()}};
      if (o.excursions) row["e"] = table.excursions()[n].get_str();
      rows.push_back(row);
    }
    doc["rows"] = rows;
    if (o.endpoints) {
      json layers = json::array();
      for (int n = 0; n <= N; ++n) {
        json counts = json::array();
        const LaurentPoly layer = table.endpoint_series(n);
        for (const auto& [e, c] : layer.terms()) counts.push_back({{"point", e}, {"count", c.get_num().get_str()}});
        layers.push_back({{"n", n}, {"counts", counts}});
      }
      doc["endpoints"] = layers;
    }
    out << doc.dump(2) << "\n";
    return exit_ok;
  }

  out << (o.excursions ? "n,s_n,e_n\n" : "n,s_n\n");
  for (int n = 0; n <= N; ++n) {
    out << n << "," << table.totals()[n].get_str();
    if (o.excursions) out << "," << table.excursions()[n].get_str();
    out << "\n";
  }
  if (o.endpoints) {
    out << "\nn";
    for (int k = 1; k <= s.dimension(); ++k) out << ",x" << k;
    out << ",count\n";
    for (int n = 0; n <= N; ++n) {
      const LaurentPoly layer = table.endpoint_series(n);
      for (const auto& [e, c] : layer.terms()) {
        out << n;
        for (int v : e) out << "," << v;
        out << "," << c.get_num().get_str() << "\n";
      }
    }
  }
  return exit_ok;
}

struct CheckLine {
  std::string name;
  bool ok;
  std::string detail;
};

int cmd_verify(const Options& o, std::ostream& out) {
  const StepSet s = parse_stepset(o.steps);
  const int d = s.dimension();
  const int N = o.n < 0 ? 8 : o.n;
  const CountTable table = count_walks(s, N, dp_options(true));
  std::vector<BigInt> walks_dp = table.totals();
  const std::vector<BigInt>& excursions_dp = table.excursions();
  SeriesTable F = endpoint_table(table);
  if (o.inject_fault) {
    walks_dp[N] += 1;
    F.coeffs[N].add_term(Exponents(d, 0), Rational(1));
  }

  std::vector<CheckLine> checks;
  auto record = [&](const std::string& name, const CheckResult& r) {
    checks.push_back({name, r.ok, r.first ? r.first->describe() : ""});
  };
  const auto walk_spec = build_walk_rational(s);
  const auto excursion_spec = build_excursion_rational(s);
  const bool smooth = smoothness_identity_holds(walk_spec) && smoothness_identity_holds(excursion_spec);
  checks.push_back({"smooth singular variety", smooth, smooth ? "" : "gradient identity fails"});
  record("walks: counts vs diagonal", compare_sequences(walks_dp, diagonal_coeffs(walk_spec, N), d));
  record("excursions: counts vs diagonal", compare_sequences(excursions_dp, diagonal_coeffs(excursion_spec, N), d));
  record("orbit-sum identity", verify_orbit_sum_identity(s, F, N));
  record("positive part to diagonal", verify_pospart_to_diagonal(s, N));

  bool ok = true;
  for (const auto& c : checks) ok = ok && c.ok;
  if (as_json(o)) {
    json list = json::array();
    for (const auto& c : checks) list.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    out << json{{"model", o.steps}, {"N", N}, {"ok", ok}, {"checks", list}}.dump(2) << "\n";
  } else {
    out << "model: " << o.steps << "  N = " << N << "\n";
    for (const auto& c : checks) {
      out << (c.ok ? "PASS  " : "FAIL  ") << c.name;
      if (!c.detail.empty()) out << "  (" << c.detail << ")";
      out << "\n";
    }
    out << (ok ? "all checks passed\n" : "verification failed\n");
  }
  return ok ? exit_ok : exit_verification_failed;
}

std::vector<BigInt> sequence_for(const Options& o, const StepSet& s, int N) {
  const CountTable table = count_walks(s, N, dp_options(false));
  return parse_series_kind(o.kind) == SeriesKind::walks ? table.totals() : table.excursions();
}

int report_holonomic(const Options& o, std::ostream& out, const char* what, const std::string& model, int N,
                     const HolonomicCheck& c, const char* index_name) {
  if (as_json(o)) {
    json doc{{"check", what}, {"model", model},         {"kind", o.kind},
             {"N", N},        {"ok", c.ok},             {"checked_through", c.checked_through},
             {"first_failure", nullptr}, {"residual", c.residual.get_str()}};
    if (c.first_failure) doc["first_failure"] = *c.first_failure;
    out << doc.dump(2) << "\n";
  } else {
    out << what << ": " << model << " (" << o.kind << ", N = " << N << ")\n";
    if (c.ok)
      out << "residual 0 for " << index_name << " = 0.." << c.checked_through << "\n";
    else
      out << "nonzero residual " << c.residual.get_str() << " at " << index_name << " = " << *c.first_failure << "\n";
  }
  return c.ok ? exit_ok : exit_verification_failed;
}

int cmd_ode_check(const Options& o, std::ostream& out) {
  const OdeSpec ode = load_ode(o.ode_path);
  const std::string model = o.steps.empty() ? ode.model : o.steps;
  const StepSet s = parse_stepset(model);
  const int N = o.n < 0 ? 50 : o.n;
  const HolonomicCheck c = check_ode(ode, sequence_for(o, s, N));
  return report_holonomic(o, out, "ode-check", model, N, c, "order");
}

int cmd_recurrence_check(const Options& o, std::ostream& out) {
  const RecurrenceSpec rec = load_recurrence(o.recurrence_path);
  const std::string model = o.steps.empty() ? rec.model : o.steps;
  const StepSet s = parse_stepset(model);
  const int N = o.n < 0 ? 60 : o.n;
  const HolonomicCheck c = check_recurrence(rec, sequence_for(o, s, N));
  return report_holonomic(o, out, "recurrence-check", model, N, c, "n");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice walks in highly symmetric step sets", "walks"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c, bool steps_required) {
    auto* steps = c->add_option("--steps", o.steps, "step set: compass tokens (N,S,E,W,...) or tuples (1,0; -1,0; ...)");
    if (steps_required) steps->required();
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    c->add_option("--exec", o.exec, "kernel execution policy")->check(CLI::IsMember({"auto", "serial", "parallel"}));
  };
  auto kind = [&](CLI::App* c) {
    c->add_option("--kind", o.kind, "walks or excursions")->check(CLI::IsMember({"walks", "excursions"}));
  };
  auto length = [&](CLI::App* c, const char* help) {
    c->add_option("--n", o.n, help)->check(CLI::NonNegativeNumber);
  };

  CLI::App* asym = app.add_subcommand("asymptotics", "exact asymptotic expansion");
  common(asym, true);
  kind(asym);
  asym->add_option("--terms", o.terms, "number of terms")->check(CLI::Range(1, 12));
  asym->add_option("--digits", o.digits, "significant digits in decimal renderings")->check(CLI::Range(1, 90));
  asym->add_flag("--emit-rational", o.emit_rational, "print the rational functions whose diagonals are counted");

  CLI::App* count = app.add_subcommand("count", "exact counts by dynamic programming");
  common(count, true);
  length(count, "maximum length (default 10)");
  count->add_flag("--excursions", o.excursions, "include excursion counts");
  count->add_flag("--endpoints", o.endpoints, "dump counts by endpoint");

  CLI::App* verify = app.add_subcommand("verify", "cross-check counts, diagonals and the orbit sum");
  common(verify, true);
  length(verify, "maximum length (default 8)");
  verify->add_flag("--inject-fault", o.inject_fault, "perturb one count to exercise the failure path");

  CLI::App* ode = app.add_subcommand("ode-check", "check an annihilating differential operator");
  common(ode, false);
  kind(ode);
  length(ode, "series order (default 50)");
  ode->add_option("--ode", o.ode_path, "operator JSON file")->required();

  CLI::App* rec = app.add_subcommand("recurrence-check", "check a linear recurrence");
  common(rec, false);
  kind(rec);
  length(rec, "sequence length (default 60)");
  rec->add_option("--recurrence", o.recurrence_path, "recurrence JSON file")->required();

  std::vector<const char*> argv{"walks"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    ExecGuard guard(o.exec);
    if (asym->parsed()) return cmd_asymptotics(o, out);
    if (count->parsed()) return cmd_count(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (ode->parsed()) return cmd_ode_check(o, out);
    return cmd_recurrence_check(o, out);
  } catch (const ValidationError& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_usage;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return exit_resource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_verification_failed;
  }
}

}  // namespace walks
