// Copyright 2026 The mompoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <memory>
#include <optional>

#include "mompoly/bijection.hpp"
#include "mompoly/count_cache.hpp"
#include "mompoly/counter.hpp"
#include "mompoly/ehrhart.hpp"
#include "mompoly/polytope.hpp"
#include "mompoly/reference.hpp"
#include "mompoly/verdict.hpp"

namespace mompoly::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string claim;
  std::string group;
  int k = 0;
  int q = 0;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> n_max;
  bool strict = false;
  std::string engine = "dp";
  int extra = 2;
  std::string format;
  std::string cache;
  std::uint64_t budget_nodes = 200'000'000;
  std::uint64_t budget_states = 10'000'000;
  double budget_seconds = 0;
  unsigned workers = 1;
};

void add_family(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--group", c.group, "Group: u or sp")
      ->required()
      ->check(CLI::IsMember({"u", "sp"}));
  cmd->add_option("-k", c.k, "Moment power k")->required()->check(CLI::PositiveNumber);
  cmd->add_option("-q", c.q, "Inner moment q")->required()->check(CLI::PositiveNumber);
}

void add_counting(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--engine", c.engine, "Counting engine")
      ->check(CLI::IsMember({"naive", "dp", "both"}));
  cmd->add_option("--cache", c.cache, "Count cache file (default: $MOMPOLY_CACHE)");
  cmd->add_option("--budget-nodes", c.budget_nodes, "Backtracking node budget")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget-states", c.budget_states, "Transfer state budget")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget-seconds", c.budget_seconds, "Wall-clock budget")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
}

void add_format(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
}

class Session {
 public:
  Session(const RunConfig& c, std::ostream& err) : config_(c), err_(err) {
    if (!c.cache.empty()) {
      cache_ = std::make_unique<CountCache>(c.cache);
      for (const auto& w : cache_->warnings()) err_ << "warning: " << w << "\n";
      reported_ = cache_->warnings().size();
    }
    CountOptions o;
    o.engine = parse_engine(c.engine);
    o.node_budget = c.budget_nodes;
    o.state_budget = c.budget_states;
    o.workers = c.workers;
    if (c.budget_seconds > 0) {
      deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(c.budget_seconds));
      o.deadline = deadline_;
    }
    counter_ = std::make_unique<Counter>(o, cache_.get());
  }

  ~Session() {
    if (!cache_) return;
    const auto& w = cache_->warnings();
    for (std::size_t n = reported_; n < w.size(); ++n) err_ << "warning: " << w[n] << "\n";
  }

  Counter& counter() { return *counter_; }
  EnumerateOptions enumerate_options() const {
    EnumerateOptions e;
    e.node_budget = config_.budget_nodes;
    e.deadline = deadline_;
    return e;
  }

 private:
  const RunConfig& config_;
  std::ostream& err_;
  std::unique_ptr<CountCache> cache_;
  std::unique_ptr<Counter> counter_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::size_t reported_ = 0;
};

FamilySpec family(const RunConfig& c) { return FamilySpec(parse_group(c.group), c.k, c.q); }

void require_json(const RunConfig& c) {
  if (!c.format.empty() && c.format != "json") {
    throw UsageError("'" + c.command + "' only supports --format json");
  }
}

int cmd_count(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.n.has_value() == c.n_max.has_value()) throw UsageError("count needs exactly one of -N or --n-max");
  const auto spec = family(c);
  const auto strictness = c.strict ? Strictness::strict : Strictness::lax;
  Session session(c, err);
  CountTable table = c.n ? session.counter().table(spec, std::vector<std::int64_t>{*c.n}, strictness)
                         : session.counter().series(spec, *c.n_max, strictness);
  const std::string format = c.format.empty() ? "text" : c.format;
  if (format == "json") {
    Json j;
    j["schema"] = "mompoly.counts/1";
    j["group"] = c.group;
    j["k"] = c.k;
    j["q"] = c.q;
    j["strict"] = c.strict;
    j["engine"] = c.engine;
    Json rows = Json::array();
    for (const auto& [n, v] : table.entries()) rows.push_back(Json{{"N", n}, {"count", v.get_str()}});
    j["counts"] = rows;
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "group,k,q,N,strict,count\n";
    for (const auto& [n, v] : table.entries()) {
      out << c.group << ',' << c.k << ',' << c.q << ',' << n << ',' << (c.strict ? "true" : "false")
          << ',' << v.get_str() << "\n";
    }
  } else if (c.n) {
    out << table.at(*c.n).get_str() << "\n";
  } else {
    for (const auto& [n, v] : table.entries()) out << n << ' ' << v.get_str() << "\n";
  }
  return kSuccess;
}

int cmd_fit(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require_json(c);
  if (c.extra < 1) throw UsageError("--extra must be at least 1");
  const auto spec = family(c);
  Session session(c, err);
  const auto report = verify_polynomiality(spec, c.extra, session.counter());
  const auto poly = fit(spec, session.counter());
  Json j = poly_json(spec, poly);
  j["polynomiality"] = report.to_json();
  out << j.dump(2) << "\n";
  return report.pass() ? kSuccess : kVerificationFailed;
}

std::pair<std::int64_t, std::int64_t> range_for(const RunConfig& c, std::int64_t lo,
                                                std::int64_t default_hi) {
  if (c.n) return {*c.n, *c.n};
  return {lo, c.n_max.value_or(default_hi)};
}

std::vector<VerdictReport> run_claim(const std::string& claim, const RunConfig& c,
                                     const FamilySpec& spec, Session& session,
                                     std::optional<RationalPoly>& poly) {
  auto fitted = [&]() -> const RationalPoly& {
    if (!poly) poly = fit(spec, session.counter());
    return *poly;
  };
  std::vector<VerdictReport> out;
  if (claim == "polynomiality") {
    out.push_back(verify_polynomiality(spec, c.extra, session.counter()));
    out.push_back(verify_period_collapse(spec, 2, session.counter()));
  } else if (claim == "roots") {
    out.push_back(verify_integer_roots(spec, fitted()));
  } else if (claim == "symmetry") {
    out.push_back(verify_symmetry(spec, fitted()));
  } else if (claim == "reciprocity") {
    const auto [lo, hi] = range_for(c, 1, spec.dimension() + 2);
    out.push_back(verify_reciprocity(spec, fitted(), lo, hi, session.counter()));
  } else if (claim == "bijection") {
    const auto [lo, hi] = range_for(c, 0, 2);
    for (std::int64_t n = lo; n <= hi; ++n) {
      out.push_back(verify_bijectivity(spec, n, session.enumerate_options()));
    }
  } else if (claim == "vertex") {
    const auto system = build_system(spec);
    if (spec.group() == Group::U) {
      out.push_back(verify_vertex_witness(system, unitary_half_witness(system)));
      if (spec.k() == 2 && dilated_witness_divisor(spec.q()) != 0) {
        out.push_back(verify_vertex_witness(system, unitary_dilated_witness(system)));
      }
    } else {
      out.push_back(verify_vertex_witness(system, symplectic_half_witness(system)));
    }
  }
  return out;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require_json(c);
  if (c.n && c.n_max) throw UsageError("give at most one of -N and --n-max");
  if (c.extra < 1) throw UsageError("--extra must be at least 1");
  const auto spec = family(c);
  if (c.claim == "vertex" && spec.k() == 1) {
    throw UsageError("vertex witnesses exist only for k >= 2");
  }
  std::vector<std::string> claims;
  if (c.claim == "all") {
    claims = {"polynomiality", "roots", "symmetry", "reciprocity", "bijection"};
    if (spec.k() >= 2) claims.push_back("vertex");
  } else {
    claims = {c.claim};
  }
  Session session(c, err);
  std::optional<RationalPoly> poly;
  Json reports = Json::array();
  bool pass = true;
  for (const auto& claim : claims) {
    for (const auto& r : run_claim(claim, c, spec, session, poly)) {
      pass = pass && r.pass();
      reports.push_back(r.to_json());
    }
  }
  Json j;
  j["schema"] = "mompoly.verdicts/1";
  j["claim"] = c.claim;
  j["parameters"] = spec_json(spec);
  j["pass"] = pass;
  j["reports"] = reports;
  out << j.dump(2) << "\n";
  return pass ? kSuccess : kVerificationFailed;
}

int cmd_reference(const RunConfig& c, std::ostream& out) {
  require_json(c);
  const auto spec = family(c);
  const auto g = golden(spec);
  Json j;
  if (g) {
    j = poly_json(spec, g->expand());
    j["available"] = true;
    j["source"] = g->source;
  } else {
    j = spec_json(spec);
    j["available"] = false;
  }
  out << j.dump(2) << "\n";
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::string& cache_env) {
  RunConfig c;
  c.cache = cache_env;
  CLI::App app{"Count and verify moments-of-moments lattice patterns", "mompoly"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "Count patterns");
  add_family(count, c);
  count->add_option("-N", c.n, "Dilation")->check(CLI::NonNegativeNumber);
  count->add_option("--n-max", c.n_max, "Count N = 0..n-max")->check(CLI::NonNegativeNumber);
  count->add_flag("--strict", c.strict, "Count the strict family");
  add_counting(count, c);
  add_format(count, c);

  auto* fitcmd = app.add_subcommand("fit", "Interpolate the counting polynomial");
  add_family(fitcmd, c);
  fitcmd->add_option("--extra", c.extra, "Extra verification nodes");
  add_counting(fitcmd, c);
  add_format(fitcmd, c);

  auto* verify = app.add_subcommand("verify", "Check a structural claim");
  verify->add_option("claim", c.claim, "Claim to check")
      ->required()
      ->check(CLI::IsMember(
          {"roots", "symmetry", "reciprocity", "bijection", "vertex", "polynomiality", "all"}));
  add_family(verify, c);
  verify->add_option("-N", c.n, "Single dilation for reciprocity/bijection")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--n-max", c.n_max, "Upper end of the reciprocity/bijection range")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--extra", c.extra, "Extra polynomiality nodes");
  add_counting(verify, c);
  add_format(verify, c);

  auto* reference = app.add_subcommand("reference", "Print a known closed form");
  add_family(reference, c);
  add_format(reference, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsage;
  }

  try {
    if (*count) {
      c.command = "count";
      return cmd_count(c, out, err);
    }
    if (*fitcmd) {
      c.command = "fit";
      return cmd_fit(c, out, err);
    }
    if (*verify) {
      c.command = "verify";
      return cmd_verify(c, out, err);
    }
    c.command = "reference";
    return cmd_reference(c, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const EngineMismatch& e) {
    err << "engine mismatch: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

}  // namespace mompoly::cli
