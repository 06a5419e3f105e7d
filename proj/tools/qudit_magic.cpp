// Command-line front end: tables, verification reports and figure data, each
// output carrying its run manifest.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qudit_magic/analysis.hpp"
#include "qudit_magic/injection.hpp"
#include "qudit_magic/oracle.hpp"
#include "qudit_magic/report.hpp"

namespace qm = qudit_magic;
using json = nlohmann::ordered_json;
using qm::Real;

namespace {

struct Options {
  int d = 0;
  int m = 0;
  std::optional<double> eps;
  std::optional<double> eps_target;
  std::optional<int> grid;
  double tol = 1e-12;
  std::string out;
  std::string format = "csv";
};

struct Table {
  qm::CsvRow header;
  std::vector<qm::CsvRow> rows;
};

// Result of one subcommand: JSON payload, optional tabular CSV form, and
// whether every check passed.
struct Emission {
  json results;
  std::optional<Table> table;
  bool ok = true;
};

// Rounds to the 9 significant digits used in every artifact.
json num(long double x) {
  if (!std::isfinite(static_cast<double>(x))) return qm::format_real(x);
  return std::strtod(qm::format_real(x).c_str(), nullptr);
}

std::string cell(long double x) { return qm::format_real(x); }

void flatten(const json& j, const std::string& prefix, std::vector<qm::CsvRow>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), rows);
  } else if (j.is_string()) {
    rows.push_back({prefix, j.get<std::string>()});
  } else {
    rows.push_back({prefix, j.dump()});
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  f << text;
}

std::string render(const qm::RunManifest& manifest, const Emission& e, const std::string& format) {
  if (format == "json") return qm::to_json_report(manifest, e.results);
  if (e.table) return qm::to_csv(manifest, e.table->header, e.table->rows);
  Table t{{"key", "value"}, {}};
  flatten(e.results, "", t.rows);
  return qm::to_csv(manifest, t.header, t.rows);
}

void require_dm(const Options& o) {
  if (o.d < 2 || o.m < 1) throw std::invalid_argument("--d >= 2 and --m >= 1 are required");
}

// Canonical level for single-qudit injection: qutrits need m = 2.
int default_level(int d) { return d == 3 ? 2 : 1; }

Emission cmd_tables(const Options& o) {
  const auto thresholds = qm::threshold_table(static_cast<Real>(o.tol));
  const auto gammas = qm::gamma_star_table();
  Emission e;
  Table t{{"d", "m", "eps_star", "gamma_star"}, {}};
  json cells = json::array();
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    const auto& th = thresholds[i];
    const auto& g = gammas[i];
    t.rows.push_back({std::to_string(th.d), std::to_string(th.m), th.value ? cell(*th.value) : "N/A",
                      g.value ? cell(*g.value) : "N/A"});
    cells.push_back({{"d", th.d},
                     {"m", th.m},
                     {"eps_star", th.value ? num(*th.value) : json("N/A")},
                     {"gamma_star", g.value ? num(*g.value) : json("N/A")}});
  }
  e.results["cells"] = cells;
  e.table = t;
  return e;
}

Emission cmd_verify(const Options& o) {
  require_dm(o);
  Emission e;
  json& r = e.results;
  r["d"] = o.d;
  r["m"] = o.m;
  const qm::QrmCode code = qm::build_qrm(o.d, o.m);
  r["code"] = {{"n", code.n}, {"dim_lx", code.lx.dimension()}, {"dim_lz", code.lz.dimension()}};
  const qm::CssReport css = qm::validate_css(code);
  r["css"] = {{"stabilizers_commute", css.stabilizers_commute},
              {"x_logical_commutes", css.x_logical_commutes},
              {"z_logical_commutes", css.z_logical_commutes},
              {"logical_phase", css.logical_phase},
              {"lz_is_dual_of_lx_prime", css.lz_is_dual_of_lx_prime},
              {"lz_dual_is_lx_prime", css.lz_dual_is_lx_prime},
              {"lx_is_dual_of_lz_prime", css.lx_is_dual_of_lz_prime},
              {"lx_dual_is_lz_prime", css.lx_dual_is_lz_prime},
              {"passed", css.all_passed()}};
  e.ok = css.all_passed();
  const qm::CodeDistance dist = qm::code_distance(code);
  r["distance"] = {{"max_weight", dist.max_weight},
                   {"dx", dist.dx ? json(*dist.dx) : json(nullptr)},
                   {"dz", dist.dz ? json(*dist.dz) : json(nullptr)}};

  std::optional<qm::MagicGate> gate;
  try {
    gate = qm::canonical_gate(o.d, o.m);
  } catch (const qm::EmptyGateSet& ex) {
    r["gate"] = {{"exists", false}, {"reason", ex.what()}};
    e.ok = false;
    return e;
  }
  const qm::MembershipReport mem = qm::verify_membership(*gate);
  r["gate"] = {{"exists", true},
               {"lambda", gate->lambda()},
               {"member", mem.member},
               {"is_second_level", mem.is_second_level},
               {"is_clifford", mem.is_clifford}};
  e.ok = e.ok && mem.member;

  const qm::LemmaCheck classical = qm::verify_transversality_classical(code, *gate);
  r["transversality_classical"] = {{"passed", classical.passed}, {"vectors_checked", classical.vectors_checked}};
  e.ok = e.ok && classical.passed;

  // Dense checks only where the state vector stays small.
  const long long dim = qm::state_dimension(o.d, code.n);
  if (dim <= 100000) {
    double worst = 0;
    const qm::GFVector ones = qm::GFVector::constant(code.n, 1, o.d);
    for (int j = 0; j < o.d; ++j) {
      const qm::StateVector s = qm::logical_basis_state(code, j);
      const qm::StateVector ms = qm::apply_transversal_diagonal(s, *gate, ones);
      worst = std::max(worst, (ms.amplitudes - std::polar(1.0, -gate->phase(j)) * s.amplitudes).norm());
    }
    const bool passed = worst < 1e-10;
    r["transversality_quantum"] = {{"max_deviation", num(worst)}, {"passed", passed}};
    e.ok = e.ok && passed;
  } else {
    r["transversality_quantum"] = {{"skipped", "state dimension " + std::to_string(dim)}};
  }
  if (dim <= 1000) {
    const qm::RoundOracle oracle(code, *gate);
    const qm::IterationTable table(code);
    std::mt19937 rng(12345);
    std::gamma_distribution<double> g(1.0);
    double worst = 0;
    const int samples = 20;
    for (int trial = 0; trial < samples; ++trial) {
      qm::NoiseVector<double> n;
      n.f.resize(o.d);
      for (int k = 0; k < o.d; ++k) n.f[k] = g(rng);
      n.f /= n.f.sum();
      qm::NoiseVector<Real> nr;
      nr.f = n.f.cast<Real>();
      const auto sim = oracle.evaluate(n, true);
      const auto ref = qm::iterate_general(table, nr);
      worst = std::max(worst, std::abs(sim.success_probability - static_cast<double>(ref.success_probability)));
      for (int k = 0; k < o.d; ++k) {
        worst = std::max(worst, std::abs(sim.output.f[k] - static_cast<double>(ref.output.f[k])));
      }
    }
    const bool passed = worst < 1e-9;
    r["oracle_agreement"] = {{"samples", samples}, {"max_deviation", num(worst)}, {"passed", passed}};
    e.ok = e.ok && passed;
  } else {
    r["oracle_agreement"] = {{"skipped", "state dimension " + std::to_string(dim)}};
  }
  r["passed"] = e.ok;
  return e;
}

Emission cmd_iterate(const Options& o) {
  require_dm(o);
  const qm::DepolarizingMap<Real> map(o.d, o.m);
  std::vector<Real> points;
  if (o.eps) {
    points.push_back(static_cast<Real>(*o.eps));
  } else {
    // Figure data: the eps' curve over [0, (d-1)/d).
    const int g = o.grid.value_or(100);
    const Real top = Real(o.d - 1) / o.d;
    for (int i = 0; i < g; ++i) points.push_back(top * i / g);
  }
  Emission e;
  Table t{{"eps", "eps_out", "P"}, {}};
  json rows = json::array();
  for (Real x : points) {
    const auto r = map(x);
    t.rows.push_back({cell(x), cell(r.epsilon_out), cell(r.success_probability)});
    rows.push_back({{"epsilon_in", num(x)}, {"epsilon_out", num(r.epsilon_out)},
                    {"success_probability", num(r.success_probability)}});
  }
  if (rows.size() == 1) {
    e.results = rows[0];
  } else {
    e.results["curve"] = rows;
  }
  e.table = t;
  return e;
}

Emission cmd_threshold(const Options& o) {
  Emission e;
  Table t{{"d", "m", "eps_star"}, {}};
  json cells = json::array();
  std::vector<std::pair<int, int>> targets;
  if (o.d) {
    require_dm(o);
    targets.push_back({o.d, o.m});
  } else {
    for (int d : qm::kTableDimensions)
      for (int m = 1; m <= qm::kTableMaxLevel; ++m)
        if (qm::protocol_applicable(d, m)) targets.push_back({d, m});
  }
  for (auto [d, m] : targets) {
    const auto r = qm::threshold_depolarizing(d, m, static_cast<Real>(o.tol));
    t.rows.push_back({std::to_string(d), std::to_string(m), cell(r.epsilon_star)});
    cells.push_back({{"d", d}, {"m", m}, {"epsilon_star", num(r.epsilon_star)},
                     {"bracket", {num(r.bracket_lo), num(r.bracket_hi)}}});
  }
  if (cells.size() == 1) {
    e.results = cells[0];
  } else {
    e.results["cells"] = cells;
  }
  e.table = t;
  return e;
}

Emission cmd_worst_case(const Options& o) {
  require_dm(o);
  const qm::IterationTable table(qm::build_qrm(o.d, o.m));
  const qm::SearchOptions search{o.grid.value_or(40), static_cast<Real>(o.tol)};
  const auto th = qm::threshold_worst_case(table, search);
  const auto k = qm::quadratic_bound_constant(table, search);
  const auto floor = qm::success_probability_floor(table, search);
  Emission e;
  json dir = json::array();
  for (Real x : th.direction) dir.push_back(num(x));
  e.results = {{"d", o.d},
               {"m", o.m},
               {"epsilon_star", num(th.epsilon_star)},
               {"direction", dir},
               {"quadratic_bound_constant", num(k.k)},
               {"success_probability_floor", num(floor.probability)}};
  e.table = Table{{"d", "m", "eps_star", "K", "P_floor"},
                  {{std::to_string(o.d), std::to_string(o.m), cell(th.epsilon_star), cell(k.k),
                    cell(floor.probability)}}};
  return e;
}

Emission cmd_yield(const Options& o) {
  require_dm(o);
  const qm::IterationTable table(qm::build_qrm(o.d, o.m));
  std::vector<Real> inputs;
  std::vector<Real> targets;
  if (o.eps) {
    inputs.push_back(static_cast<Real>(*o.eps));
  } else {
    for (int i = 1; i <= 14; ++i) inputs.push_back(i / 100.0L);
  }
  if (o.eps_target) {
    targets.push_back(static_cast<Real>(*o.eps_target));
  } else {
    targets = {1e-12L, 1e-9L, 1e-6L, 1e-4L};
  }
  Emission e;
  Table t{{"eps_in", "eps_target", "N", "Y"}, {}};
  json rows = json::array();
  for (Real x : inputs) {
    for (Real target : targets) {
      const auto r = qm::yield(table, qm::depolarizing_noise<Real>(o.d, x), target);
      t.rows.push_back({cell(x), cell(target), std::to_string(r.rounds), cell(r.yield)});
      rows.push_back({{"epsilon_in", num(x)},
                      {"epsilon_target", num(target)},
                      {"rounds", r.rounds},
                      {"yield", num(r.yield)},
                      {"final_epsilon", num(r.final_epsilon)}});
    }
  }
  e.results["points"] = rows;
  e.table = t;
  return e;
}

Emission cmd_region(const Options& o) {
  const int d = o.d ? o.d : 3;
  const int m = o.m ? o.m : 2;
  const qm::IterationTable table(qm::build_qrm(d, m));
  const auto pts = qm::distillable_region_qutrit(table, o.grid.value_or(40), 200);
  Emission e;
  Table t{{"f1", "f2", "distillable"}, {}};
  json rows = json::array();
  for (const auto& p : pts) {
    t.rows.push_back({cell(p.f1), cell(p.f2), p.distillable ? "1" : "0"});
    rows.push_back({{"f1", num(p.f1)}, {"f2", num(p.f2)}, {"distillable", p.distillable}});
  }
  e.results["points"] = rows;
  e.table = t;
  return e;
}

Emission cmd_inject(const Options& o) {
  if (o.d < 3) throw std::invalid_argument("--d must be an odd prime");
  if (!o.eps) throw std::invalid_argument("--eps is required");
  const int m = o.m ? o.m : default_level(o.d);
  const double eps = *o.eps;
  const qm::MagicGate gate = qm::canonical_gate(o.d, m);
  const qm::CMatrix mm = qm::gate_matrix(gate);
  qm::CMatrix sigma = qm::CMatrix::Zero(o.d, o.d);
  for (int k = 0; k < o.d; ++k) {
    const qm::CVector mk = qm::magic_state(gate, k);
    sigma += (k == 0 ? 1 - eps : eps / (o.d - 1)) * mk * mk.adjoint();
  }
  // Fixed target set: |0>, |+_0> and a seeded random pure state.
  std::vector<qm::CVector> targets{qm::CVector::Unit(o.d, 0), qm::plus_state(o.d, 0)};
  std::mt19937 rng(20240101);
  std::normal_distribution<double> g;
  qm::CVector psi(o.d);
  for (int i = 0; i < o.d; ++i) psi[i] = qm::Complex(g(rng), g(rng));
  targets.push_back(psi.normalized());
  double worst = 0;
  std::vector<double> branches;
  for (const auto& t : targets) {
    const qm::CMatrix rho = t * t.adjoint();
    const auto r = qm::inject(gate, sigma, rho);
    worst = std::max(worst, qm::trace_norm(r.output - mm * rho * mm.adjoint()));
    if (branches.empty()) branches = r.branch_probability;
  }
  Emission e;
  json probs = json::array();
  for (double p : branches) probs.push_back(num(p));
  const bool within = worst <= 2 * eps + 1e-10;
  e.results = {{"d", o.d},
               {"m", m},
               {"epsilon", num(eps)},
               {"bound", num(2 * eps)},
               {"trace_norm_deviation", num(worst)},
               {"within_bound", within},
               {"branch_probability", probs}};
  e.ok = within;
  return e;
}

Emission cmd_gate(const Options& o) {
  require_dm(o);
  Emission e;
  try {
    const qm::MagicGate gate = qm::canonical_gate(o.d, o.m);
    const qm::MembershipReport r = qm::verify_membership(gate);
    e.results = {{"gate", qm::serialize(gate)},
                 {"lambda", gate.lambda()},
                 {"period", gate.period()},
                 {"lambda_sum", r.lambda_sum},
                 {"recurrence_constant", r.recurrence_constant ? json(*r.recurrence_constant) : json(nullptr)},
                 {"is_second_level", r.is_second_level},
                 {"is_clifford", r.is_clifford},
                 {"member", r.member}};
    e.ok = r.member;
  } catch (const qm::EmptyGateSet& ex) {
    e.results = {{"d", o.d}, {"m", o.m}, {"exists", false}, {"reason", ex.what()}};
    e.ok = false;
  }
  return e;
}

Emission cmd_code(const Options& o) {
  require_dm(o);
  const qm::QrmCode code = qm::build_qrm(o.d, o.m);
  const qm::CssReport css = qm::validate_css(code);
  const qm::CodeDistance dist = qm::code_distance(code);
  Emission e;
  e.results = {{"d", o.d},
               {"m", o.m},
               {"n", code.n},
               {"dim_lx", code.lx.dimension()},
               {"dim_lz", code.lz.dimension()},
               {"css_valid", css.all_passed()},
               {"dx", dist.dx ? json(*dist.dx) : json(nullptr)},
               {"dz", dist.dz ? json(*dist.dz) : json(nullptr)},
               {"serialized", qm::serialize(code)}};
  e.ok = css.all_passed();
  return e;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qudit Reed-Muller magic state distillation toolkit"};
  app.require_subcommand(1);
  Options opt;

  using Handler = Emission (*)(const Options&);
  const std::vector<std::tuple<std::string, std::string, Handler>> commands{
      {"tables", "Threshold and yield-exponent tables", cmd_tables},
      {"verify", "Code, gate and transversality checks", cmd_verify},
      {"iterate", "One depolarizing round, or the eps' curve", cmd_iterate},
      {"threshold", "Depolarizing threshold", cmd_threshold},
      {"worst-case", "Worst-case threshold, quadratic bound and success floor", cmd_worst_case},
      {"yield", "Rounds and yield to reach a target error", cmd_yield},
      {"region", "Qutrit distillable region", cmd_region},
      {"inject", "Noisy magic-state injection", cmd_inject},
      {"gate", "Canonical gate and membership report", cmd_gate},
      {"code", "Quantum Reed-Muller code summary", cmd_code},
  };
  std::vector<std::pair<CLI::App*, Handler>> subs;
  for (const auto& [name, help, handler] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--d", opt.d, "Qudit dimension");
    sub->add_option("--m", opt.m, "Clifford hierarchy parameter");
    sub->add_option("--eps", opt.eps, "Input error");
    sub->add_option("--eps-target", opt.eps_target, "Target error");
    sub->add_option("--grid", opt.grid, "Grid resolution");
    sub->add_option("--tol", opt.tol, "Root-finding tolerance");
    sub->add_option("--out", opt.out, "Output file (default stdout)");
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    subs.push_back({sub, handler});
  }
  CLI11_PARSE(app, argc, argv);

  for (const auto& [sub, handler] : subs) {
    if (!sub->parsed()) continue;
    qm::RunManifest manifest;
    manifest.command = sub->get_name();
    if (opt.d) manifest.parameters["d"] = opt.d;
    if (opt.m) manifest.parameters["m"] = opt.m;
    if (opt.eps) manifest.parameters["eps"] = *opt.eps;
    if (opt.eps_target) manifest.parameters["eps_target"] = *opt.eps_target;
    manifest.tolerances["tol"] = opt.tol;
    if (opt.grid) manifest.grids["grid"] = *opt.grid;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Emission e = handler(opt);
      manifest.wall_clock_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      write_output(opt.out, render(manifest, e, opt.format));
      return e.ok ? 0 : 1;
    } catch (const std::exception& ex) {
      std::cerr << "error: " << ex.what() << '\n';
      return 2;
    }
  }
  return 2;
}
