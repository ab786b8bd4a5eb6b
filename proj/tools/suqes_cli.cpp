// Command-line front end: feasibility windows, potential matching, energy
// levels from the algebraic sector, the deformed spectrum or the numerical
// solver, the n=9 comparison table and the b<0 failure demonstration.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "report.hpp"
#include "suqes/oracle.hpp"
#include "suqes/reference.hpp"

namespace {

using namespace suqes;
using cli::format_number;
using cli::ordered_json;
using cli::ReportEnvelope;
using cli::round_sig;

struct Config {
  double oracle_step = 1e-3;
  double oracle_margin = 5.0;
};

Config load_config() {
  Config cfg;
  const char* path = std::getenv("SUQES_CONFIG");
  if (!path || !*path) return cfg;
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config file not found: " + std::string(path));
  const auto j = ordered_json::parse(in);
  cfg.oracle_step = j.value("oracle_step", cfg.oracle_step);
  cfg.oracle_margin = j.value("oracle_margin", cfg.oracle_margin);
  return cfg;
}

SignB parse_sign(const std::string& s) {
  if (s == "pos") return SignB::Positive;
  if (s == "neg") return SignB::Negative;
  throw CLI::ValidationError("--sign-b must be 'pos' or 'neg'");
}

void emit(const ReportEnvelope& rep, const std::string& format) {
  if (format == "csv") {
    std::cout << rep.to_csv();
  } else {
    std::cout << rep.to_json();
  }
}

ReportEnvelope run_window(const std::string& sign_str) {
  const Window w = feasible_window(parse_sign(sign_str));
  ReportEnvelope rep;
  rep.command = "window";
  rep.inputs["sign_b"] = sign_str;
  rep.outputs["lower"] = round_sig(w.lo);
  rep.outputs["upper"] = round_sig(w.hi);
  rep.provenance["lower"] = "theta endpoint solving cos^2(theta) = 6/23";
  rep.provenance["upper"] = "theta endpoint solving cos^2(theta) = 1/3";
  rep.csv_header = "sign_b,lower,upper";
  rep.csv_rows = {{sign_str, format_number(w.lo), format_number(w.hi)}};
  return rep;
}

ReportEnvelope run_match(int n, int r, int N, const std::string& sign_str) {
  const MatchSolution sol = match(n, r, N, parse_sign(sign_str));
  ReportEnvelope rep;
  rep.command = "match";
  rep.inputs["n"] = n;
  rep.inputs["r"] = r;
  rep.inputs["N"] = N;
  rep.inputs["sign_b"] = sign_str;
  rep.outputs["tau"] = round_sig(sol.tau);
  rep.outputs["A"] = round_sig(sol.A);
  rep.outputs["b"] = round_sig(sol.spec.b);
  rep.outputs["E0prime"] = round_sig(sol.E0prime);
  rep.outputs["theta"] = round_sig(sol.theta);
  rep.outputs["potential"] = {{"c2", round_sig(sol.potential.c2)},
                              {"c4", round_sig(sol.potential.c4)},
                              {"c6", round_sig(sol.potential.c6)}};
  rep.outputs["potential_factored"] = {
      {"prefactor", round_sig(sol.potential.c2)},
      {"x4_ratio", round_sig(sol.potential.c4 / sol.potential.c2)},
      {"x6_ratio", round_sig(sol.potential.c6 / sol.potential.c2)}};
  rep.outputs["residuals"] = {{"x2", round_sig(sol.residuals[0])},
                              {"x4", round_sig(sol.residuals[1])},
                              {"x6", round_sig(sol.residuals[2])}};
  rep.provenance["tau"] = "bisection root of the quartic/quadratic shape constraint";
  rep.provenance["A"] = "amplitude fixed by the sextic coefficient";
  rep.provenance["b"] = "shape parameter fixed by the quartic coefficient";
  rep.provenance["E0prime"] = "offset placing the potential minimum at zero";
  rep.csv_header =
      "n,r,N,sign_b,tau,A,b,E0prime,theta,c2,c4,c6,x4_ratio,x6_ratio,res_x2,"
      "res_x4,res_x6";
  rep.csv_rows = {{std::to_string(n), std::to_string(r), std::to_string(N),
                   sign_str, format_number(sol.tau), format_number(sol.A),
                   format_number(sol.spec.b), format_number(sol.E0prime),
                   format_number(sol.theta), format_number(sol.potential.c2),
                   format_number(sol.potential.c4),
                   format_number(sol.potential.c6),
                   format_number(sol.potential.c4 / sol.potential.c2),
                   format_number(sol.potential.c6 / sol.potential.c2),
                   format_number(sol.residuals[0]),
                   format_number(sol.residuals[1]),
                   format_number(sol.residuals[2])}};
  return rep;
}

std::vector<int> parse_indices(const std::string& csv) {
  std::vector<int> out;
  std::string token;
  for (char c : csv + ",") {
    if (c == ',') {
      if (!token.empty()) out.push_back(std::stoi(token));
      token.clear();
    } else {
      token += c;
    }
  }
  if (out.empty()) throw CLI::ValidationError("--indices must be nonempty");
  return out;
}

const char* parity_name(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    default: return "unclassified";
  }
}

ReportEnvelope run_levels(const CLI::App& cmd, const Config& cfg) {
  const std::string source = cmd.get_option("--source")->as<std::string>();
  ReportEnvelope rep;
  rep.command = "levels";
  rep.inputs["source"] = source;
  rep.csv_header = "index,energy";

  if (source == "qes") {
    QesPotentialSpec spec;
    spec.n = cmd.get_option("--n")->as<int>();
    spec.b = cmd.get_option("--b")->as<double>();
    spec.r = cmd.get_option("--r")->as<int>();
    spec.a = cmd.get_option("--a")->as<double>();
    rep.inputs["n"] = spec.n;
    rep.inputs["r"] = spec.r;
    rep.inputs["a"] = round_sig(spec.a);
    rep.inputs["b"] = round_sig(spec.b);
    const auto levels = qes_levels(spec);
    auto arr = ordered_json::array();
    for (size_t j = 0; j < levels.size(); ++j) {
      arr.push_back(round_sig(levels[j]));
      rep.csv_rows.push_back(
          {std::to_string(2 * j + spec.r), format_number(levels[j])});
    }
    rep.outputs["energies"] = arr;
    rep.provenance["energies"] =
        "eigenvalues of the algebraic sector of the sextic potential";
    return rep;
  }

  if (source == "suq") {
    SuqSpectrumParams p;
    p.A = cmd.get_option("--A")->as<double>();
    p.tau = cmd.get_option("--tau")->as<double>();
    p.N = cmd.get_option("--N")->as<int>();
    p.E0prime = cmd.get_option("--E0")->as<double>();
    const auto indices =
        parse_indices(cmd.get_option("--indices")->as<std::string>());
    rep.inputs["A"] = round_sig(p.A);
    rep.inputs["tau"] = round_sig(p.tau);
    rep.inputs["N"] = p.N;
    rep.inputs["E0prime"] = round_sig(p.E0prime);
    auto arr = ordered_json::array();
    for (int idx : indices) {
      const double e = suq11_level(idx, p);
      arr.push_back(round_sig(e));
      rep.csv_rows.push_back({std::to_string(idx), format_number(e)});
    }
    rep.outputs["energies"] = arr;
    rep.provenance["energies"] = "deformed anharmonic-oscillator spectrum";
    return rep;
  }

  if (source == "oracle") {
    PotentialPolynomial poly;
    poly.vmin = cmd.get_option("--vmin")->as<double>();
    poly.c2 = cmd.get_option("--c2")->as<double>();
    poly.c4 = cmd.get_option("--c4")->as<double>();
    poly.c6 = cmd.get_option("--c6")->as<double>();
    const int count = cmd.get_option("--count")->as<int>();
    double step = cmd.get_option("--step")->as<double>();
    if (step <= 0.0) step = cfg.oracle_step;
    GridSpec grid;
    const double half_width = cmd.get_option("--half-width")->as<double>();
    if (half_width > 0.0) {
      grid = GridSpec{half_width, step, count};
    } else {
      grid = auto_grid(poly, count, step, cfg.oracle_margin);
    }
    const LevelReport report = refine(poly, grid);
    rep.inputs["vmin"] = round_sig(poly.vmin);
    rep.inputs["c2"] = round_sig(poly.c2);
    rep.inputs["c4"] = round_sig(poly.c4);
    rep.inputs["c6"] = round_sig(poly.c6);
    rep.inputs["count"] = count;
    rep.inputs["half_width"] = round_sig(report.grid.half_width);
    rep.inputs["step"] = round_sig(step);
    auto arr = ordered_json::array();
    auto parr = ordered_json::array();
    rep.csv_header = "index,energy,parity";
    for (int i = 0; i < count; ++i) {
      arr.push_back(round_sig(report.energies[i]));
      parr.push_back(parity_name(report.parities[i]));
      rep.csv_rows.push_back({std::to_string(i),
                              format_number(report.energies[i]),
                              parity_name(report.parities[i])});
    }
    rep.outputs["energies"] = arr;
    rep.outputs["parities"] = parr;
    rep.outputs["near_degenerate"] = report.near_degenerate;
    rep.provenance["energies"] =
        "finite-difference bound states, Richardson extrapolated";
    return rep;
  }

  throw CLI::ValidationError("--source must be qes, suq or oracle");
}

ReportEnvelope run_table1() {
  // Published n=9 parameter set; the matching system was originally solved at
  // lower precision than this artifact's root finder, so the table is pinned
  // to the published parameters rather than re-derived (see README).
  const reference::MatchedCase& c = reference::n9_positive;
  const auto exact = qes_levels(c.qes());
  const SuqSpectrumParams spectrum = c.spectrum();

  ReportEnvelope rep;
  rep.command = "table1";
  rep.inputs["n"] = c.n;
  rep.inputs["r"] = c.r;
  rep.inputs["N"] = c.N;
  rep.inputs["tau"] = round_sig(c.tau);
  rep.inputs["A"] = round_sig(c.A);
  rep.inputs["b"] = round_sig(c.b);
  rep.inputs["E0prime"] = round_sig(c.E0prime);
  rep.csv_header = "n,E_approx,E_exact,abs_diff";
  auto rows = ordered_json::array();
  for (int j = 0; j <= c.n; ++j) {
    const int level = 2 * j;
    const double approx = suq11_level(level, spectrum);
    const double diff = std::fabs(approx - exact[j]);
    rows.push_back({{"n", level},
                    {"E_approx", round_sig(approx)},
                    {"E_exact", round_sig(exact[j])},
                    {"abs_diff", round_sig(diff)}});
    rep.csv_rows.push_back({std::to_string(level), format_number(approx),
                            format_number(exact[j]), format_number(diff)});
  }
  rep.outputs["rows"] = rows;
  rep.provenance["E_approx"] = "deformed anharmonic-oscillator spectrum";
  rep.provenance["E_exact"] = "algebraic sector of the sextic potential";
  return rep;
}

ReportEnvelope run_failure_demo() {
  const FailureDemoReport demo = failure_demo();
  ReportEnvelope rep;
  rep.command = "failure-demo";
  rep.inputs["b"] = round_sig(reference::n1_negative.b);
  rep.inputs["N"] = reference::n1_negative.N;
  auto to_array = [](const std::vector<double>& v) {
    auto arr = ordered_json::array();
    for (double e : v) arr.push_back(round_sig(e));
    return arr;
  };
  rep.outputs["potential"] = {{"c2", round_sig(demo.potential.c2)},
                              {"c4", round_sig(demo.potential.c4)},
                              {"c6", round_sig(demo.potential.c6)}};
  rep.outputs["oracle_levels"] = to_array(demo.oracle_levels);
  rep.outputs["qes_levels"] = to_array(demo.qes_levels);
  rep.outputs["suq_levels"] = to_array(demo.suq_levels);
  rep.outputs["ground_gap"] = round_sig(demo.ground_gap);
  rep.outputs["discrepancy_detected"] = demo.discrepancy_detected;
  rep.provenance["oracle_levels"] = "finite-difference bound states";
  rep.provenance["qes_levels"] = "algebraic even-parity side-well pair";
  rep.provenance["suq_levels"] = "central-well deformed-spectrum prediction";
  rep.csv_header = "record,index,value";
  auto push_series = [&](const char* name, const std::vector<double>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
      rep.csv_rows.push_back({name, std::to_string(i), format_number(v[i])});
    }
  };
  push_series("oracle", demo.oracle_levels);
  push_series("qes", demo.qes_levels);
  push_series("suq", demo.suq_levels);
  rep.csv_rows.push_back(
      {"discrepancy_detected", "", demo.discrepancy_detected ? "1" : "0"});
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformed-oscillator / quasi-exactly-soluble potential toolkit"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  std::string sign_str = "pos";
  auto* window = app.add_subcommand("window", "feasible theta = N*tau window");
  window->add_option("--sign-b", sign_str);

  auto* match_cmd = app.add_subcommand("match", "solve the matching system");
  int m_n = 0, m_r = 0, m_N = 0;
  std::string m_sign = "pos";
  match_cmd->add_option("--n", m_n)->required();
  match_cmd->add_option("--r", m_r);
  match_cmd->add_option("--N", m_N)->required();
  match_cmd->add_option("--sign-b", m_sign);

  auto* levels = app.add_subcommand("levels", "energy levels from a chosen source");
  std::string source;
  levels->add_option("--source", source)->required();
  int l_n = 0, l_r = 0, l_N = 0, l_count = 1;
  double l_b = 0.0, l_a = 1.0, l_A = 0.0, l_tau = 0.0, l_E0 = 0.0;
  double l_c2 = 0.0, l_c4 = 0.0, l_c6 = 0.0, l_vmin = 0.0;
  double l_half_width = 0.0, l_step = 0.0;
  std::string l_indices = "0";
  levels->add_option("--n", l_n);
  levels->add_option("--r", l_r);
  levels->add_option("--a", l_a)->default_val(1.0);
  levels->add_option("--b", l_b);
  levels->add_option("--A", l_A);
  levels->add_option("--tau", l_tau);
  levels->add_option("--N", l_N);
  levels->add_option("--E0", l_E0);
  levels->add_option("--indices", l_indices)->default_val("0");
  levels->add_option("--c2", l_c2);
  levels->add_option("--c4", l_c4);
  levels->add_option("--c6", l_c6);
  levels->add_option("--vmin", l_vmin);
  levels->add_option("--count", l_count)->default_val(1);
  levels->add_option("--half-width", l_half_width);
  levels->add_option("--step", l_step);

  auto* table1 = app.add_subcommand("table1", "n=9 exact vs approximate levels");
  auto* failure = app.add_subcommand("failure-demo", "b < 0 breakdown report");
  (void)table1;
  (void)failure;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    const Config cfg = load_config();
    ReportEnvelope rep;
    if (app.got_subcommand("window")) {
      rep = run_window(sign_str);
    } else if (app.got_subcommand("match")) {
      rep = run_match(m_n, m_r, m_N, m_sign);
    } else if (app.got_subcommand("levels")) {
      rep = run_levels(*levels, cfg);
    } else if (app.got_subcommand("table1")) {
      rep = run_table1();
    } else {
      rep = run_failure_demo();
    }
    emit(rep, format);
  } catch (const suqes::NoRootInWindow& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
  return 0;
}
