#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "io.hpp"

namespace spinitf::cli {

namespace {

using io::Json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NetworkFlags {
  std::size_t ring = 0;
  std::size_t chain = 0;
  std::string net_file;
  std::string kind = "xx";
  std::vector<std::string> bias;
};

struct PairFlags {
  std::size_t from = 0;
  std::size_t to = 0;
  bool given() const { return from != 0 || to != 0; }
};

struct Globals {
  std::string config_file;
  std::string out_file;
  std::string format;
};

void add_network_flags(CLI::App* cmd, NetworkFlags& f) {
  auto* ring = cmd->add_option("--ring", f.ring, "Uniform ring of N spins");
  auto* chain = cmd->add_option("--chain", f.chain, "Uniform chain of N spins");
  auto* net = cmd->add_option("--net", f.net_file, "Network description (JSON)");
  ring->excludes(chain)->excludes(net);
  chain->excludes(net);
  cmd->add_option("--kind", f.kind, "Coupling kind")->check(CLI::IsMember({"xx", "heisenberg"}));
  cmd->add_option("--bias", f.bias, "Bias field NODE=ZETA (1-based, repeatable)");
}

void add_pair_flags(CLI::App* cmd, PairFlags& p, bool required) {
  auto* a = cmd->add_option("--from", p.from, "Source node (1-based)");
  auto* b = cmd->add_option("--to", p.to, "Target node (1-based)");
  if (required) {
    a->required();
    b->required();
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ArgumentError("invalid JSON in " + path + ": " + e.what());
  }
}

CouplingKind parse_kind(const std::string& kind) {
  return kind == "heisenberg" ? CouplingKind::heisenberg : CouplingKind::xx;
}

std::optional<SpinNetwork> network_from_flags(const NetworkFlags& f) {
  std::optional<SpinNetwork> net;
  if (f.ring != 0) {
    net = build_ring(f.ring, parse_kind(f.kind));
  } else if (f.chain != 0) {
    net = build_chain(f.chain, parse_kind(f.kind));
  } else if (!f.net_file.empty()) {
    net = io::network_from_json(read_json_file(f.net_file));
  }
  if (!net) return net;
  for (const std::string& b : f.bias) {
    const auto eq = b.find('=');
    if (eq == std::string::npos) throw UsageError("--bias expects NODE=ZETA");
    std::size_t node = 0;
    double zeta = 0.0;
    try {
      node = std::stoul(b.substr(0, eq));
      zeta = std::stod(b.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("--bias expects NODE=ZETA, got '" + b + "'");
    }
    if (node < 1 || node > net->size()) throw IndexError("bias node out of range");
    net = apply_bias(*net, node - 1, zeta);
  }
  return net;
}

SpinNetwork require_network(const NetworkFlags& f) {
  auto net = network_from_flags(f);
  if (!net) throw UsageError("one of --ring, --chain or --net is required");
  return *net;
}

EigenSystem solve(const SpinNetwork& net, const RunConfig& cfg) {
  const SingleExcitationHamiltonian h = single_excitation_hamiltonian(net);
  JacobiOptions jo;
  const double scale = std::max(1.0, h.matrix.cwiseAbs().rowwise().sum().maxCoeff());
  jo.cluster_tol = cfg.cluster_tol * scale;
  return eigensystem(net, jo);
}

std::pair<std::size_t, std::size_t> zero_based(const PairFlags& p, std::size_t n) {
  if (p.from < 1 || p.from > n || p.to < 1 || p.to > n) {
    throw IndexError("--from/--to must lie in 1.." + std::to_string(n));
  }
  return {p.from - 1, p.to - 1};
}

std::vector<double> distinct_offdiagonal(const Matrix& m, double tol) {
  std::vector<double> v;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) v.push_back(m(i, j));
  }
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double x : v) {
    if (out.empty() || x - out.back() > tol) out.push_back(x);
  }
  return out;
}

class Emitter {
 public:
  Emitter(const Globals& g, std::ostream& out) : g_(g), out_(out) {}

  void json(const Json& j) { write(j.dump(2) + "\n"); }

  void write(const std::string& text) {
    if (g_.out_file.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(g_.out_file);
    if (!f) throw ArgumentError("cannot write " + g_.out_file);
    f << text;
  }

 private:
  const Globals& g_;
  std::ostream& out_;
};

std::string csv_rows(const std::vector<std::pair<double, double>>& rows, const std::string& head) {
  std::ostringstream s;
  s.precision(17);
  s << head << '\n';
  for (const auto& [a, b] : rows) s << a << ',' << b << '\n';
  return s.str();
}

// Constraint system and eigensystem for a network pair; shared by
// attainability, dio and time.
struct PairContext {
  SpinNetwork net;
  EigenSystem es;
  ConstraintSystem cs;
  std::size_t from = 0;
  std::size_t to = 0;
};

PairContext pair_context(SpinNetwork net, std::size_t from, std::size_t to,
                         const RunConfig& cfg) {
  EigenSystem es = solve(net, cfg);
  const TransferAnalysis ta = analyze_transfer(es, from, to, cfg.dark_tol);
  ConstraintSystem cs = build_constraints(ta, es);
  return {std::move(net), std::move(es), std::move(cs), from, to};
}

std::optional<PairContext> context_from_report(const Json& j, const RunConfig& cfg) {
  if (!j.contains("network") || !j.contains("from") || !j.contains("to")) return std::nullopt;
  SpinNetwork net = io::network_from_json(j["network"]);
  const auto from = j["from"].get<std::size_t>();
  const auto to = j["to"].get<std::size_t>();
  if (from < 1 || to < 1 || from > net.size() || to > net.size()) {
    throw IndexError("report pair out of range");
  }
  return pair_context(std::move(net), from - 1, to - 1, cfg);
}

Json context_header(const PairContext& ctx) {
  Json j;
  j["network"] = io::to_json(ctx.net);
  j["from"] = ctx.from + 1;
  j["to"] = ctx.to + 1;
  return j;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ArgumentError("bad number '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Information transfer fidelity on spin networks", "spin-itf"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--config", g.config_file, "key = value configuration file");
  app.add_option("--out", g.out_file, "Write output to FILE instead of stdout");
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  // spectrum
  NetworkFlags spec_net;
  auto* spectrum = app.add_subcommand("spectrum", "Distinct eigenvalues and multiplicities");
  add_network_flags(spectrum, spec_net);

  // itf
  NetworkFlags itf_net;
  PairFlags itf_pair;
  auto* itf = app.add_subcommand("itf", "p_max matrix and per-pair analysis");
  add_network_flags(itf, itf_net);
  add_pair_flags(itf, itf_pair, false);

  // simulate
  NetworkFlags sim_net;
  PairFlags sim_pair;
  double sim_tmax = 100.0, sim_dt = 0.01;
  auto* simulate_cmd = app.add_subcommand("simulate", "p_t time series and best time");
  add_network_flags(simulate_cmd, sim_net);
  add_pair_flags(simulate_cmd, sim_pair, true);
  simulate_cmd->add_option("--tmax", sim_tmax, "Time horizon (1/J)");
  simulate_cmd->add_option("--dt", sim_dt, "Grid step");

  // attainability
  NetworkFlags att_net;
  PairFlags att_pair;
  long att_bound = 50;
  auto* attain = app.add_subcommand("attainability", "Constraint systems and verdicts");
  add_network_flags(attain, att_net);
  add_pair_flags(attain, att_pair, false);
  attain->add_option("--bound", att_bound, "Coefficient bound of the relation search");

  // dio
  NetworkFlags dio_net;
  PairFlags dio_pair;
  std::string dio_input, dio_theta, dio_parity, dio_weights, dio_mode = "first";
  double dio_s = 1e-8;
  bool dio_sweep = false, dio_ga = false, dio_fix = false;
  double s_min = 1e-10, s_max = 1e-5;
  std::size_t s_count = 21;
  std::optional<std::uint64_t> dio_seed;
  std::optional<std::size_t> dio_pop, dio_gens;
  std::string dio_qmax = "1000";
  auto* dio = app.add_subcommand("dio", "Parity-constrained Diophantine approximation");
  add_network_flags(dio, dio_net);
  add_pair_flags(dio, dio_pair, false);
  dio->add_option("--input", dio_input, "Attainability report (JSON)");
  dio->add_option("--theta", dio_theta, "Inline theta, comma separated");
  dio->add_option("--parity", dio_parity, "Parity string of e/o/x");
  dio->add_option("--s", dio_s, "Lattice scale");
  dio->add_option("--weights", dio_weights, "Weights X1,X2,...");
  dio->add_option("--mode", dio_mode, "Vector extraction")
      ->check(CLI::IsMember({"first", "shortest", "parity"}));
  dio->add_flag("--sweep", dio_sweep, "Geometric sweep over s");
  dio->add_option("--s-min", s_min);
  dio->add_option("--s-max", s_max);
  dio->add_option("--s-count", s_count);
  dio->add_flag("--ga", dio_ga, "Genetic search over weights");
  dio->add_option("--seed", dio_seed, "Seed (required with --ga)");
  dio->add_option("--population", dio_pop);
  dio->add_option("--gens", dio_gens);
  dio->add_flag("--parity-fix", dio_fix, "Even/odd rescaling iteration");
  dio->add_option("--qmax", dio_qmax, "Denominator cap for one-dimensional rescaling");

  // time
  NetworkFlags time_net;
  PairFlags time_pair;
  std::string time_input;
  std::optional<double> time_eps, time_tcoh, time_c, time_alpha;
  double eps_min = 1e-6, eps_max = 1e-1, time_tmax = 20000.0, time_dt = 0.01;
  std::size_t eps_count = 21;
  auto* time_cmd = app.add_subcommand("time", "Transfer times, bounds and power-law fits");
  add_network_flags(time_cmd, time_net);
  add_pair_flags(time_cmd, time_pair, false);
  time_cmd->add_option("--input", time_input, "dio report (JSON)");
  time_cmd->add_option("--eps", time_eps, "Target error probability");
  time_cmd->add_option("--eps-min", eps_min);
  time_cmd->add_option("--eps-max", eps_max);
  time_cmd->add_option("--count", eps_count);
  time_cmd->add_option("--tmax", time_tmax);
  time_cmd->add_option("--dt", time_dt);
  time_cmd->add_option("--tcoh", time_tcoh, "Coherence time");
  time_cmd->add_option("--c", time_c, "Power-law prefactor");
  time_cmd->add_option("--alpha", time_alpha, "Power-law exponent");

  // geometry
  NetworkFlags geo_net;
  auto* geometry = app.add_subcommand("geometry", "Distance matrix and metric audit");
  add_network_flags(geometry, geo_net);

  // route
  std::size_t route_n = 0;
  PairFlags route_pair;
  double route_zeta = 1e3;
  std::string route_matrix;
  auto* route = app.add_subcommand("route", "Bias placement for ring routing");
  route->add_option("--n", route_n, "Ring size")->required();
  add_pair_flags(route, route_pair, true);
  route->add_option("--zeta", route_zeta, "Reference bias strength");
  route->add_option("--matrix", route_matrix, "Write PREFIX_before.csv and PREFIX_after.csv");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    RunConfig cfg;
    if (!g.config_file.empty()) cfg = load_config(g.config_file);
    if (g.format == "csv") cfg.output_format = OutputFormat::csv;
    if (g.format == "json") cfg.output_format = OutputFormat::json;
    const bool csv = cfg.output_format == OutputFormat::csv;
    Emitter emit(g, out);

    if (spectrum->parsed()) {
      const SpinNetwork net = require_network(spec_net);
      const EigenSystem es = solve(net, cfg);
      if (csv) {
        std::ostringstream s;
        s.precision(17);
        s << "value,multiplicity\n";
        for (std::size_t k = es.distinct_count(); k-- > 0;) {
          s << es.values[k] << ',' << es.multiplicities[k] << '\n';
        }
        emit.write(s.str());
      } else {
        Json j = io::to_json(es);
        j["network"] = io::to_json(net);
        emit.json(j);
      }
    } else if (itf->parsed()) {
      const SpinNetwork net = require_network(itf_net);
      const EigenSystem es = solve(net, cfg);
      const Matrix p = pmax_matrix(es, cfg.dark_tol);
      if (csv) {
        emit.write(io::matrix_to_csv(p));
      } else {
        Json j;
        j["network"] = io::to_json(net);
        j["pmax"] = io::matrix_to_json(p);
        j["distinct_values"] = distinct_offdiagonal(p, 1e-12);
        if (itf_pair.given()) {
          const auto [a, b] = zero_based(itf_pair, net.size());
          j["pair"] = io::to_json(analyze_transfer(es, a, b, cfg.dark_tol), es);
        }
        emit.json(j);
      }
    } else if (simulate_cmd->parsed()) {
      const SpinNetwork net = require_network(sim_net);
      const EigenSystem es = solve(net, cfg);
      const auto [a, b] = zero_based(sim_pair, net.size());
      const auto series = simulate(es, a, b, sim_tmax, sim_dt);
      if (csv) {
        emit.write(csv_rows(series, "t,p"));
      } else {
        const ScanResult best = scan_max_probability(es, a, b, sim_tmax, sim_dt);
        Json j;
        j["network"] = io::to_json(net);
        j["from"] = a + 1;
        j["to"] = b + 1;
        j["p_max"] = analyze_transfer(es, a, b, cfg.dark_tol).p_max;
        j["best"] = {{"t", best.t_best}, {"p", best.p_best}};
        std::vector<double> t, p;
        for (const auto& [x, y] : series) {
          t.push_back(x);
          p.push_back(y);
        }
        j["t"] = t;
        j["p"] = p;
        emit.json(j);
      }
    } else if (attain->parsed()) {
      const SpinNetwork net = require_network(att_net);
      if (att_pair.given()) {
        const auto [a, b] = zero_based(att_pair, net.size());
        PairContext ctx = pair_context(net, a, b, cfg);
        Json j = context_header(ctx);
        const Json body = io::to_json(ctx.cs, ctx.es);
        for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
        const VerdictResult v = attainability_verdict(ctx.cs, att_bound);
        j["verdict"] = to_string(v.verdict);
        j["relation"] = v.relation ? Json(*v.relation) : Json(nullptr);
        j["live_count"] = ctx.cs.live_count();
        emit.json(j);
      } else {
        const EigenSystem es = solve(net, cfg);
        Json rows = Json::array();
        for (std::size_t a = 0; a < net.size(); ++a) {
          for (std::size_t b = a + 1; b < net.size(); ++b) {
            const VerdictResult v = pair_verdict(es, a, b, att_bound, cfg.dark_tol);
            rows.push_back({{"from", a + 1},
                            {"to", b + 1},
                            {"verdict", to_string(v.verdict)},
                            {"relation", v.relation ? Json(*v.relation) : Json(nullptr)}});
          }
        }
        Json j;
        j["network"] = io::to_json(net);
        j["pairs"] = rows;
        emit.json(j);
      }
    } else if (dio->parsed()) {
      std::optional<PairContext> ctx;
      std::vector<HighReal> theta;
      std::vector<Parity> parity;
      if (!dio_input.empty()) {
        const Json report = read_json_file(dio_input);
        ctx = context_from_report(report, cfg);
        if (!ctx && report.contains("theta_hp")) {
          for (const Json& t : report["theta_hp"]) theta.push_back(io::high_from_string(t));
          if (report.contains("parity")) parity = parse_parity(report["parity"].get<std::string>());
        }
      } else if (auto net = network_from_flags(dio_net)) {
        if (!dio_pair.given()) throw UsageError("dio on a network needs --from and --to");
        const auto [a, b] = zero_based(dio_pair, net->size());
        ctx = pair_context(*net, a, b, cfg);
      } else if (!dio_theta.empty()) {
        std::stringstream in(dio_theta);
        std::string item;
        while (std::getline(in, item, ',')) theta.push_back(io::high_from_string(item));
      } else {
        throw UsageError("dio needs --input, a network with --from/--to, or --theta");
      }
      if (ctx) {
        theta = ctx->cs.theta;
        parity = parity_from_rhs(ctx->cs.parity_rhs);
      }
      if (!dio_parity.empty()) parity = parse_parity(dio_parity);
      if (parity.empty()) parity.assign(theta.size(), Parity::any);
      if (theta.empty()) throw ArgumentError("no theta to approximate");

      std::vector<double> X(theta.size(), 1.0);
      if (!dio_weights.empty()) X = parse_list(dio_weights);

      WeightedOptions wo;
      wo.quant_bits = cfg.precision_bits / 2;
      wo.delta_num = cfg.lll_delta_num;
      wo.delta_den = cfg.lll_delta_den;
      wo.mode = dio_mode == "shortest" ? ExtractMode::shortest
                : dio_mode == "parity" ? ExtractMode::shortest_parity_feasible
                                       : ExtractMode::first_vector;

      Json j = ctx ? context_header(*ctx) : Json::object();
      std::vector<std::string> hp;
      for (const HighReal& t : theta) hp.push_back(io::high_to_string(t));
      j["theta_hp"] = hp;
      j["parity"] = to_string(parity);

      const auto attach_time = [&](Json& target, const DiophantineSolution& sol) {
        if (ctx && sol.feasible() && parity == parity_from_rhs(ctx->cs.parity_rhs)) {
          target["t_f"] = time_from_solution(ctx->cs, ctx->es, sol).t_f;
        }
      };

      DiophantineSolution sol;
      if (dio_sweep) {
        if (s_count < 2 || !(s_min > 0.0) || !(s_max > s_min)) {
          throw UsageError("sweep needs 0 < s-min < s-max and s-count >= 2");
        }
        const std::vector<DiophantineSolution> family =
            scale_sweep(theta, parity, log_grid(s_max, s_min, s_count), X, wo);
        Json fam = Json::array();
        for (const DiophantineSolution& f : family) {
          Json e = io::to_json(f);
          attach_time(e, f);
          fam.push_back(e);
        }
        j["family"] = fam;
        if (family.empty()) throw ArgumentError("sweep produced no solutions");
        const auto best = std::find_if(family.rbegin(), family.rend(),
                                       [](const DiophantineSolution& f) { return f.feasible(); });
        sol = best != family.rend() ? *best : family.back();
      } else if (dio_ga) {
        if (!dio_seed) throw UsageError("--ga requires --seed");
        GaOptions go;
        go.seed = *dio_seed;
        go.population = dio_pop.value_or(cfg.ga.population);
        go.max_gens = dio_gens.value_or(cfg.ga.max_gens);
        go.quant_bits = wo.quant_bits;
        const GaResult r = ga_weight_search(theta, parity, dio_s, go);
        sol = r.solution;
        j["generations"] = r.generations;
      } else if (dio_fix) {
        ParityFixOptions po;
        po.max_denominator = BigInt(dio_qmax);
        po.s = dio_s;
        po.quant_bits = wo.quant_bits;
        const ParityFixResult r = parity_fix_by_scaling(theta, parity, po);
        sol = r.solution;
        j["scaling_exponents"] = r.exponents;
        j["rounds"] = r.rounds;
      } else {
        sol = weighted_simultaneous_approx(theta, parity, dio_s, X, wo);
      }
      j["solution"] = io::to_json(sol);
      attach_time(j, sol);
      emit.json(j);
    } else if (time_cmd->parsed()) {
      Json j;
      std::optional<PairContext> ctx;
      if (!time_input.empty()) {
        const Json report = read_json_file(time_input);
        ctx = context_from_report(report, cfg);
        if (!ctx) throw UsageError("time --input needs a report with network, from and to");
        j = context_header(*ctx);
        const DiophantineSolution sol = io::solution_from_json(
            report.at("solution"), ctx->cs.theta, parity_from_rhs(ctx->cs.parity_rhs));
        j["solution"] = io::to_json(sol);
        j["estimate"] = io::to_json(time_from_solution(ctx->cs, ctx->es, sol));
        if (time_eps) {
          j["error_bound_ok"] = error_bound_check(ctx->cs, sol.max_error, *time_eps);
        }
      } else if (auto net = network_from_flags(time_net)) {
        if (!time_pair.given()) throw UsageError("time on a network needs --from and --to");
        const auto [a, b] = zero_based(time_pair, net->size());
        const EigenSystem es = solve(*net, cfg);
        const auto samples = minimum_time_samples(es, a, b, log_grid(eps_max, eps_min, eps_count),
                                                  time_tmax, time_dt);
        if (csv) {
          emit.write(csv_rows(samples, "eps_prob,t_f"));
          return 0;
        }
        j["network"] = io::to_json(*net);
        j["from"] = a + 1;
        j["to"] = b + 1;
        Json rows = Json::array();
        for (const auto& [e, t] : samples) rows.push_back({{"eps_prob", e}, {"t_f", t}});
        j["samples"] = rows;
        if (samples.size() >= 2) {
          const PowerLawFit fit = fit_power_law(samples);
          j["fit"] = {{"c", fit.c}, {"alpha", fit.alpha}, {"r_squared", fit.r_squared}};
          if (!time_c) time_c = fit.c;
          if (!time_alpha) time_alpha = fit.alpha;
        }
        try {
          ctx = pair_context(*net, a, b, cfg);
        } catch (const UnsupportedCase&) {
        }
      } else if (!(time_tcoh && time_c && time_alpha)) {
        throw UsageError("time needs --input, a network with --from/--to, or --tcoh --c --alpha");
      }
      if (ctx && time_eps) {
        const QMinBound qb = q_min_dirichlet(ctx->cs, *time_eps);
        j["q_min"] = io::big_to_json(qb.q_min);
        j["q_min_small_angle"] = io::high_to_string(qb.small_angle);
      }
      if (time_tcoh) {
        if (!time_c || !time_alpha) throw UsageError("--tcoh needs --c and --alpha or a fit");
        const DecoherenceReport d =
            decoherence_feasibility(*time_c, *time_alpha, *time_tcoh, ctx ? &ctx->cs : nullptr);
        j["decoherence"] = {{"eps_floor", d.eps_floor},
                            {"log10_t_ceiling", d.log10_t_ceiling ? Json(*d.log10_t_ceiling)
                                                                  : Json(nullptr)}};
      }
      emit.json(j);
    } else if (geometry->parsed()) {
      const SpinNetwork net = require_network(geo_net);
      const EigenSystem es = solve(net, cfg);
      std::optional<std::size_t> ring_n;
      if (net.topology() == Topology::ring && net.uniform_unbiased()) ring_n = net.size();
      const GeometryReport r = geometry_report(pmax_matrix(es, cfg.dark_tol), ring_n,
                                               cfg.triangle_tol);
      if (csv) {
        emit.write(io::matrix_to_csv(r.distances.d));
      } else {
        Json j;
        j["network"] = io::to_json(net);
        const Json body = io::to_json(r);
        for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
        emit.json(j);
      }
    } else if (route->parsed()) {
      if (route_pair.from < 1 || route_pair.from > route_n || route_pair.to < 1 ||
          route_pair.to > route_n) {
        throw IndexError("--from/--to must lie in 1..n");
      }
      RouteOptions ro;
      ro.zeta = route_zeta;
      const RoutePlan plan = plan_route(route_n, route_pair.from - 1, route_pair.to - 1, ro);
      if (!route_matrix.empty()) {
        std::vector<std::size_t> nodes;
        for (const BiasSite& b : plan.bias_nodes) nodes.push_back(b.node);
        const auto dump = [](const std::string& path, const Matrix& m) {
          std::ofstream f(path);
          if (!f) throw ArgumentError("cannot write " + path);
          f << io::matrix_to_csv(m);
        };
        dump(route_matrix + "_before.csv", biased_ring_pmax(route_n, std::vector<std::size_t>{}, 0.0));
        dump(route_matrix + "_after.csv", biased_ring_pmax(route_n, nodes, route_zeta));
      }
      emit.json(io::to_json(plan));
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return run(args, out, err);
}

}  // namespace spinitf::cli
