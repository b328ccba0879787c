#include "io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace spinitf::io {

namespace {

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

const char* topology_name(Topology t) {
  switch (t) {
    case Topology::ring: return "ring";
    case Topology::chain: return "chain";
    default: return "custom";
  }
}

}  // namespace

Json to_json(const SpinNetwork& net) {
  Json j;
  j["n"] = net.size();
  j["kind"] = to_string(net.kind());
  j["topology"] = topology_name(net.topology());
  j["couplings"] = matrix_to_json(net.couplings());
  std::vector<double> bias(net.bias().data(), net.bias().data() + net.bias().size());
  j["bias"] = bias;
  return j;
}

SpinNetwork network_from_json(const Json& j) {
  if (!j.is_object()) throw ArgumentError("network description must be a JSON object");
  const auto n = j.at("n").get<std::size_t>();
  const std::string kind_name = j.value("kind", "xx");
  CouplingKind kind;
  if (kind_name == "xx") {
    kind = CouplingKind::xx;
  } else if (kind_name == "heisenberg") {
    kind = CouplingKind::heisenberg;
  } else {
    throw ArgumentError("unknown coupling kind '" + kind_name + "'");
  }
  const std::string topo = j.value("topology", "custom");

  Matrix couplings;
  Topology topology = Topology::custom;
  if (j.contains("couplings") && !j["couplings"].is_null()) {
    const Json& rows = j["couplings"];
    if (rows.size() != n) throw ArgumentError("couplings must have n rows");
    couplings.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < n; ++r) {
      if (rows[r].size() != n) throw ArgumentError("couplings must be n x n");
      for (std::size_t c = 0; c < n; ++c) {
        couplings(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            rows[r][c].get<double>();
      }
    }
    topology = topo == "ring" ? Topology::ring : topo == "chain" ? Topology::chain : Topology::custom;
  } else if (topo == "ring") {
    couplings = build_ring(n).couplings();
    topology = Topology::ring;
  } else if (topo == "chain") {
    couplings = build_chain(n).couplings();
    topology = Topology::chain;
  } else {
    throw ArgumentError("custom networks need a couplings matrix");
  }

  Vector bias = Vector::Zero(static_cast<Eigen::Index>(n));
  if (j.contains("bias") && !j["bias"].is_null()) {
    const auto b = j["bias"].get<std::vector<double>>();
    if (b.size() != n) throw ArgumentError("bias must have n entries");
    for (std::size_t k = 0; k < n; ++k) bias(static_cast<Eigen::Index>(k)) = b[k];
  }
  return SpinNetwork(std::move(couplings), kind, std::move(bias), topology);
}

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(v));
  }
  return Json(v.str());
}

BigInt big_from_json(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  throw ArgumentError("expected an integer");
}

std::string high_to_string(const HighReal& x) {
  return x.str(60, std::ios_base::scientific);
}

HighReal high_from_string(const std::string& s) {
  try {
    return HighReal(s);
  } catch (const std::exception&) {
    throw ArgumentError("cannot parse number '" + s + "'");
  }
}

Json to_json(const EigenSystem& es) {
  Json j;
  j["source"] = to_string(es.source);
  std::vector<double> values(es.values.rbegin(), es.values.rend());
  std::vector<int> mult(es.multiplicities.rbegin(), es.multiplicities.rend());
  j["values"] = values;
  j["multiplicities"] = mult;
  return j;
}

Json to_json(const TransferAnalysis& ta, const EigenSystem& es) {
  Json j;
  j["from"] = ta.source + 1;
  j["to"] = ta.target + 1;
  j["p_max"] = ta.p_max;
  Json spaces = Json::array();
  for (std::size_t k = es.distinct_count(); k-- > 0;) {
    spaces.push_back({{"eigenvalue", es.values[k]},
                      {"overlap", ta.overlaps[k]},
                      {"sign", ta.signs[k]}});
  }
  j["eigenspaces"] = spaces;
  j["dark_count"] = ta.signs.size() - ta.live.size();
  return j;
}

Json to_json(const ConstraintSystem& cs, const EigenSystem& es) {
  Json j;
  j["from"] = cs.source + 1;
  j["to"] = cs.target + 1;
  std::vector<double> live_values;
  for (std::size_t k : cs.live) live_values.push_back(es.values[k]);
  j["live_eigenvalues"] = live_values;
  j["live_signs"] = cs.live_signs;
  j["reordered"] = cs.reordered;
  j["frequencies"] = cs.frequencies;
  j["reference"] = cs.reference;
  j["omega_ref"] = static_cast<double>(cs.omega_ref);
  j["n_bar"] = cs.n_bar();
  j["theta"] = cs.theta_double();
  std::vector<std::string> hp;
  for (const HighReal& t : cs.theta) hp.push_back(high_to_string(t));
  j["theta_hp"] = hp;
  j["parity_rhs"] = cs.parity_rhs;
  j["parity"] = to_string(parity_from_rhs(cs.parity_rhs));
  return j;
}

Json to_json(const DiophantineSolution& sol) {
  Json j;
  Json p = Json::array();
  for (const BigInt& v : sol.p) p.push_back(big_to_json(v));
  j["p"] = p;
  j["q"] = big_to_json(sol.q);
  j["X"] = sol.X;
  j["s"] = sol.s;
  j["errors"] = sol.errors;
  j["parity_ok"] = sol.parity_ok;
  j["max_error"] = sol.max_error;
  return j;
}

DiophantineSolution solution_from_json(const Json& j, const std::vector<HighReal>& theta,
                                       const std::vector<Parity>& parity) {
  std::vector<BigInt> p;
  for (const Json& v : j.at("p")) p.push_back(big_from_json(v));
  DiophantineSolution sol = make_solution(theta, parity, std::move(p), big_from_json(j.at("q")));
  if (j.contains("X")) sol.X = j["X"].get<std::vector<double>>();
  if (j.contains("s")) sol.s = j["s"].get<double>();
  return sol;
}

Json to_json(const TimeEstimate& est) {
  Json j;
  j["t_f"] = est.t_f;
  j["achieved_p"] = est.achieved_p;
  j["p_max"] = est.p_max;
  j["relative_gap"] = est.relative_gap;
  return j;
}

namespace {

Json to_json(const AxiomVerdict& v) {
  Json j;
  j["holds"] = v.holds;
  j["worst"] = v.worst;
  if (v.witness) {
    j["witness"] = {(*v.witness)[0] + 1, (*v.witness)[1] + 1, (*v.witness)[2] + 1};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const AxiomReport& r) {
  return {{"nonneg", to_json(r.nonneg)},
          {"identity", to_json(r.identity)},
          {"symmetry", to_json(r.symmetry)},
          {"triangle", to_json(r.triangle)},
          {"separation", to_json(r.separation)},
          {"metric", r.metric()}};
}

}  // namespace

Json to_json(const GeometryReport& report) {
  Json j;
  j["distances"] = matrix_to_json(report.distances.d);
  Json unreachable = Json::array();
  for (const auto& [a, b] : report.distances.unreachable) unreachable.push_back({a + 1, b + 1});
  j["unreachable"] = unreachable;
  j["axioms"] = to_json(report.audit.raw);
  Json failures = Json::array();
  for (const auto& [a, b] : report.audit.separation_failures) failures.push_back({a + 1, b + 1});
  j["separation_failures"] = failures;
  if (report.audit.identified) {
    j["antipodal_identification"] = {
        {"failures_are_antipodal", report.audit.failures_are_antipodal},
        {"quotient_well_defined", report.audit.quotient_well_defined},
        {"axioms", to_json(*report.audit.identified)}};
  }
  if (report.uniformity) {
    j["uniform"] = report.uniformity->c_n ? Json(*report.uniformity->c_n) : Json(nullptr);
    j["uniform_predicted"] = report.uniformity->predicted;
  }
  if (report.curvature) {
    j["curvature"] = {{"kappa_max", report.curvature->kappa_max},
                      {"kappa_irreducible", report.curvature->kappa_irreducible},
                      {"radius", report.curvature->radius()}};
  }
  if (report.asymptotic_gap) j["asymptotic_gap"] = *report.asymptotic_gap;
  return j;
}

Json to_json(const RoutePlan& plan) {
  Json j;
  j["n"] = plan.n;
  j["from"] = plan.source + 1;
  j["to"] = plan.target + 1;
  Json bias = Json::array();
  for (const BiasSite& b : plan.bias_nodes) bias.push_back({{"node", b.node + 1}, {"zeta", b.zeta}});
  j["bias_nodes"] = bias;
  j["mechanism"] = to_string(plan.mechanism);
  j["predicted_pmax"] = plan.predicted_pmax;
  j["evaluated_pmax"] = plan.evaluated_pmax ? Json(*plan.evaluated_pmax) : Json(nullptr);
  j["relabeling_offset"] = plan.relabeling_offset;
  return j;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(number_or_null(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string matrix_to_csv(const Matrix& m) {
  std::ostringstream out;
  out.precision(17);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ',';
      if (std::isfinite(m(r, c))) out << m(r, c);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace spinitf::io
