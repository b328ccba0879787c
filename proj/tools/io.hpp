#pragma once

// JSON (de)serialization of networks and reports. Node indices in JSON are
// 1-based; doubles are written with round-trip precision, big integers as
// numbers when they fit in 64 bits and as decimal strings otherwise.

#include <string>
#include <vector>

#include <json.hpp>

#include "spinitf/spinitf.hpp"

namespace spinitf::io {

using Json = nlohmann::ordered_json;

Json to_json(const SpinNetwork& net);
/// {"n", "kind", "topology", "couplings"?, "bias"?}. Ring and chain entries
/// may omit couplings.
SpinNetwork network_from_json(const Json& j);

Json big_to_json(const BigInt& v);
BigInt big_from_json(const Json& j);

std::string high_to_string(const HighReal& x);
HighReal high_from_string(const std::string& s);

/// Distinct eigenvalues, descending.
Json to_json(const EigenSystem& es);
Json to_json(const TransferAnalysis& ta, const EigenSystem& es);
Json to_json(const ConstraintSystem& cs, const EigenSystem& es);
Json to_json(const DiophantineSolution& sol);
DiophantineSolution solution_from_json(const Json& j, const std::vector<HighReal>& theta,
                                       const std::vector<Parity>& parity);
Json to_json(const TimeEstimate& est);
Json to_json(const GeometryReport& report);
Json to_json(const RoutePlan& plan);

/// Real matrix with NaN/inf written as null.
Json matrix_to_json(const Matrix& m);
std::string matrix_to_csv(const Matrix& m);

}  // namespace spinitf::io
