#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace spinitf {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Arbitrary-size signed integer used for lattice entries, numerators and
/// denominators.
using BigInt = boost::multiprecision::cpp_int;

/// 256-bit binary floating point. Transition frequencies of rings and chains
/// are evaluated in this type before they are quantized into a lattice.
using HighReal = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<256, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

inline HighReal high_pi() { return boost::math::constants::pi<HighReal>(); }

enum class CouplingKind { xx, heisenberg };

inline const char* to_string(CouplingKind k) {
  return k == CouplingKind::xx ? "xx" : "heisenberg";
}

// Error hierarchy. Everything derives from Error so callers (the CLI in
// particular) can separate domain failures from programming errors.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidTopology : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class ContractViolation : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class UnsupportedCase : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace spinitf
