#pragma once

// Run-wide numerical settings, loadable from a key = value file.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace spinitf {

enum class OutputFormat { json, csv };

struct GaSettings {
  std::size_t population = 200;
  std::size_t max_gens = 50;
  std::optional<std::uint64_t> seed;
};

struct RunConfig {
  int precision_bits = 192;  ///< lattice quantization uses precision_bits / 2
  double cluster_tol = 1e-9;  ///< relative to max |lambda|
  double dark_tol = 1e-10;
  double triangle_tol = 1e-9;
  long lll_delta_num = 3;
  long lll_delta_den = 4;
  GaSettings ga;
  OutputFormat output_format = OutputFormat::json;

  /// Throws ArgumentError unless 64 <= precision_bits <= 256, tolerances are
  /// positive and 1/4 < delta < 1.
  void validate() const;
};

/// Parses lines `key = value`; `#` starts a comment. Keys: precision_bits,
/// cluster_tol, dark_tol, triangle_tol, lll_delta (p/q or decimal),
/// ga.population, ga.max_gens, ga.seed, output_format. Unknown keys throw.
RunConfig parse_config(const std::string& text, RunConfig base = {});

RunConfig load_config(const std::string& path, RunConfig base = {});

}  // namespace spinitf
