#include "spinitf/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "spinitf/lattice.hpp"

namespace spinitf {

namespace {

bool parity_matches(const BigInt& p, Parity want) {
  if (want == Parity::any) return true;
  const bool odd = (p % 2) != 0;
  return odd == (want == Parity::odd);
}

void check_inputs(const std::vector<HighReal>& theta, const std::vector<Parity>& parity) {
  if (theta.empty()) throw ArgumentError("theta must not be empty");
  if (parity.size() != theta.size()) throw ArgumentError("parity length must match theta");
}

HighReal two_pow(int e) { return boost::multiprecision::ldexp(HighReal(1), e); }

// Number of trailing zero bits of a nonzero integer.
int two_adic_valuation(BigInt v) {
  int d = 0;
  v = abs(v);
  while (v != 0 && (v % 2) == 0) {
    v /= 2;
    ++d;
  }
  return d;
}

bool better(const DiophantineSolution& a, const DiophantineSolution& b) {
  const std::size_t va = a.violations();
  const std::size_t vb = b.violations();
  if (va != vb) return va < vb;
  return a.max_error < b.max_error;
}

}  // namespace

std::vector<Parity> parse_parity(const std::string& text) {
  std::vector<Parity> out;
  for (char c : text) {
    switch (c) {
      case 'e': case 'E': out.push_back(Parity::even); break;
      case 'o': case 'O': out.push_back(Parity::odd); break;
      case 'x': case 'X': out.push_back(Parity::any); break;
      default: throw ArgumentError(std::string("bad parity character '") + c + "'");
    }
  }
  return out;
}

std::string to_string(const std::vector<Parity>& parity) {
  std::string s;
  for (Parity p : parity) s += p == Parity::even ? 'e' : p == Parity::odd ? 'o' : 'x';
  return s;
}

std::vector<Parity> parity_from_rhs(const std::vector<int>& rhs) {
  std::vector<Parity> out;
  for (int r : rhs) out.push_back(r == 0 ? Parity::even : Parity::odd);
  return out;
}

std::size_t DiophantineSolution::violations() const {
  return static_cast<std::size_t>(std::count(parity_ok.begin(), parity_ok.end(), false));
}

DiophantineSolution make_solution(const std::vector<HighReal>& theta,
                                  const std::vector<Parity>& parity, std::vector<BigInt> p,
                                  BigInt q) {
  check_inputs(theta, parity);
  if (p.size() != theta.size()) throw ArgumentError("numerator count must match theta");
  if (q < 1) throw ArgumentError("denominator must be >= 1");
  DiophantineSolution sol;
  sol.p = std::move(p);
  sol.q = std::move(q);
  const HighReal hq(sol.q);
  for (std::size_t k = 0; k < theta.size(); ++k) {
    const double err = static_cast<double>(abs(theta[k] * hq - HighReal(sol.p[k])));
    sol.errors.push_back(err);
    sol.parity_ok.push_back(parity_matches(sol.p[k], parity[k]));
    sol.max_error = std::max(sol.max_error, err);
  }
  return sol;
}

DiophantineSolution weighted_simultaneous_approx(const std::vector<HighReal>& theta,
                                                 const std::vector<Parity>& parity, double s,
                                                 const std::vector<double>& X,
                                                 const WeightedOptions& options) {
  check_inputs(theta, parity);
  if (X.size() != theta.size()) throw ArgumentError("weight count must match theta");
  if (!(s > 0.0) || !std::isfinite(s)) throw ArgumentError("scale s must be positive");
  if (options.quant_bits < 16) throw ArgumentError("quant_bits must be >= 16");
  const std::size_t n = theta.size();
  const HighReal unit = two_pow(options.quant_bits);

  std::vector<BigInt> weight(n), shift(n);
  LatticeBasis basis;
  basis.delta_num = options.delta_num;
  basis.delta_den = options.delta_den;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(X[i] > 0.0) || !std::isfinite(X[i])) throw ArgumentError("weights must be positive");
    weight[i] = static_cast<BigInt>(round(unit * HighReal(X[i])));
    shift[i] = static_cast<BigInt>(round(unit * HighReal(X[i]) * theta[i]));
    if (weight[i] == 0) throw ArgumentError("weight below quantization resolution");
    IntVector col(n + 1, 0);
    col[i] = weight[i];
    basis.columns.push_back(std::move(col));
  }
  const BigInt scale = static_cast<BigInt>(round(unit * HighReal(s)));
  if (scale == 0) throw ArgumentError("scale s below quantization resolution");
  IntVector last(n + 1);
  for (std::size_t i = 0; i < n; ++i) last[i] = -shift[i];
  last[n] = scale;
  basis.columns.push_back(std::move(last));

  const LllResult reduced = lll_reduce(basis);

  // Vector b = sum_i p_i w_i e_i + q * last, so q = b_n / scale and
  // p_i = (b_i + q shift_i) / w_i, all exact.
  const auto decode = [&](const IntVector& b, std::vector<BigInt>& p, BigInt& q) {
    q = b[n] / scale;
    p.resize(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = (b[i] + q * shift[i]) / weight[i];
  };

  IntVector chosen;
  if (options.mode == ExtractMode::first_vector) {
    chosen = reduced.basis.columns.front();
  } else {
    EnumerationOptions en;
    const bool want_parity = options.mode == ExtractMode::shortest_parity_feasible;
    if (want_parity) {
      // Fixing parities needs at least even multiples of basis vectors.
      const long base = static_cast<long>(
          std::floor(std::pow(2.0 / std::sqrt(3.0), static_cast<double>(n + 1))));
      en.coefficient_bound = std::max(2L, base);
    }
    en.accept = [&](const IntVector& b) {
      if (b[n] == 0) return false;
      if (!want_parity) return true;
      std::vector<BigInt> p;
      BigInt q;
      decode(b, p, q);
      for (std::size_t i = 0; i < n; ++i) {
        if (!parity_matches(p[i], parity[i])) return false;
      }
      return true;
    };
    const auto best = shortest_vector(reduced.basis, en);
    if (!best) {
      DiophantineSolution fallback;
      throw SearchFailure("no parity-feasible vector within the enumeration bound", fallback);
    }
    chosen = best->vector;
  }

  std::vector<BigInt> p;
  BigInt q;
  decode(chosen, p, q);
  if (q == 0) throw ArgumentError("degenerate lattice vector (q = 0): scale s too large");
  if (q < 0) {
    q = -q;
    for (BigInt& v : p) v = -v;
  }
  DiophantineSolution sol = make_solution(theta, parity, std::move(p), std::move(q));
  sol.X = X;
  sol.s = s;
  return sol;
}

std::vector<DiophantineSolution> scale_sweep(const std::vector<HighReal>& theta,
                                             const std::vector<Parity>& parity,
                                             const std::vector<double>& scales,
                                             const std::vector<double>& X,
                                             const WeightedOptions& options) {
  std::vector<DiophantineSolution> out;
  for (double s : scales) {
    try {
      out.push_back(weighted_simultaneous_approx(theta, parity, s, X, options));
    } catch (const SearchFailure&) {
    } catch (const ArgumentError&) {
      if (!(s > 0.0)) throw;
    }
  }
  return out;
}

std::vector<Fraction> cf_candidates(const HighReal& x, const BigInt& max_q) {
  if (!(x > 0)) throw ArgumentError("cf_candidates requires x > 0");
  const ContinuedFraction cf = continued_fraction(x, 64);
  const std::vector<Fraction> conv = convergents(cf.terms);
  std::vector<Fraction> out;
  for (std::size_t k = 0; k < conv.size(); ++k) {
    if (k > 0) {
      const Fraction mid = semiconvergent(conv[k - 1], conv[k]);
      if (mid.q <= max_q) out.push_back(mid);
    }
    if (conv[k].q > max_q) break;
    out.push_back(conv[k]);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Fraction& a, const Fraction& b) { return a.q < b.q; });
  return out;
}

ParityFixResult parity_fix_by_scaling(const std::vector<HighReal>& theta,
                                      const std::vector<Parity>& parity,
                                      const ParityFixOptions& options) {
  check_inputs(theta, parity);
  if (options.max_rounds < 1) throw ArgumentError("max_rounds must be >= 1");
  if (options.max_denominator < 1) throw ArgumentError("max_denominator must be >= 1");
  const std::size_t n = theta.size();
  for (const HighReal& t : theta) {
    if (t == 0) throw ArgumentError("theta entries must be nonzero");
  }

  const auto approximate = [&](const std::vector<HighReal>& scaled, std::vector<BigInt>& p,
                               BigInt& q) {
    if (n == 1) {
      const HighReal x = abs(scaled[0]);
      const std::vector<Fraction> conv =
          convergents(continued_fraction(x, 64).terms);
      Fraction pick = conv.front();
      for (const Fraction& f : conv) {
        if (f.q > options.max_denominator) break;
        pick = f;
      }
      p = {scaled[0] < 0 ? BigInt(-pick.p) : pick.p};
      q = pick.q;
      return;
    }
    WeightedOptions wo;
    wo.quant_bits = options.quant_bits;
    const std::vector<Parity> free(n, Parity::any);
    const DiophantineSolution sol =
        weighted_simultaneous_approx(scaled, free, options.s, std::vector<double>(n, 1.0), wo);
    p = sol.p;
    q = sol.q;
  };

  std::vector<int> e(n, 0);
  std::optional<DiophantineSolution> best;
  for (int pass = 1; pass <= options.max_rounds; ++pass) {
    std::vector<HighReal> scaled(n);
    for (std::size_t i = 0; i < n; ++i) scaled[i] = theta[i] * two_pow(-e[i]);
    std::vector<BigInt> pbar;
    BigInt q;
    approximate(scaled, pbar, q);

    std::vector<BigInt> p(n);
    std::vector<int> next = e;
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] >= 0) {
        p[i] = pbar[i] << e[i];
      } else {
        const BigInt div = BigInt(1) << -e[i];
        if (pbar[i] % div != 0) {
          // Converse rule cannot apply: fall back to the unscaled coordinate.
          next[i] = 0;
          p[i] = static_cast<BigInt>(round(theta[i] * HighReal(q)));
          continue;
        }
        p[i] = pbar[i] / div;
      }
      const bool odd = (p[i] % 2) != 0;
      if (parity[i] == Parity::even && odd) {
        next[i] = std::max(e[i], 0) + 1;
      } else if (parity[i] == Parity::odd && !odd && p[i] != 0) {
        next[i] = e[i] - two_adic_valuation(p[i]);
      }
    }

    DiophantineSolution sol = make_solution(theta, parity, std::move(p), q);
    if (!best || better(sol, *best)) best = sol;
    if (next == e && sol.feasible()) {
      const double bound =
          2.0 / std::pow(static_cast<double>(sol.q), 1.0 / static_cast<double>(n));
      if (sol.max_error > bound) {
        throw SearchFailure("scaling settled but the Dirichlet bound is not met", sol);
      }
      return {std::move(sol), e, pass};
    }
    e = std::move(next);
  }
  throw SearchFailure("parity scaling did not converge within " +
                          std::to_string(options.max_rounds) + " rounds",
                      *best);
}

GaResult ga_weight_search(const std::vector<HighReal>& theta,
                          const std::vector<Parity>& parity, double s,
                          const GaOptions& options) {
  check_inputs(theta, parity);
  if (options.population < 2) throw ArgumentError("population must be >= 2");
  if (options.max_gens < 1) throw ArgumentError("max_gens must be >= 1");
  if (options.tournament < 1) throw ArgumentError("tournament size must be >= 1");
  if (!(options.log2_min < options.log2_max)) throw ArgumentError("empty gene range");
  const std::size_t n = theta.size();
  const std::size_t pop = options.population;

  struct Individual {
    std::vector<double> genes;
    DiophantineSolution sol;
    bool valid = false;
  };

  WeightedOptions wo;
  wo.quant_bits = options.quant_bits;
  const auto evaluate = [&](Individual& ind) {
    std::vector<double> X(n);
    for (std::size_t g = 0; g < n; ++g) X[g] = std::exp2(ind.genes[g]);
    try {
      ind.sol = weighted_simultaneous_approx(theta, parity, s, X, wo);
      ind.valid = true;
    } catch (const ArgumentError&) {
      ind.sol = DiophantineSolution{};
      ind.sol.X = X;
      ind.sol.s = s;
      ind.sol.parity_ok.assign(n, false);
      ind.sol.max_error = std::numeric_limits<double>::infinity();
      ind.valid = false;
    }
  };
  const auto fitter = [](const Individual& a, const Individual& b) {
    return better(a.sol, b.sol);
  };

  std::size_t workers = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, pop);
  const auto evaluate_all = [&](std::vector<Individual>& group, std::size_t from) {
    if (workers == 1) {
      for (std::size_t k = from; k < group.size(); ++k) evaluate(group[k]);
      return;
    }
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        for (std::size_t k = from + w; k < group.size(); k += workers) evaluate(group[k]);
      });
    }
    for (std::thread& t : threads) t.join();
  };

  const auto rng_for = [&](std::size_t gen, std::size_t idx) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                      static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(gen), static_cast<std::uint32_t>(idx)};
    return std::mt19937_64(seq);
  };

  std::vector<Individual> current(pop);
  for (std::size_t idx = 0; idx < pop; ++idx) {
    auto rng = rng_for(0, idx);
    std::uniform_real_distribution<double> gene(options.log2_min, options.log2_max);
    current[idx].genes.resize(n);
    for (double& g : current[idx].genes) g = gene(rng);
  }
  evaluate_all(current, 0);

  GaResult result;
  result.evaluations = pop;
  for (std::size_t gen = 0;; ++gen) {
    const auto best = std::min_element(current.begin(), current.end(), fitter);
    if (best->valid && best->sol.feasible()) {
      result.solution = best->sol;
      result.generations = gen;
      return result;
    }
    if (gen + 1 >= options.max_gens) {
      throw SearchFailure("no parity-feasible weights after " +
                              std::to_string(options.max_gens) + " generations",
                          best->sol);
    }

    std::vector<Individual> next(pop);
    next[0] = *best;  // elitism
    for (std::size_t idx = 1; idx < pop; ++idx) {
      auto rng = rng_for(gen + 1, idx);
      std::uniform_int_distribution<std::size_t> pick(0, pop - 1);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      const auto tournament = [&]() -> const Individual& {
        const Individual* winner = &current[pick(rng)];
        for (std::size_t r = 1; r < options.tournament; ++r) {
          const Individual& c = current[pick(rng)];
          if (fitter(c, *winner)) winner = &c;
        }
        return *winner;
      };
      const Individual& a = tournament();
      const Individual& b = tournament();
      std::vector<double> genes = a.genes;
      if (unit(rng) < options.crossover_rate) {
        for (std::size_t g = 0; g < n; ++g) {
          const bool a_ok = a.valid && a.sol.parity_ok[g];
          const bool b_ok = b.valid && b.sol.parity_ok[g];
          if (a_ok != b_ok) {
            genes[g] = a_ok ? a.genes[g] : b.genes[g];
          } else if (unit(rng) < 0.5) {
            genes[g] = b.genes[g];
          }
        }
      }
      for (std::size_t g = 0; g < n; ++g) {
        const bool violating = !(a.valid && a.sol.parity_ok[g]);
        const double rate = violating ? options.mutation_rate * options.violation_boost
                                      : options.mutation_rate;
        if (unit(rng) < rate) {
          const double step = unit(rng);
          genes[g] += unit(rng) < 0.5 ? -step : step;
          genes[g] = std::clamp(genes[g], options.log2_min, options.log2_max);
        }
      }
      next[idx].genes = std::move(genes);
    }
    evaluate_all(next, 1);
    result.evaluations += pop - 1;
    current = std::move(next);
  }
}

}  // namespace spinitf
