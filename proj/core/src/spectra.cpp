#include "spinitf/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace spinitf {

namespace {

// cos(2 pi m / n) with m reduced modulo n first, so large products k*(i-j)
// do not lose accuracy.
double cos_fraction(long m, long n) {
  m %= n;
  if (m < 0) m += n;
  return std::cos(2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n));
}

}  // namespace

HighReal CosineForm::evaluate() const {
  return 2 * boost::multiprecision::cos(high_pi() * HighReal(numerator) / HighReal(denominator)) +
         HighReal(shift);
}

HighReal EigenSystem::high_precision_value(std::size_t k) const {
  if (exact) return (*exact)[k].evaluate();
  return HighReal(values[k]);
}

EigenSystem ring_eigensystem(std::size_t n, CouplingKind kind) {
  if (n < 3) throw InvalidTopology("ring eigensystem needs n >= 3");
  const long ln = static_cast<long>(n);
  const auto m = static_cast<Eigen::Index>(n);
  const double shift = kind == CouplingKind::heisenberg ? 1.0 : 0.0;

  // k = 0..floor(n/2) enumerates the distinct values in descending order.
  const long kmax = ln / 2;
  EigenSystem es;
  es.source = SpectrumSource::analytic_ring;
  es.exact.emplace();
  for (long k = kmax; k >= 0; --k) {
    const bool single = (k == 0) || (2 * k == ln);
    const double weight = single ? 1.0 / ln : 2.0 / ln;
    Matrix p(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = i; j < m; ++j) {
        p(i, j) = p(j, i) = weight * cos_fraction(k * (j - i), ln);
      }
    }
    es.values.push_back(2.0 * cos_fraction(k, ln) + shift);
    es.projectors.push_back(std::move(p));
    es.multiplicities.push_back(single ? 1 : 2);
    es.exact->push_back(CosineForm{2 * k, ln, shift});
  }
  return es;
}

EigenSystem chain_eigensystem(std::size_t n, double shift) {
  if (n < 2) throw InvalidTopology("chain eigensystem needs n >= 2");
  const long len = static_cast<long>(n) + 1;
  const auto m = static_cast<Eigen::Index>(n);
  EigenSystem es;
  es.source = SpectrumSource::analytic_chain;
  es.exact.emplace();
  // k = n..1 gives ascending eigenvalues.
  for (long k = static_cast<long>(n); k >= 1; --k) {
    Vector v(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      v(i) = std::sqrt(2.0 / len) *
             std::sin(std::numbers::pi * static_cast<double>((k * (i + 1)) % (2 * len)) / len);
    }
    es.values.push_back(2.0 * std::cos(std::numbers::pi * static_cast<double>(k) / len) + shift);
    const Matrix p = v * v.transpose();
    es.projectors.push_back(0.5 * (p + p.transpose()));
    es.multiplicities.push_back(1);
    es.exact->push_back(CosineForm{k, len, shift});
  }
  return es;
}

Diagonalization jacobi_diagonalize(const Matrix& h, int max_sweeps) {
  const Eigen::Index n = h.rows();
  if (n != h.cols()) throw ContractViolation("matrix must be square");
  const double scale = std::max(h.cwiseAbs().maxCoeff(), 1e-300);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (std::abs(h(i, j) - h(j, i)) > 1e-14 * scale) {
        throw ContractViolation("numeric_eigensystem requires a symmetric matrix");
      }
    }
  }

  Matrix a = h;
  Matrix v = Matrix::Identity(n, n);
  Diagonalization out;
  for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) off += std::abs(a(p, q));
    }
    if (off == 0.0) {
      out.sweeps = sweep - 1;
      break;
    }
    // Rotations below this magnitude are skipped during the first sweeps.
    const double threshold = sweep < 4 ? 0.2 * off / static_cast<double>(n * n) : 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        const double g = 100.0 * std::abs(apq);
        if (sweep > 4 && std::abs(a(p, p)) + g == std::abs(a(p, p)) &&
            std::abs(a(q, q)) + g == std::abs(a(q, q))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        if (std::abs(apq) <= threshold) continue;

        const double diff = a(q, q) - a(p, p);
        double t;
        if (std::abs(diff) + g == std::abs(diff)) {
          t = apq / diff;
        } else {
          const double theta = 0.5 * diff / apq;
          t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (Eigen::Index r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
          a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
        }
        for (Eigen::Index r = 0; r < n; ++r) {
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = vrp - s * (vrq + tau * vrp);
          v(r, q) = vrq + s * (vrp - tau * vrq);
        }
      }
    }
    if (sweep == max_sweeps) {
      double rest = 0.0;
      for (Eigen::Index p = 0; p < n; ++p) {
        for (Eigen::Index q = p + 1; q < n; ++q) rest += std::abs(a(p, q));
      }
      if (rest != 0.0) {
        throw ConvergenceError("Jacobi eigensolver did not converge in " +
                               std::to_string(max_sweeps) + " sweeps");
      }
      out.sweeps = sweep;
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index x, Eigen::Index y) { return a(x, x) < a(y, y); });
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = order[static_cast<std::size_t>(k)];
    out.values(k) = a(src, src);
    out.vectors.col(k) = v.col(src);
  }
  return out;
}

EigenSystem numeric_eigensystem(const Matrix& h, const JacobiOptions& options) {
  const Diagonalization d = jacobi_diagonalize(h, options.max_sweeps);
  const Eigen::Index n = d.values.size();
  const double largest = n == 0 ? 0.0 : d.values.cwiseAbs().maxCoeff();
  const double tol = options.cluster_tol.value_or(largest > 0.0 ? 1e-9 * largest : 1e-9);
  if (!(tol > 0.0)) throw ArgumentError("cluster_tol must be positive");

  EigenSystem es;
  es.source = SpectrumSource::numeric;
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && d.values(end) - d.values(end - 1) < tol) ++end;
    const Eigen::Index count = end - start;
    const Matrix block = d.vectors.middleCols(start, count);
    es.values.push_back(d.values.segment(start, count).mean());
    const Matrix p = block * block.transpose();
    es.projectors.push_back(0.5 * (p + p.transpose()));
    es.multiplicities.push_back(static_cast<int>(count));
    start = end;
  }
  return es;
}

EigenSystem eigensystem(const SpinNetwork& net, const JacobiOptions& options) {
  const SingleExcitationHamiltonian h = single_excitation_hamiltonian(net);
  switch (h.structure_tag) {
    case StructureTag::circulant_ring:
      return ring_eigensystem(net.size(), net.kind());
    case StructureTag::toeplitz_chain:
      return chain_eigensystem(net.size(), h.heisenberg_shift);
    default:
      return numeric_eigensystem(h.matrix, options);
  }
}

bool interlacing_check(std::size_t n) {
  if (n < 4) throw ArgumentError("interlacing_check needs n >= 4");
  auto descending = [](std::size_t size) {
    EigenSystem es = ring_eigensystem(size);
    std::vector<double> v = es.values;
    std::reverse(v.begin(), v.end());
    return v;
  };
  const std::vector<double> a = descending(n);
  const std::vector<double> b = descending(n - 1);
  constexpr double tol = 1e-12;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (k >= a.size() || b[k] > a[k] + tol) return false;
    if (k + 1 < a.size() && b[k] < a[k + 1] - tol) return false;
  }
  return true;
}

}  // namespace spinitf
