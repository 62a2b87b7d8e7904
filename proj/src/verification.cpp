#include "gmekit/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include <Eigen/SVD>

#include "gmekit/criteria.hpp"

namespace gmekit {

VectorXcd SchmidtForm::reconstruct() const {
  if (coefficients.empty()) return {};
  const auto dl = left_basis.front().size();
  const auto dr = right_basis.front().size();
  VectorXcd out = VectorXcd::Zero(dl * dr);
  for (std::size_t k = 0; k < coefficients.size(); ++k)
    for (Eigen::Index i = 0; i < dl; ++i)
      out.segment(i * dr, dr) += coefficients[k] * left_basis[k](i) * right_basis[k];
  return out;
}

SchmidtForm schmidt_decompose(const VectorXcd& psi, int dim_left, int dim_right) {
  if (dim_left < 1 || dim_right < 1 || psi.size() != static_cast<Eigen::Index>(dim_left) * dim_right)
    throw InvalidArgument("vector length does not match the split dimensions");
  if (std::abs(psi.norm() - 1.0) > 1e-8) throw InvalidArgument("Schmidt decomposition expects a unit vector");

  MatrixXcd m(dim_left, dim_right);
  for (int i = 0; i < dim_left; ++i)
    for (int j = 0; j < dim_right; ++j) m(i, j) = psi(i * dim_right + j);
  Eigen::JacobiSVD<MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);

  SchmidtForm form;
  const auto& s = svd.singularValues();
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    form.coefficients.push_back(s(k));
    form.left_basis.push_back(svd.matrixU().col(k));
    form.right_basis.push_back(svd.matrixV().col(k).conjugate());
  }
  return form;
}

VectorXcd bring_party_first(const VectorXcd& psi, int d, Bipartition cut) {
  if (psi.size() != ipow(d, 3)) throw InvalidArgument("vector length does not match d^3");
  VectorXcd out(psi.size());
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        const Complex amp = psi(a * d * d + b * d + c);
        switch (cut) {
          case Bipartition::A_BC: out(a * d * d + b * d + c) = amp; break;
          case Bipartition::B_AC: out(b * d * d + a * d + c) = amp; break;
          case Bipartition::C_AB: out(c * d * d + a * d + b) = amp; break;
        }
      }
  return out;
}

VectorXd jacobi_eigenvalues(MatrixXd a) {
  const auto n = a.rows();
  if (a.cols() != n) throw InvalidArgument("jacobi_eigenvalues needs a square matrix");
  const double scale = std::max(a.cwiseAbs().maxCoeff(), 1e-300);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(off) <= 1e-16 * scale) break;

    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
  }
  VectorXd eig = a.diagonal();
  std::sort(eig.data(), eig.data() + eig.size());
  return eig;
}

double trace_norm_oracle(const MatrixXd& m) {
  if (!m.allFinite()) throw InvalidArgument("trace_norm_oracle: matrix has non-finite entries");
  if (m.size() == 0) return 0.0;
  const MatrixXd gram = m.rows() <= m.cols() ? MatrixXd(m * m.transpose()) : MatrixXd(m.transpose() * m);
  const VectorXd eig = jacobi_eigenvalues(gram);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < eig.size(); ++i) sum += std::sqrt(std::max(eig(i), 0.0));
  return sum;
}

double canonical_norm_formula(int d, CanonicalFamily family, double x) {
  if (d < 2) throw InvalidArgument("local dimension must be >= 2");
  if (!(x >= 0.0 && x <= 1.0)) throw InvalidArgument("canonical parameter x must lie in [0,1]");
  double xy2 = 0.0;
  switch (family) {
    case CanonicalFamily::Product: break;
    case CanonicalFamily::DiagPair:
    case CanonicalFamily::CrossPair: xy2 = x * x * (1.0 - x * x); break;
    default: throw InvalidArgument("unsupported canonical family");
  }
  const double dd = d;
  if (d == 2) return std::sqrt(1.0 + 8.0 * xy2);
  return dd * dd * std::sqrt(dd - 1.0) / (2.0 * std::sqrt(2.0)) * std::sqrt(1.0 / dd + dd - 2.0 + 4.0 * xy2);
}

SupremumResult canonical_family_supremum(int d, CanonicalFamily family, int points) {
  if (points < 1) throw InvalidArgument("need at least one grid point");
  const auto basis = GeneratorBasis::build(d, Scaling::PaperScaled);
  SupremumResult best{-1.0, 0.0};
  const double denom = points > 1 ? points - 1.0 : 1.0;
  for (int i = 0; i < points; ++i) {
    const double x = points > 1 ? i / denom : 0.0;
    const double norm = full_tensor_norm(canonical_biseparable(d, family, x), basis);
    if (norm > best.max_norm) best = {norm, x};
  }
  return best;
}

int scan_threads() {
  if (const char* env = std::getenv("GME_KIT_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Runs body(i) for i in [0, n) across workers in contiguous ranges; each
// worker folds its results with max.
template <typename Body>
double parallel_max(long n, Body body) {
  if (n <= 0) return 0.0;
  const int workers = static_cast<int>(std::min<long>(scan_threads(), n));
  std::vector<double> partial(workers, 0.0);
  std::vector<std::thread> pool;
  const long chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const long lo = w * chunk;
      const long hi = std::min(n, lo + chunk);
      double m = 0.0;
      for (long i = lo; i < hi; ++i) m = std::max(m, body(i));
      partial[w] = m;
    });
  }
  for (auto& t : pool) t.join();
  return *std::max_element(partial.begin(), partial.end());
}

}  // namespace

double lu_invariance_scan(const DensityState& rho, int n_trials, Seed seed) {
  if (n_trials < 1) throw InvalidArgument("n_trials must be >= 1");
  const auto basis = GeneratorBasis::build(rho.dim(), Scaling::PaperScaled);
  const double base = full_tensor_norm(rho, basis);
  return parallel_max(n_trials, [&](long i) {
    const auto u = random_local_unitary(rho.dim(), derive_seed(seed, static_cast<std::uint64_t>(i)));
    return std::abs(full_tensor_norm(apply_local_unitary(rho, u), basis) - base);
  });
}

BiseparableScanResult biseparable_bound_scan(int d, long n_pure, long n_mixed, Seed seed) {
  if (n_pure < 1 || n_mixed < 1) throw InvalidArgument("sample counts must be >= 1");
  const auto basis = GeneratorBasis::build(d, Scaling::PaperScaled);
  BiseparableScanResult r;
  r.d = d;
  r.n_pure = n_pure;
  r.n_mixed = n_mixed;
  r.seed = seed;
  r.threshold = thm2_threshold(d);

  const Seed pure_stream = derive_seed(seed, 0);
  const Seed mixed_stream = derive_seed(seed, 1);
  for (int cut = 0; cut < 3; ++cut) {
    // Samples with i % 3 == cut use that partition.
    const long count = (n_pure - cut + 2) / 3;
    r.max_pure_by_cut[cut] = parallel_max(count, [&](long k) {
      const long i = 3 * k + cut;
      const auto rho = sample_biseparable_pure(d, static_cast<Bipartition>(cut),
                                               derive_seed(pure_stream, static_cast<std::uint64_t>(i)));
      return full_tensor_norm(rho, basis);
    });
  }
  r.max_pure = *std::max_element(r.max_pure_by_cut.begin(), r.max_pure_by_cut.end());
  r.max_mixed = parallel_max(n_mixed, [&](long i) {
    const int components = 2 + static_cast<int>(i % 7);
    const auto rho = sample_biseparable_mixed(d, components,
                                              derive_seed(mixed_stream, static_cast<std::uint64_t>(i)));
    return full_tensor_norm(rho, basis);
  });
  r.pass = r.max_pure <= r.threshold + 1e-9 && r.max_mixed <= r.threshold + 1e-9;
  return r;
}

}  // namespace gmekit
