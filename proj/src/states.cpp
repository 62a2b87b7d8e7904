#include "gmekit/states.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace gmekit {

namespace {

void require_dim(int d) {
  if (d < 2) throw InvalidArgument("local dimension must be >= 2, got " + std::to_string(d));
}

MatrixXcd projector(const VectorXcd& v) { return v * v.adjoint(); }

double max_unitarity_defect(const MatrixXcd& u) {
  const auto n = u.rows();
  return (u.adjoint() * u - MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

}  // namespace

DensityState::DensityState(int d, MatrixXcd rho, double tolerance, bool purity_hint)
    : d_(d), rho_(std::move(rho)), tolerance_(tolerance), purity_hint_(purity_hint) {
  require_dim(d);
  const int n = ipow(d, 3);
  if (rho_.rows() != n || rho_.cols() != n)
    throw InvalidArgument("density matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  if (!rho_.allFinite()) throw InvalidArgument("density matrix has non-finite entries");

  const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tolerance_)
    throw InvalidArgument("density matrix is not Hermitian (deviation " + std::to_string(herm) + ")");
  const Complex tr = rho_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tolerance_)
    throw InvalidArgument("density matrix trace is " + std::to_string(tr.real()) + ", expected 1");

  rho_ = 0.5 * (rho_ + rho_.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(rho_, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tolerance_)
    throw InvalidArgument("density matrix is not positive semidefinite (min eigenvalue " +
                          std::to_string(min_eig) + ")");
}

double DensityState::purity() const { return (rho_ * rho_).trace().real(); }

std::string_view to_string(Bipartition p) {
  switch (p) {
    case Bipartition::A_BC: return "1|23";
    case Bipartition::B_AC: return "2|13";
    case Bipartition::C_AB: return "3|12";
  }
  return "?";
}

std::string_view to_string(CanonicalFamily f) {
  switch (f) {
    case CanonicalFamily::Product: return "product";
    case CanonicalFamily::DiagPair: return "diag-pair";
    case CanonicalFamily::CrossPair: return "cross-pair";
  }
  return "?";
}

LocalUnitaryTriple LocalUnitaryTriple::identity(int d) {
  return {{MatrixXcd::Identity(d, d), MatrixXcd::Identity(d, d), MatrixXcd::Identity(d, d)}};
}

MatrixXcd LocalUnitaryTriple::kron() const {
  const auto d = u[0].rows();
  const auto n = d * d * d;
  MatrixXcd out(n, n);
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index ap = 0; ap < d; ++ap)
      for (Eigen::Index b = 0; b < d; ++b)
        for (Eigen::Index bp = 0; bp < d; ++bp)
          out.block((a * d + b) * d, (ap * d + bp) * d, d, d) = u[0](a, ap) * u[1](b, bp) * u[2];
  return out;
}

VectorXcd ghz_amplitudes() { return gghz_amplitudes(2); }

VectorXcd w_amplitudes() {
  VectorXcd v = VectorXcd::Zero(8);
  v(1) = v(2) = v(4) = 1.0 / std::sqrt(3.0);
  return v;
}

VectorXcd gghz_amplitudes(int d) {
  require_dim(d);
  VectorXcd v = VectorXcd::Zero(ipow(d, 3));
  for (int i = 0; i < d; ++i) v(i * d * d + i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  return v;
}

VectorXcd basis_ket(int d, int a, int b, int c) {
  require_dim(d);
  for (int l : {a, b, c})
    if (l < 0 || l >= d) throw InvalidArgument("level out of range in basis_ket");
  VectorXcd v = VectorXcd::Zero(ipow(d, 3));
  v(a * d * d + b * d + c) = 1.0;
  return v;
}

DensityState pure_state(int d, const VectorXcd& amplitudes) {
  require_dim(d);
  if (amplitudes.size() != ipow(d, 3))
    throw InvalidArgument("amplitude vector has length " + std::to_string(amplitudes.size()) +
                          ", expected " + std::to_string(ipow(d, 3)));
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw InvalidArgument("amplitude vector has zero norm");
  return DensityState(d, projector(amplitudes / norm), kDefaultStateTolerance, true);
}

DensityState maximally_mixed(int d) {
  require_dim(d);
  const int n = ipow(d, 3);
  return DensityState(d, MatrixXcd::Identity(n, n) / static_cast<double>(n));
}

DensityState white_noise_mix(const DensityState& psi, double visibility) {
  if (!(visibility >= 0.0 && visibility <= 1.0))
    throw InvalidArgument("visibility must lie in [0,1], got " + std::to_string(visibility));
  if (std::abs(psi.purity() - 1.0) > psi.tolerance())
    throw InvalidArgument("white-noise mixing expects a pure input state");
  const int n = psi.hilbert_dim();
  MatrixXcd rho = (1.0 - visibility) / n * MatrixXcd::Identity(n, n) + visibility * psi.matrix();
  return DensityState(psi.dim(), std::move(rho), psi.tolerance(), visibility == 1.0);
}

DensityState canonical_biseparable(int d, CanonicalFamily family, double x) {
  require_dim(d);
  if (!(x >= 0.0 && x <= 1.0)) throw InvalidArgument("canonical parameter x must lie in [0,1]");
  const double y = std::sqrt(std::max(0.0, 1.0 - x * x));
  const int top = d - 1;
  const int second = d - 2;
  VectorXcd v;
  switch (family) {
    case CanonicalFamily::Product:
      v = basis_ket(d, top, top, top);
      break;
    case CanonicalFamily::DiagPair:
      v = x * basis_ket(d, top, top, top) + y * basis_ket(d, top, second, second);
      break;
    case CanonicalFamily::CrossPair:
      v = x * basis_ket(d, top, top, second) + y * basis_ket(d, top, second, top);
      break;
    default:
      throw InvalidArgument("unknown canonical family");
  }
  return DensityState(d, projector(v), kDefaultStateTolerance, true);
}

MatrixXcd haar_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  MatrixXcd z(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) z(i, j) = Complex(normal(rng), normal(rng)) / std::sqrt(2.0);
  Eigen::HouseholderQR<MatrixXcd> qr(z);
  MatrixXcd q = qr.householderQ();
  const MatrixXcd& r = qr.matrixQR();
  for (int i = 0; i < n; ++i) {
    const Complex rii = r(i, i);
    const double mag = std::abs(rii);
    if (mag > 0.0) q.col(i) *= rii / mag;
  }
  return q;
}

VectorXcd haar_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  VectorXcd v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(normal(rng), normal(rng));
  return v / v.norm();
}

DensityState sample_biseparable_pure(int d, Bipartition partition, Seed seed) {
  require_dim(d);
  std::mt19937_64 rng(seed);
  const VectorXcd alpha = haar_vector(d, rng);
  const VectorXcd beta = haar_vector(d * d, rng);
  VectorXcd psi(ipow(d, 3));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        Complex amp;
        switch (partition) {
          case Bipartition::A_BC: amp = alpha(a) * beta(b * d + c); break;
          case Bipartition::B_AC: amp = alpha(b) * beta(a * d + c); break;
          case Bipartition::C_AB: amp = alpha(c) * beta(a * d + b); break;
        }
        psi(a * d * d + b * d + c) = amp;
      }
  return DensityState(d, projector(psi / psi.norm()), kDefaultStateTolerance, true);
}

DensityState sample_biseparable_mixed(int d, int n_components, Seed seed) {
  require_dim(d);
  if (n_components < 1) throw InvalidArgument("n_components must be >= 1");
  if (n_components == 1) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, 2);
    return sample_biseparable_pure(d, static_cast<Bipartition>(pick(rng)), derive_seed(seed, 0));
  }
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  std::uniform_int_distribution<int> pick(0, 2);
  std::vector<double> w(n_components);
  double total = 0.0;
  for (auto& wi : w) total += (wi = expo(rng));

  const int n = ipow(d, 3);
  MatrixXcd rho = MatrixXcd::Zero(n, n);
  for (int i = 0; i < n_components; ++i) {
    const auto part = static_cast<Bipartition>(pick(rng));
    rho += (w[i] / total) * sample_biseparable_pure(d, part, derive_seed(seed, i)).matrix();
  }
  return DensityState(d, std::move(rho));
}

DensityState apply_local_unitary(const DensityState& rho, const LocalUnitaryTriple& u) {
  const int d = rho.dim();
  for (const auto& ui : u.u) {
    if (ui.rows() != d || ui.cols() != d)
      throw InvalidArgument("local unitary dimension does not match the state");
    if (max_unitarity_defect(ui) > 1e-10) throw InvalidArgument("local operator is not unitary");
  }
  const MatrixXcd big = u.kron();
  return DensityState(d, big * rho.matrix() * big.adjoint(), rho.tolerance(), rho.purity_hint());
}

LocalUnitaryTriple random_local_unitary(int d, Seed seed) {
  require_dim(d);
  std::mt19937_64 rng(seed);
  LocalUnitaryTriple t;
  for (auto& ui : t.u) ui = haar_unitary(d, rng);
  return t;
}

}  // namespace gmekit
