#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace gmekit {

using Complex = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

using Seed = std::uint64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad caller input: dimensions, indices, ranges, malformed files.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A computed quantity violated a numerical invariant (e.g. a Hermitian
// expectation came out with a non-negligible imaginary part).
class NumericalIntegrityError : public Error {
 public:
  using Error::Error;
};

// d^n for small non-negative n.
constexpr int ipow(int base, int exp) {
  int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Derives an independent 64-bit seed for stream `index` from `master`
// (splitmix64 finalizer).
constexpr Seed derive_seed(Seed master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace gmekit
