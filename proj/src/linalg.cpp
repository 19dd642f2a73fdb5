#include "linalg.hpp"

#include <cmath>
#include <numbers>

namespace reachlp::linalg {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

double SplitMix64::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u = 0.0;
  do {
    u = uniform01();
  } while (u <= 0.0);
  const double v = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u));
  const double theta = 2.0 * std::numbers::pi * v;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

Eigen::VectorXd SplitMix64::unit_vector(int dim) {
  Eigen::VectorXd v(dim);
  double norm = 0.0;
  do {
    for (int i = 0; i < dim; ++i) v[i] = normal();
    norm = v.norm();
  } while (norm < 1e-12);
  return v / norm;
}

SquareSolve solve_square_with_cond(const Eigen::MatrixXd& m, const Eigen::VectorXd& rhs) {
  SquareSolve out;
  const int n = static_cast<int>(m.rows());
  // Augment with rhs and identity so one elimination yields x and M^-1.
  Eigen::MatrixXd aug(n, n + 1 + n);
  aug.leftCols(n) = m;
  aug.col(n) = rhs;
  aug.rightCols(n) = Eigen::MatrixXd::Identity(n, n);

  const double scale = m.cwiseAbs().maxCoeff();
  if (!(scale > 0.0) || !std::isfinite(scale)) return out;

  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(aug(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double v = std::abs(aug(r, col));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best <= 1e-14 * scale) return out;  // numerically singular
    if (piv != col) aug.row(piv).swap(aug.row(col));
    aug.row(col) /= aug(col, col);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = aug(r, col);
      if (f != 0.0) aug.row(r) -= f * aug.row(col);
    }
  }

  const double norm_m = m.cwiseAbs().colwise().sum().maxCoeff();
  const double norm_inv = aug.rightCols(n).cwiseAbs().colwise().sum().maxCoeff();
  out.singular = false;
  out.cond1 = norm_m * norm_inv;
  out.x = aug.col(n);
  return out;
}

double power_iteration_lambda_max(const Eigen::MatrixXd& s, double rel_tol, int max_iter) {
  const int n = static_cast<int>(s.rows());
  if (n == 0) return 0.0;
  if (s.cwiseAbs().maxCoeff() == 0.0) return 0.0;
  SplitMix64 rng(0x5eed00f1u);
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n).normalized();
  for (int i = 0; i < n; ++i) v[i] += 1e-3 * rng.uniform01();
  v.normalize();
  double lambda = v.dot(s * v);
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXd w = s * v;
    const double wn = w.norm();
    if (wn == 0.0) return 0.0;
    v = w / wn;
    const double next = v.dot(s * v);
    if (std::abs(next - lambda) <= rel_tol * std::max(1.0, std::abs(next))) return next;
    lambda = next;
  }
  return lambda;
}

double inverse_iteration_lambda_min(const Eigen::MatrixXd& spd, double rel_tol, int max_iter) {
  const int n = static_cast<int>(spd.rows());
  if (n == 0) return 0.0;
  Eigen::LLT<Eigen::MatrixXd> llt(spd);
  if (llt.info() != Eigen::Success) return 0.0;  // not positive definite
  SplitMix64 rng(0x5eed00f2u);
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n).normalized();
  for (int i = 0; i < n; ++i) v[i] += 1e-3 * rng.uniform01();
  v.normalize();
  double lambda = v.dot(spd * v);
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXd w = llt.solve(v);
    const double wn = w.norm();
    if (wn == 0.0) break;
    v = w / wn;
    const double next = v.dot(spd * v);
    if (std::abs(next - lambda) <= rel_tol * std::max(1.0, std::abs(next))) return next;
    lambda = next;
  }
  return lambda;
}

void first_combination(std::vector<int>& idx, int k) {
  idx.resize(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
}

bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

double halton(std::uint64_t index, std::uint64_t base) {
  double f = 1.0;
  double r = 0.0;
  while (index > 0) {
    f /= static_cast<double>(base);
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

Eigen::VectorXd sample_direction(int dim, std::uint64_t seed, std::uint64_t index) {
  if (dim == 2) {
    // Golden-angle rotation, phase-shifted by the seed.
    SplitMix64 rng(seed);
    const double phase = rng.uniform01();
    constexpr double golden = 0.6180339887498949;
    const double t = phase + golden * static_cast<double>(index);
    const double theta = 2.0 * std::numbers::pi * (t - std::floor(t));
    Eigen::VectorXd v(2);
    v << std::cos(theta), std::sin(theta);
    return v;
  }
  if (dim == 3) {
    // Halton(2,3) pair mapped area-preservingly onto the sphere.
    const std::uint64_t off = (seed % 100003ULL) + 1ULL;
    const double u = halton(index + off, 2);
    const double w = halton(index + off, 3);
    const double z = 1.0 - 2.0 * u;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double psi = 2.0 * std::numbers::pi * w;
    Eigen::VectorXd v(3);
    v << r * std::cos(psi), r * std::sin(psi), z;
    return v;
  }
  SplitMix64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
  return rng.unit_vector(dim);
}

}  // namespace reachlp::linalg
