#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace reachlp::linalg {

// Deterministic 64-bit generator (splitmix64); used wherever reproducible
// pseudo-random data is needed so results do not depend on the standard
// library's distribution implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  double uniform01();                       // in [0,1)
  double uniform(double lo, double hi);     // in [lo,hi)
  double normal();                          // standard normal (Box-Muller)
  Eigen::VectorXd unit_vector(int dim);     // uniform direction on the sphere

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

struct SquareSolve {
  bool singular = true;
  double cond1 = 0.0;   // 1-norm condition estimate, valid when !singular
  Eigen::VectorXd x;
};

// Gaussian elimination with partial pivoting on a small square system.
// Computes the inverse alongside the solution so callers can reject
// ill-conditioned bases (cond1 = ||M||_1 * ||M^-1||_1).
SquareSolve solve_square_with_cond(const Eigen::MatrixXd& m, const Eigen::VectorXd& rhs);

// Extreme eigenvalues of a symmetric positive (semi)definite matrix via
// power iteration / inverse iteration, relative tolerance rel_tol.
double power_iteration_lambda_max(const Eigen::MatrixXd& s, double rel_tol = 1e-10,
                                  int max_iter = 200000);
double inverse_iteration_lambda_min(const Eigen::MatrixXd& spd, double rel_tol = 1e-10,
                                    int max_iter = 200000);

// Lexicographic k-combinations of {0,...,n-1}. Returns false when exhausted.
bool next_combination(std::vector<int>& idx, int n);
void first_combination(std::vector<int>& idx, int k);

double halton(std::uint64_t index, std::uint64_t base);

// Deterministic unit directions: golden-angle sequence in 2-d, Halton sphere
// in 3-d, seeded Gaussian directions beyond.
Eigen::VectorXd sample_direction(int dim, std::uint64_t seed, std::uint64_t index);

}  // namespace reachlp::linalg
