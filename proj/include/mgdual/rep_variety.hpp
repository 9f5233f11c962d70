#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mgdual::rep {

/// Element of SU(2) as a unit quaternion w + xi + yj + zk.
struct UnitQuaternion {
  double w = 1, x = 0, y = 0, z = 0;

  static UnitQuaternion identity() { return {}; }
  static UnitQuaternion i() { return {0, 1, 0, 0}; }
  static UnitQuaternion j() { return {0, 0, 1, 0}; }
  static UnitQuaternion k() { return {0, 0, 0, 1}; }
  /// exp(angle * (ax i + ay j + az k)) for a unit axis.
  static UnitQuaternion exp(double ax, double ay, double az, double angle);

  UnitQuaternion inverse() const { return {w, -x, -y, -z}; }
  double norm() const;
  UnitQuaternion normalized() const;
  /// Euclidean distance in R^4.
  double distance(const UnitQuaternion& o) const;

  friend UnitQuaternion operator*(const UnitQuaternion& p, const UnitQuaternion& q);
  friend bool operator==(const UnitQuaternion&, const UnitQuaternion&) = default;
};

/// (A_1..A_g, B_1..B_g) in SU(2)^(2g).
struct SU2Tuple {
  std::vector<UnitQuaternion> A;
  std::vector<UnitQuaternion> B;

  int genus() const { return static_cast<int>(A.size()); }
  /// Component c in 0..2g-1: A's first, then B's.
  UnitQuaternion& component(std::size_t c) { return c < A.size() ? A[c] : B[c - A.size()]; }
  const UnitQuaternion& component(std::size_t c) const {
    return c < A.size() ? A[c] : B[c - A.size()];
  }

  friend bool operator==(const SU2Tuple&, const SU2Tuple&) = default;
};

/// Product of commutators [A_1,B_1]...[A_g,B_g], left to right.
UnitQuaternion mu(const SU2Tuple& t);

/// Distance from mu(t) to -1.
double mu_residual(const SU2Tuple& t);

/// A = (i, 1, ..., 1), B = (j, 1, ..., 1). In 2x2 matrices i is
/// diag(i, -i) and j is an imaginary unit orthogonal to it, e.g.
/// [[0, i], [i, 0]] up to conjugation; [i, j] = -1.
SU2Tuple base_point(int genus);

/// Point of mu^-1(-1): the base handle conjugated by a uniform u, the other
/// handles commuting pairs exp(s n), exp(t n) around a random axis n.
/// Deterministic in the seed.
SU2Tuple random_fiber_point(int genus, std::uint64_t seed);

/// u t u^-1 componentwise.
SU2Tuple conjugate(const SU2Tuple& t, const UnitQuaternion& u);

/// Uniform element of SU(2) from the given seed.
UnitQuaternion random_unit(std::uint64_t seed);

inline constexpr double kDefaultStep = 1e-5;
inline constexpr double kRelativeRankCutoff = 1e-6;

/// Numerical rank of d(mu) from central differences along X -> X exp(+-h e)
/// for each component X and e in {i, j, k}, read in R^4. Singular values
/// above 1e-6 * sigma_max count. Throws StepTooLarge for h > 1e-2 (or h <= 0)
/// and DegenerateInput when sigma_max < 1e-12.
int jacobian_rank(const SU2Tuple& t, double h = kDefaultStep);

/// Singular values of the central-difference Jacobian, descending.
std::vector<double> jacobian_singular_values(const SU2Tuple& t, double h = kDefaultStep);

/// Rank of q -> (q X - X q) over all components X, as a map R^4 -> R^(8g).
/// Rank 3 means only real quaternions commute with the tuple, so its
/// stabilizer under conjugation is the center {+-1}.
int stabilizer_rank(const SU2Tuple& t);

struct Dimensions {
  int ambient = 0;
  int fiber = 0;
  int quotient = 0;

  friend bool operator==(const Dimensions&, const Dimensions&) = default;
};

/// ambient = 6g, fiber = ambient - rank d(mu), quotient = fiber - stabilizer
/// rank, with ranks measured at base_point(g).
Dimensions dimension_report(int genus);

struct SampleFailure {
  std::uint64_t seed = 0;
  std::string reason;
};

struct RepReport {
  int genus = 1;
  int samples = 0;
  std::uint64_t seed = 0;
  double tol = 1e-12;
  double mu_residual_max = 0;
  std::map<int, int> jacobian_rank_histogram;
  std::map<int, int> stabilizer_rank_histogram;
  Dimensions dims;
  std::vector<SampleFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// Runs residual, Jacobian rank and stabilizer rank checks on `samples`
/// fiber points with seeds seed, seed+1, ...; a sample fails when its
/// residual exceeds tol or either rank differs from 3.
RepReport verify_rep(int genus, int samples, std::uint64_t seed, double tol = 1e-12);

}  // namespace mgdual::rep
