#include "mgdual/rep_variety.hpp"

#include "mgdual/errors.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

namespace mgdual::rep {

UnitQuaternion UnitQuaternion::exp(double ax, double ay, double az, double angle) {
  const double s = std::sin(angle);
  return {std::cos(angle), s * ax, s * ay, s * az};
}

double UnitQuaternion::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

UnitQuaternion UnitQuaternion::normalized() const {
  const double n = norm();
  return {w / n, x / n, y / n, z / n};
}

double UnitQuaternion::distance(const UnitQuaternion& o) const {
  return UnitQuaternion{w - o.w, x - o.x, y - o.y, z - o.z}.norm();
}

UnitQuaternion operator*(const UnitQuaternion& p, const UnitQuaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

namespace {

void check_genus(int genus) {
  if (genus < 1) throw GenusOutOfRange("genus must be >= 1, got " + std::to_string(genus));
}

// raw product, no unit-norm assumption
UnitQuaternion commutator(const UnitQuaternion& a, const UnitQuaternion& b) {
  return a * b * a.inverse() * b.inverse();
}

int numerical_rank(const Eigen::VectorXd& sigma) {
  if (sigma.size() == 0 || sigma(0) < 1e-12) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) / sigma(0) > kRelativeRankCutoff) ++rank;
  return rank;
}

Eigen::VectorXd to_vector(const UnitQuaternion& q) { return Eigen::Vector4d(q.w, q.x, q.y, q.z); }

Eigen::VectorXd singular_values(const Eigen::MatrixXd& m) {
  return Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues();
}

Eigen::MatrixXd central_jacobian(const SU2Tuple& t, double h) {
  if (!(h > 0) || h > 1e-2)
    throw StepTooLarge("finite-difference step must lie in (0, 1e-2], got " + std::to_string(h));
  const std::size_t n = 2 * t.A.size();
  const std::array<UnitQuaternion, 3> directions{UnitQuaternion::i(), UnitQuaternion::j(),
                                                 UnitQuaternion::k()};
  Eigen::MatrixXd jac(4, static_cast<Eigen::Index>(3 * n));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t d = 0; d < 3; ++d) {
      const auto& e = directions[d];
      SU2Tuple plus = t, minus = t;
      plus.component(c) = t.component(c) * UnitQuaternion::exp(e.x, e.y, e.z, h);
      minus.component(c) = t.component(c) * UnitQuaternion::exp(e.x, e.y, e.z, -h);
      jac.col(static_cast<Eigen::Index>(3 * c + d)) =
          (to_vector(mu(plus)) - to_vector(mu(minus))) / (2 * h);
    }
  }
  return jac;
}

}  // namespace

UnitQuaternion mu(const SU2Tuple& t) {
  UnitQuaternion product;
  for (std::size_t k = 0; k < t.A.size(); ++k) product = product * commutator(t.A[k], t.B[k]);
  return product.normalized();
}

double mu_residual(const SU2Tuple& t) { return mu(t).distance({-1, 0, 0, 0}); }

SU2Tuple base_point(int genus) {
  check_genus(genus);
  SU2Tuple t;
  t.A.assign(static_cast<std::size_t>(genus), UnitQuaternion::identity());
  t.B.assign(static_cast<std::size_t>(genus), UnitQuaternion::identity());
  t.A[0] = UnitQuaternion::i();
  t.B[0] = UnitQuaternion::j();
  return t;
}

UnitQuaternion random_unit(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  UnitQuaternion q{normal(rng), normal(rng), normal(rng), normal(rng)};
  return q.normalized();
}

SU2Tuple conjugate(const SU2Tuple& t, const UnitQuaternion& u) {
  SU2Tuple out = t;
  for (auto& q : out.A) q = (u * q * u.inverse()).normalized();
  for (auto& q : out.B) q = (u * q * u.inverse()).normalized();
  return out;
}

SU2Tuple random_fiber_point(int genus, std::uint64_t seed) {
  check_genus(genus);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);

  const UnitQuaternion u = UnitQuaternion{normal(rng), normal(rng), normal(rng), normal(rng)}.normalized();
  SU2Tuple t = conjugate(base_point(genus), u);
  for (std::size_t k = 1; k < t.A.size(); ++k) {
    UnitQuaternion axis = UnitQuaternion{0, normal(rng), normal(rng), normal(rng)}.normalized();
    const double s = angle(rng), r = angle(rng);
    t.A[k] = UnitQuaternion::exp(axis.x, axis.y, axis.z, s);
    t.B[k] = UnitQuaternion::exp(axis.x, axis.y, axis.z, r);
  }
  return t;
}

std::vector<double> jacobian_singular_values(const SU2Tuple& t, double h) {
  Eigen::VectorXd sigma = singular_values(central_jacobian(t, h));
  return {sigma.data(), sigma.data() + sigma.size()};
}

int jacobian_rank(const SU2Tuple& t, double h) {
  Eigen::VectorXd sigma = singular_values(central_jacobian(t, h));
  if (sigma(0) < 1e-12) throw DegenerateInput("Jacobian of mu vanishes numerically");
  return numerical_rank(sigma);
}

int stabilizer_rank(const SU2Tuple& t) {
  const std::size_t n = 2 * t.A.size();
  const std::array<UnitQuaternion, 4> basis{UnitQuaternion{1, 0, 0, 0}, UnitQuaternion::i(),
                                            UnitQuaternion::j(), UnitQuaternion::k()};
  Eigen::MatrixXd map(static_cast<Eigen::Index>(4 * n), 4);
  for (std::size_t c = 0; c < n; ++c) {
    const UnitQuaternion& x = t.component(c);
    for (std::size_t b = 0; b < 4; ++b) {
      const UnitQuaternion left = basis[b] * x, right = x * basis[b];
      map.block<4, 1>(static_cast<Eigen::Index>(4 * c), static_cast<Eigen::Index>(b)) =
          Eigen::Vector4d(left.w - right.w, left.x - right.x, left.y - right.y, left.z - right.z);
    }
  }
  return numerical_rank(singular_values(map));
}

Dimensions dimension_report(int genus) {
  const SU2Tuple t = base_point(genus);
  Dimensions d;
  d.ambient = 6 * genus;
  d.fiber = d.ambient - jacobian_rank(t);
  d.quotient = d.fiber - stabilizer_rank(t);
  return d;
}

RepReport verify_rep(int genus, int samples, std::uint64_t seed, double tol) {
  check_genus(genus);
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (!(tol > 0)) throw std::invalid_argument("tol must be > 0");
  RepReport report;
  report.genus = genus;
  report.samples = samples;
  report.seed = seed;
  report.tol = tol;
  report.dims = dimension_report(genus);
  for (int s = 0; s < samples; ++s) {
    const std::uint64_t sample_seed = seed + static_cast<std::uint64_t>(s);
    const SU2Tuple t = random_fiber_point(genus, sample_seed);
    const double residual = mu_residual(t);
    report.mu_residual_max = std::max(report.mu_residual_max, residual);
    const int jr = jacobian_rank(t);
    const int sr = stabilizer_rank(t);
    ++report.jacobian_rank_histogram[jr];
    ++report.stabilizer_rank_histogram[sr];
    if (residual > tol)
      report.failures.push_back({sample_seed, "mu residual " + std::to_string(residual)});
    if (jr != 3) report.failures.push_back({sample_seed, "jacobian rank " + std::to_string(jr)});
    if (sr != 3) report.failures.push_back({sample_seed, "stabilizer rank " + std::to_string(sr)});
  }
  return report;
}

}  // namespace mgdual::rep
