#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "poslab/point_config.hpp"
#include "poslab/radial_kernel.hpp"

namespace poslab {

enum class Subspace { Full, SumZero };
enum class VerdictStatus { Certified, Violated };

std::string subspace_name(Subspace s);
std::string status_name(VerdictStatus s);

/// Dense symmetric matrix of kernel values with provenance. Symmetry is
/// exact: each pair is evaluated once.
struct SymMatrix {
  Eigen::MatrixXd mat;
  std::string kernel_desc;
  std::string config_desc;

  int order() const { return static_cast<int>(mat.rows()); }
  nlohmann::ordered_json to_json() const;
};

struct PositivityVerdict {
  VerdictStatus status = VerdictStatus::Certified;
  double min_eigenvalue = 0.0;
  std::optional<Eigen::VectorXd> witness;  // unit vector in the original m-space
  double tolerance = 0.0;
  Subspace subspace = Subspace::Full;
  // True when a reported violation was re-checked with an extended-precision
  // quadratic form (always attempted for |min_eig| < 1e-6).
  bool confirmed = true;

  bool violated() const { return status == VerdictStatus::Violated; }
  nlohmann::ordered_json to_json() const;
};

/// Default eigensolver tolerance: backward error grows with both the order
/// and the entry magnitude.
double default_tolerance(const Eigen::MatrixXd& matrix);

SymMatrix build_kernel_matrix(const PointConfig& config, const KernelParams& params);

/// Smallest eigenvalue and its eigenvector via a full symmetric
/// eigendecomposition. Throws on solver failure.
std::pair<double, Eigen::VectorXd> min_eigenvalue(const Eigen::MatrixXd& matrix);

PositivityVerdict psd_verdict(const SymMatrix& matrix, double tol);
PositivityVerdict psd_verdict(const Eigen::MatrixXd& matrix, double tol);

/// Tests the quadratic form restricted to vectors summing to zero: smallest
/// eigenvalue of -Q^T A Q with Q an explicit orthonormal basis of the
/// complement of the all-ones vector. The witness is mapped back to m-space.
PositivityVerdict cnd_verdict(const SymMatrix& matrix, double tol);
PositivityVerdict cnd_verdict(const Eigen::MatrixXd& matrix, double tol);

/// Entrywise power; requires all entries > 0.
SymMatrix hadamard_power(const SymMatrix& matrix, double alpha);

struct InfdivReport {
  std::vector<std::pair<double, PositivityVerdict>> per_alpha;
  VerdictStatus aggregate = VerdictStatus::Certified;
  double worst_min_eigenvalue = 0.0;
  double worst_alpha = 1.0;

  nlohmann::ordered_json to_json() const;
};

/// Hadamard-power positivity sweep: psd verdict of the entrywise alpha-th
/// power for each alpha. Certified iff every power passes.
InfdivReport infdiv_probe(const PointConfig& config, const KernelParams& params,
                          const std::vector<double>& alphas, double tol);

/// Orthonormal basis (m x (m-1)) of the orthogonal complement of ones,
/// built from a single Householder reflector.
Eigen::MatrixXd sumzero_basis(int m);

/// Quadratic form <w, A w> accumulated in long double.
long double quad_form_ld(const Eigen::MatrixXd& matrix, const Eigen::VectorXd& w);

/// Re-evaluates the kernel matrix quadratic form entirely in long double
/// (distances, kernel values, entrywise power, accumulation); the
/// extended-precision confirmation used before a violation is trusted.
long double kernel_quad_form_ld(const PointConfig& config, const KernelParams& params,
                                double alpha, const Eigen::VectorXd& w);

/// Minimum of <v, A v> over `samples` random unit vectors (projected onto
/// the sum-zero subspace first when requested). Brute-force cross-check for
/// small orders.
double brute_force_min_form(const Eigen::MatrixXd& matrix, Subspace subspace,
                            int samples, std::uint64_t seed);

/// FNV-1a hash over the IEEE-754 bytes of the lower triangle, as a stable
/// matrix checksum for witness files.
std::string matrix_checksum(const Eigen::MatrixXd& matrix);

}  // namespace poslab
