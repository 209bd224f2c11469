#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>

#include "json.hpp"

namespace poslab {

enum class Generator { RandomGaussian, GridLine, Simplex, ScaledLattice, Explicit };

std::string generator_name(Generator g);
Generator generator_from_name(const std::string& name);

/// Deterministic scalar source: mt19937_64 plus explicit uniform and
/// Box-Muller transforms, so a (generator, seed, m, n, scale) tuple
/// regenerates the same points bit for bit on any platform.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : state_(seed) {}

  double unit();    // in [0, 1)
  double normal();  // standard normal

 private:
  std::uint64_t next_raw();
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// A finite point set in n-space together with the recipe that produced it.
struct PointConfig {
  int dimension = 1;                     // n
  Eigen::MatrixXd points;                // m x n, one point per row
  Generator generator = Generator::Explicit;
  std::uint64_t seed = 0;
  double scale = 1.0;

  int count() const { return static_cast<int>(points.rows()); }

  /// Pairwise Euclidean distance matrix (m x m).
  Eigen::MatrixXd distances() const;

  static PointConfig make(Generator g, std::uint64_t seed, int m, int n, double scale);
  static PointConfig explicit_points(Eigen::MatrixXd pts);

  nlohmann::ordered_json to_json() const;  // replayable reference
  static PointConfig from_json(const nlohmann::ordered_json& j);
};

}  // namespace poslab
