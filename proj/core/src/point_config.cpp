#include "poslab/point_config.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace poslab {

std::string generator_name(Generator g) {
  switch (g) {
    case Generator::RandomGaussian: return "RANDOM_GAUSSIAN";
    case Generator::GridLine: return "GRID_LINE";
    case Generator::Simplex: return "SIMPLEX";
    case Generator::ScaledLattice: return "SCALED_LATTICE";
    case Generator::Explicit: return "EXPLICIT";
  }
  throw std::logic_error("unknown generator");
}

Generator generator_from_name(const std::string& name) {
  if (name == "RANDOM_GAUSSIAN") return Generator::RandomGaussian;
  if (name == "GRID_LINE") return Generator::GridLine;
  if (name == "SIMPLEX") return Generator::Simplex;
  if (name == "SCALED_LATTICE") return Generator::ScaledLattice;
  if (name == "EXPLICIT") return Generator::Explicit;
  throw std::invalid_argument("unknown generator name: " + name);
}

std::uint64_t DeterministicRng::next_raw() {
  // splitmix64 step; fully specified, unlike distribution adapters.
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double DeterministicRng::unit() {
  return static_cast<double>(next_raw() >> 11) * 0x1.0p-53;
}

double DeterministicRng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = unit();
  while (u1 == 0.0) u1 = unit();
  const double u2 = unit();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

Eigen::MatrixXd PointConfig::distances() const {
  const int m = count();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      d(i, j) = d(j, i) = (points.row(i) - points.row(j)).norm();
    }
  }
  return d;
}

namespace {

Eigen::MatrixXd lattice_points(int m, int n, double scale) {
  // Integer vectors inside a ball, ordered by (squared norm, lexicographic),
  // first m taken. Radius grows until enough points exist.
  for (long long radius = 1; radius <= 64; ++radius) {
    const long long r2 = radius * radius;
    std::vector<std::vector<long long>> found;
    std::vector<long long> v(static_cast<std::size_t>(n), -radius);
    while (true) {
      long long norm2 = 0;
      for (long long c : v) norm2 += c * c;
      if (norm2 <= r2) found.push_back(v);
      int k = n - 1;
      while (k >= 0 && v[static_cast<std::size_t>(k)] == radius) {
        v[static_cast<std::size_t>(k)] = -radius;
        --k;
      }
      if (k < 0) break;
      ++v[static_cast<std::size_t>(k)];
    }
    if (static_cast<int>(found.size()) >= m) {
      std::sort(found.begin(), found.end(),
                [](const std::vector<long long>& a, const std::vector<long long>& b) {
                  long long na = 0, nb = 0;
                  for (long long c : a) na += c * c;
                  for (long long c : b) nb += c * c;
                  if (na != nb) return na < nb;
                  return a < b;
                });
      Eigen::MatrixXd pts(m, n);
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
          pts(i, j) = scale * static_cast<double>(found[static_cast<std::size_t>(i)]
                                                       [static_cast<std::size_t>(j)]);
        }
      }
      return pts;
    }
  }
  throw std::invalid_argument("lattice generator: too many points requested");
}

}  // namespace

PointConfig PointConfig::make(Generator g, std::uint64_t seed, int m, int n, double scale) {
  if (m < 1) throw std::invalid_argument("point count must be >= 1");
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  PointConfig config;
  config.dimension = n;
  config.generator = g;
  config.seed = seed;
  config.scale = scale;
  switch (g) {
    case Generator::RandomGaussian: {
      DeterministicRng rng(seed);
      config.points.resize(m, n);
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) config.points(i, j) = scale * rng.normal();
      }
      break;
    }
    case Generator::GridLine: {
      // Arithmetic progression 0, s, 2s, ... along the first axis.
      config.points = Eigen::MatrixXd::Zero(m, n);
      for (int i = 0; i < m; ++i) config.points(i, 0) = scale * i;
      break;
    }
    case Generator::Simplex: {
      if (m > n + 1) {
        throw std::invalid_argument("simplex generator needs m <= n + 1");
      }
      config.points = Eigen::MatrixXd::Zero(m, n);
      for (int i = 1; i < m; ++i) config.points(i, i - 1) = scale;
      break;
    }
    case Generator::ScaledLattice:
      config.points = lattice_points(m, n, scale);
      break;
    case Generator::Explicit:
      throw std::invalid_argument("explicit configs carry their own points");
  }
  return config;
}

PointConfig PointConfig::explicit_points(Eigen::MatrixXd pts) {
  if (pts.rows() < 1 || pts.cols() < 1) {
    throw std::invalid_argument("explicit config needs at least one point");
  }
  PointConfig config;
  config.dimension = static_cast<int>(pts.cols());
  config.points = std::move(pts);
  config.generator = Generator::Explicit;
  return config;
}

nlohmann::ordered_json PointConfig::to_json() const {
  nlohmann::ordered_json j{{"generator", generator_name(generator)},
                           {"seed", seed},
                           {"m", count()},
                           {"n", dimension},
                           {"scale", scale}};
  if (generator == Generator::Explicit) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < count(); ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int k = 0; k < dimension; ++k) row.push_back(points(i, k));
      rows.push_back(row);
    }
    j["points"] = rows;
  }
  return j;
}

PointConfig PointConfig::from_json(const nlohmann::ordered_json& j) {
  const Generator g = generator_from_name(j.at("generator").get<std::string>());
  if (g == Generator::Explicit) {
    const auto& rows = j.at("points");
    const int m = static_cast<int>(rows.size());
    const int n = j.at("n").get<int>();
    Eigen::MatrixXd pts(m, n);
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < n; ++k) pts(i, k) = rows.at(i).at(k).get<double>();
    }
    return explicit_points(std::move(pts));
  }
  return make(g, j.at("seed").get<std::uint64_t>(), j.at("m").get<int>(),
              j.at("n").get<int>(), j.at("scale").get<double>());
}

}  // namespace poslab
