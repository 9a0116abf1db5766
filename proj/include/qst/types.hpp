#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>

#include <Eigen/Dense>

namespace qst {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Measurement basis angle, one of {-pi/8, 0, +pi/8}.
/// Stored as a tag so tables can be indexed exactly; radians appear only
/// inside trigonometric evaluation.
enum class Angle : int { Minus = 0, Zero = 1, Plus = 2 };

inline constexpr std::array<Angle, 3> kAngles = {Angle::Minus, Angle::Zero, Angle::Plus};

constexpr double angle_radians(Angle a) {
  constexpr double kEighthPi = std::numbers::pi / 8.0;
  switch (a) {
    case Angle::Minus: return -kEighthPi;
    case Angle::Zero: return 0.0;
    case Angle::Plus: return kEighthPi;
  }
  return 0.0;
}

constexpr const char* angle_name(Angle a) {
  switch (a) {
    case Angle::Minus: return "minus";
    case Angle::Zero: return "zero";
    case Angle::Plus: return "plus";
  }
  return "?";
}

/// A measurement setting: basis angle plus outcome bit.
struct Setting {
  Angle angle = Angle::Minus;
  int outcome = 0;

  friend constexpr bool operator==(const Setting&, const Setting&) = default;
};

/// Canonical enumeration order:
/// (minus,0),(minus,1),(zero,0),(zero,1),(plus,0),(plus,1).
constexpr int setting_index(Setting s) { return 2 * static_cast<int>(s.angle) + s.outcome; }

constexpr Setting setting_from_index(int i) { return Setting{static_cast<Angle>(i / 2), i % 2}; }

inline constexpr std::array<Setting, 6> kSettings = {
    Setting{Angle::Minus, 0}, Setting{Angle::Minus, 1}, Setting{Angle::Zero, 0},
    Setting{Angle::Zero, 1},  Setting{Angle::Plus, 0},  Setting{Angle::Plus, 1}};

/// Plane angle of the projected state: basis angle plus outcome * pi/2.
constexpr double setting_angle(Setting s) {
  return angle_radians(s.angle) + s.outcome * (std::numbers::pi / 2.0);
}

/// Flat index of an ordered setting pair, first setting major: 0..35.
constexpr int pair_index(Setting a, Setting b) { return setting_index(a) * 6 + setting_index(b); }

inline std::string setting_label(Setting s) {
  return std::string(angle_name(s.angle)) + "/" + std::to_string(s.outcome);
}

/// Tensor factor convention for bipartite objects: A is the slow (most
/// significant) factor, so the joint index is i = iA * dimB + iB.
struct BipartiteShape {
  int dim_a = 0;
  int dim_b = 0;

  constexpr int joint_dim() const { return dim_a * dim_b; }
  constexpr int joint_index(int ia, int ib) const { return ia * dim_b + ib; }

  friend constexpr bool operator==(const BipartiteShape&, const BipartiteShape&) = default;
};

}  // namespace qst
