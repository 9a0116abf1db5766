#pragma once

#include <utility>

#include "qst/types.hpp"

namespace qst::ideal {

inline constexpr BipartiteShape kQubitPairShape{2, 2};

/// Rank-1 projector |theta><theta| with theta = angle + outcome * pi/2,
/// |theta> = cos(theta)|0> + sin(theta)|1>. Real and symmetric.
Matrix projector(Setting s);

/// (|00> + |11>)/sqrt(2) in the slow-A convention.
Vector phi_plus();

/// (P_a ⊗ P_b) |phi+>, unnormalized.
Vector measured_vector(Setting a, Setting b);

/// Joint outcome probability ||(P_a ⊗ P_b)|phi+>||^2, computed by 4x4
/// algebra. Equals cos^2(theta_a - theta_b)/2.
double probability(Setting a, Setting b);

/// The (alpha, gamma) completing the cyclic permutation (alpha, gamma, beta)
/// of (-pi/8, 0, pi/8) that ends in beta.
std::pair<Angle, Angle> cyclic_partners(Angle beta);

/// Coefficients relating two quadruples of ideal post-measurement vectors.
/// Both angle pairs must be mixed (distinct angles). The source quadruple is
/// recovered from the target one as
///   v_from[(x,y)] = sum_{(x',y')} entries((x',y'),(x,y)) * v_to[(x',y')]
/// with (x,y) flattened as 2x+y in the order (0,0),(0,1),(1,0),(1,1).
struct TransferMatrix {
  std::pair<Angle, Angle> from;
  std::pair<Angle, Angle> to;
  Matrix entries;  // 4x4
};

TransferMatrix transfer_matrix(std::pair<Angle, Angle> from, std::pair<Angle, Angle> to);

/// Squared lengths of the difference vectors
///   d_{(beta,z)} = (P_(alpha,0) - P_(gamma,0)) ⊗ P_(beta,z) |phi+>
/// for z = 0, 1, with (alpha, gamma) = cyclic_partners(beta).
std::pair<double, double> d_lengths(Angle beta);

}  // namespace qst::ideal
