#pragma once

#include <vector>

#include "qst/types.hpp"

namespace qst::linalg {

/// Which factor of a bipartite object an operation refers to.
enum class Side { A, B };

/// Largest joint dimension the dense kernels will produce.
inline constexpr int kMaxKronDim = 4096;

/// Default relative cutoff for ranks, supports and singular values.
inline constexpr double kSupportThreshold = 1e-10;

/// Largest singular value. Zero for empty matrices.
double operator_norm(const Matrix& m);

double max_abs(const Matrix& m);
bool all_finite(const Matrix& m);

/// max |m - m^dagger| entrywise.
double hermiticity_residual(const Matrix& m);

/// Kronecker product under the slow-A convention:
/// result((i1,i2),(j1,j2)) = m1(i1,j1) * m2(i2,j2).
Matrix kron(const Matrix& m1, const Matrix& m2, int max_dim = kMaxKronDim);

/// Reduced matrix over the kept factor after tracing out `traced`.
/// Preserves the trace.
Matrix partial_trace(const Matrix& m, const BipartiteShape& shape, Side traced);

/// (op ⊗ I)psi or (I ⊗ op)psi without forming the joint operator.
/// `op` may be rectangular; its column count must match the side dimension.
Vector apply_side(const Matrix& op, const Vector& psi, const BipartiteShape& shape, Side side);

/// (op_a ⊗ op_b)psi.
Vector apply_sides(const Matrix& op_a, const Matrix& op_b, const Vector& psi,
                   const BipartiteShape& shape);

/// Reduced density matrix of a pure state on the kept side.
Matrix reduced_density(const Vector& psi, const BipartiteShape& shape, Side kept);

struct SchmidtTerm {
  double coefficient;  // nonnegative, sorted descending
  Vector left;
  Vector right;
};

/// Schmidt decomposition of a (possibly unnormalized) bipartite vector.
/// Terms with coefficient <= threshold * (largest coefficient) are dropped;
/// sum of squared coefficients equals the squared norm of `v`.
std::vector<SchmidtTerm> schmidt_decompose(const Vector& v, const BipartiteShape& shape,
                                           double threshold = kSupportThreshold);

/// Orthogonal projector onto the eigenspaces of `rho` with eigenvalue above
/// threshold * (largest eigenvalue). `rho` must be Hermitian and positive
/// semidefinite up to small numerical noise.
Matrix support_projector(const Matrix& rho, double threshold = kSupportThreshold);

struct OrthonormalBasis {
  Matrix basis;   // n x rank, orthonormal columns
  Matrix coords;  // rank x k, coordinates of each input vector in the basis

  int rank() const { return static_cast<int>(basis.cols()); }
};

/// Orthonormal basis of the span of `vectors`, rank determined by singular
/// values above threshold * (largest singular value).
OrthonormalBasis orthonormal_basis(const std::vector<Vector>& vectors,
                                   double threshold = kSupportThreshold);

struct SupportComparison {
  bool equal;
  double residual;  // operator norm of (op1 - op2) restricted to the support
};

/// Whether op1 and op2 act identically on the support of psi's reduced
/// density matrix on `acting` (restriction of the difference to the support
/// as its domain). Equivalent to (op1 ⊗ I)psi == (op2 ⊗ I)psi.
SupportComparison equal_on_support(const Matrix& op1, const Matrix& op2, const Vector& psi,
                                   const BipartiteShape& shape, Side acting, double tol,
                                   double support_threshold = kSupportThreshold);

/// Reorder the tensor factors of a state vector. `dims` are the current
/// factor dimensions, slow to fast; factor k of the result is factor perm[k]
/// of the input, i.e. result[j_0,...,j_{m-1}] = v[i_0,...,i_{m-1}] with
/// j_k = i_{perm[k]}.
Vector permute_factors(const Vector& v, const std::vector<int>& dims, const std::vector<int>& perm);

}  // namespace qst::linalg
