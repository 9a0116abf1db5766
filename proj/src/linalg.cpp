#include "qst/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qst::linalg {

namespace {

using RowMajorMap = Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                                    Eigen::RowMajor>>;

RowMajorMap as_matrix(const Vector& psi, int rows, int cols) {
  if (psi.size() != static_cast<Eigen::Index>(rows) * cols)
    throw std::invalid_argument("state dimension does not match bipartite shape");
  return RowMajorMap(psi.data(), rows, cols);
}

Vector flatten(const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>& m) {
  Vector out(m.rows() * m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i * m.cols() + j) = m(i, j);
  return out;
}

}  // namespace

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool all_finite(const Matrix& m) { return m.allFinite(); }

double hermiticity_residual(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermiticity check needs a square matrix");
  return max_abs(m - m.adjoint());
}

Matrix kron(const Matrix& m1, const Matrix& m2, int max_dim) {
  if (!all_finite(m1) || !all_finite(m2))
    throw std::invalid_argument("kron: non-finite entries");
  const Eigen::Index rows = m1.rows() * m2.rows();
  const Eigen::Index cols = m1.cols() * m2.cols();
  if (rows > max_dim || cols > max_dim)
    throw std::length_error("kron: result exceeds the configured dimension cap");
  Matrix out(rows, cols);
  for (Eigen::Index i1 = 0; i1 < m1.rows(); ++i1)
    for (Eigen::Index j1 = 0; j1 < m1.cols(); ++j1)
      out.block(i1 * m2.rows(), j1 * m2.cols(), m2.rows(), m2.cols()) = m1(i1, j1) * m2;
  return out;
}

Matrix partial_trace(const Matrix& m, const BipartiteShape& shape, Side traced) {
  const int da = shape.dim_a, db = shape.dim_b;
  if (m.rows() != m.cols() || m.rows() != shape.joint_dim())
    throw std::invalid_argument("partial_trace: matrix does not match shape");
  if (traced == Side::B) {
    Matrix out = Matrix::Zero(da, da);
    for (int ia = 0; ia < da; ++ia)
      for (int ja = 0; ja < da; ++ja)
        for (int ib = 0; ib < db; ++ib) out(ia, ja) += m(ia * db + ib, ja * db + ib);
    return out;
  }
  Matrix out = Matrix::Zero(db, db);
  for (int ib = 0; ib < db; ++ib)
    for (int jb = 0; jb < db; ++jb)
      for (int ia = 0; ia < da; ++ia) out(ib, jb) += m(ia * db + ib, ia * db + jb);
  return out;
}

Vector apply_side(const Matrix& op, const Vector& psi, const BipartiteShape& shape, Side side) {
  auto m = as_matrix(psi, shape.dim_a, shape.dim_b);
  if (side == Side::A) {
    if (op.cols() != shape.dim_a)
      throw std::invalid_argument("apply_side: operator does not act on side A");
    return flatten(op * m);
  }
  if (op.cols() != shape.dim_b)
    throw std::invalid_argument("apply_side: operator does not act on side B");
  return flatten(m * op.transpose());
}

Vector apply_sides(const Matrix& op_a, const Matrix& op_b, const Vector& psi,
                   const BipartiteShape& shape) {
  auto m = as_matrix(psi, shape.dim_a, shape.dim_b);
  if (op_a.cols() != shape.dim_a || op_b.cols() != shape.dim_b)
    throw std::invalid_argument("apply_sides: operator dimensions do not match shape");
  return flatten(op_a * m * op_b.transpose());
}

Matrix reduced_density(const Vector& psi, const BipartiteShape& shape, Side kept) {
  auto m = as_matrix(psi, shape.dim_a, shape.dim_b);
  if (kept == Side::A) return m * m.adjoint();
  return m.transpose() * m.conjugate();
}

std::vector<SchmidtTerm> schmidt_decompose(const Vector& v, const BipartiteShape& shape,
                                           double threshold) {
  auto m = as_matrix(v, shape.dim_a, shape.dim_b);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sigma = svd.singularValues();
  std::vector<SchmidtTerm> terms;
  if (sigma.size() == 0) return terms;
  const double cutoff = threshold * sigma(0);
  for (Eigen::Index k = 0; k < sigma.size(); ++k) {
    if (sigma(k) <= cutoff) break;
    terms.push_back({sigma(k), svd.matrixU().col(k), svd.matrixV().col(k).conjugate()});
  }
  return terms;
}

Matrix support_projector(const Matrix& rho, double threshold) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("support_projector: not square");
  const double scale = std::max(1.0, max_abs(rho));
  if (hermiticity_residual(rho) > 1e-10 * scale)
    throw std::invalid_argument("support_projector: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es((rho + rho.adjoint()) / 2.0);
  const auto& lambda = es.eigenvalues();
  const double lmax = lambda(lambda.size() - 1);
  if (lambda(0) < -1e-10 * std::max(1.0, lmax))
    throw std::invalid_argument("support_projector: input is not positive semidefinite");
  Matrix proj = Matrix::Zero(rho.rows(), rho.cols());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    if (lambda(k) > threshold * lmax)
      proj += es.eigenvectors().col(k) * es.eigenvectors().col(k).adjoint();
  }
  return proj;
}

OrthonormalBasis orthonormal_basis(const std::vector<Vector>& vectors, double threshold) {
  if (vectors.empty()) return {Matrix(0, 0), Matrix(0, 0)};
  const Eigen::Index n = vectors.front().size();
  Matrix stacked(n, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].size() != n)
      throw std::invalid_argument("orthonormal_basis: mixed vector dimensions");
    stacked.col(static_cast<Eigen::Index>(k)) = vectors[k];
  }
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeThinU);
  const auto& sigma = svd.singularValues();
  int rank = 0;
  if (sigma.size() > 0 && sigma(0) > 0.0) {
    const double cutoff = threshold * sigma(0);
    while (rank < sigma.size() && sigma(rank) > cutoff) ++rank;
  }
  OrthonormalBasis out;
  out.basis = svd.matrixU().leftCols(rank);
  out.coords = out.basis.adjoint() * stacked;
  return out;
}

SupportComparison equal_on_support(const Matrix& op1, const Matrix& op2, const Vector& psi,
                                   const BipartiteShape& shape, Side acting, double tol,
                                   double support_threshold) {
  const int dim = acting == Side::A ? shape.dim_a : shape.dim_b;
  if (op1.rows() != op1.cols() || op2.rows() != op2.cols() || op1.rows() != dim ||
      op2.rows() != dim)
    throw std::invalid_argument("equal_on_support: operators do not act on the stated side");
  Matrix rho = reduced_density(psi, shape, acting);
  Matrix supp = support_projector(rho, support_threshold);
  const double residual = operator_norm((op1 - op2) * supp);
  return {residual <= tol, residual};
}

Vector permute_factors(const Vector& v, const std::vector<int>& dims,
                       const std::vector<int>& perm) {
  const std::size_t m = dims.size();
  if (perm.size() != m) throw std::invalid_argument("permute_factors: perm size mismatch");
  long total = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("permute_factors: bad factor dimension");
    total *= d;
  }
  if (v.size() != total) throw std::invalid_argument("permute_factors: vector size mismatch");

  // strides of the input factors, slow to fast
  std::vector<long> stride(m, 1);
  for (std::size_t k = m; k-- > 1;) stride[k - 1] = stride[k] * dims[k];

  std::vector<int> out_dims(m);
  for (std::size_t k = 0; k < m; ++k) out_dims[k] = dims[perm[k]];

  Vector out(total);
  std::vector<int> idx(m);
  for (long j = 0; j < total; ++j) {
    long rem = j;
    for (std::size_t k = 0; k < m; ++k) {
      long block = 1;
      for (std::size_t l = k + 1; l < m; ++l) block *= out_dims[l];
      idx[k] = static_cast<int>(rem / block);
      rem %= block;
    }
    long src = 0;
    for (std::size_t k = 0; k < m; ++k) src += idx[k] * stride[perm[k]];
    out(j) = v(src);
  }
  return out;
}

}  // namespace qst::linalg
