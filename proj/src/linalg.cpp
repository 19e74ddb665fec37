#include "turaev/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "turaev/errors.hpp"

namespace turaev {

namespace {

using EigenMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

EigenMatrix to_eigen(const ComplexMatrix& m) {
  EigenMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

template <typename Derived>
ComplexMatrix from_eigen(const Eigen::MatrixBase<Derived>& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

std::string shape(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch(std::string(what) + ": shapes " + shape(a) + " and " + shape(b));
}

void require_tensor_square(const ComplexMatrix& m, std::size_t d, const char* what) {
  if (d == 0 || m.rows() != d * d || m.cols() != d * d)
    throw DimensionMismatch(std::string(what) + ": expected " + std::to_string(d * d) + "x" +
                            std::to_string(d * d) + ", got " + shape(m));
}

}  // namespace

Tolerance::Tolerance(double e) : eps(e) {
  if (!(e >= 0.0)) throw InputError("tolerance must be nonnegative");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : ComplexMatrix(rows, cols, std::vector<Complex>(rows * cols)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw DimensionMismatch("matrix extents must be positive");
  if (data_.size() != rows * cols)
    throw DimensionMismatch("entry count " + std::to_string(data_.size()) + " does not match " +
                            std::to_string(rows) + "x" + std::to_string(cols));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> diag) {
  return diagonal(std::span<const Complex>(diag.begin(), diag.size()));
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t nrows = rows.size();
  const std::size_t ncols = nrows ? rows.begin()->size() : 0;
  std::vector<Complex> data;
  data.reserve(nrows * ncols);
  for (const auto& row : rows) {
    if (row.size() != ncols) throw DimensionMismatch("ragged row list");
    data.insert(data.end(), row.begin(), row.end());
  }
  return ComplexMatrix(nrows, ncols, std::move(data));
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("matrix product: " + shape(a) + " times " + shape(b));
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix kron_power(const ComplexMatrix& a, std::size_t n) {
  if (n == 0) throw DimensionMismatch("kron_power needs at least one factor");
  ComplexMatrix out = a;
  for (std::size_t i = 1; i < n; ++i) out = kron(out, a);
  return out;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& m, std::size_t d) {
  require_tensor_square(m, d, "partial_trace_second");
  ComplexMatrix out(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < d; ++k) s += m(i * d + k, j * d + k);
      out(i, j) = s;
    }
  return out;
}

ComplexMatrix swap_gate(std::size_t d) {
  ComplexMatrix s(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) s(j * d + i, i * d + j) = 1.0;
  return s;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

double max_entry_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_entry_distance");
  double dist = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) dist = std::max(dist, std::abs(ea[i] - eb[i]));
  return dist;
}

bool approx_eq(const ComplexMatrix& m, const ComplexMatrix& n, Tolerance tol) {
  const double scale = 1.0 + std::max(m.max_abs(), n.max_abs());
  return max_entry_distance(m, n) <= tol.eps * scale;
}

bool approx_eq(Complex a, Complex b, Tolerance tol) {
  return std::abs(a - b) <= tol.eps * (1.0 + std::max(std::abs(a), std::abs(b)));
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  Eigen::JacobiSVD<EigenMatrix> svd(to_eigen(m));
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

bool is_invertible(const ComplexMatrix& m, Tolerance tol) {
  if (!m.is_square()) return false;
  const auto s = singular_values(m);
  return s.front() > 0.0 && s.back() > tol.eps * s.front();
}

ComplexMatrix inverse(const ComplexMatrix& m, Tolerance tol) {
  if (!m.is_square()) throw DimensionMismatch("inverse of non-square " + shape(m));
  if (!is_invertible(m, tol))
    throw SingularMatrix("matrix is singular at tolerance " + std::to_string(tol.eps));
  const EigenMatrix e = to_eigen(m);
  return from_eigen(e.fullPivLu().inverse());
}

ComplexMatrix RangeBasis::as_matrix() const {
  if (rank == 0) throw DimensionMismatch("empty range has no basis matrix");
  const std::size_t n = columns.front().size();
  ComplexMatrix q(n, rank);
  for (std::size_t c = 0; c < rank; ++c)
    for (std::size_t r = 0; r < n; ++r) q(r, c) = columns[c][r];
  return q;
}

RangeBasis range_basis(const ComplexMatrix& m, Tolerance tol) {
  Eigen::JacobiSVD<EigenMatrix> svd(to_eigen(m), Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  RangeBasis out;
  if (s.size() == 0 || s(0) == 0.0) return out;
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > tol.eps * s(0)) ++r;
  const auto u = svd.matrixU().leftCols(r);
  const EigenMatrix projector = u * u.adjoint();

  // Gram-Schmidt over projector columns; a column is kept when its residual
  // is not negligible, and its phase is fixed by the pivot entry.
  for (Eigen::Index c = 0; c < projector.cols() && static_cast<Eigen::Index>(out.rank) < r; ++c) {
    Eigen::VectorX<Complex> v = projector.col(c);
    for (const auto& q : out.columns) {
      const Eigen::Map<const Eigen::VectorX<Complex>> qv(q.data(), q.size());
      v -= qv * qv.dot(v);
    }
    const double norm = v.norm();
    if (norm <= 1e-6) continue;
    v /= norm;
    const Complex pivot = v(c);
    if (std::abs(pivot) > 0.0) v *= std::conj(pivot) / std::abs(pivot);
    out.columns.emplace_back(v.data(), v.data() + v.size());
    ++out.rank;
  }
  if (static_cast<Eigen::Index>(out.rank) < r) {
    // Greedy selection lost a direction to roundoff; the SVD basis is still valid.
    out.columns.clear();
    for (Eigen::Index c = 0; c < r; ++c) {
      const Eigen::VectorX<Complex> col = u.col(c);
      out.columns.emplace_back(col.data(), col.data() + col.size());
    }
    out.rank = static_cast<std::size_t>(r);
  }
  return out;
}

ComplexMatrix SchmidtDecomposition::reconstruct(std::size_t d) const {
  ComplexMatrix out(d * d, d * d);
  for (const auto& t : terms) out += kron(t.left, t.right) * Complex(t.weight);
  return out;
}

SchmidtDecomposition operator_schmidt(const ComplexMatrix& m, std::size_t d, Tolerance tol) {
  require_tensor_square(m, d, "operator_schmidt");
  EigenMatrix reshuffled(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l)
          reshuffled(i * d + k, j * d + l) = m(i * d + j, k * d + l);

  Eigen::JacobiSVD<EigenMatrix> svd(reshuffled, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  SchmidtDecomposition out;
  out.singular_values.assign(s.data(), s.data() + s.size());
  if (s(0) == 0.0) return out;
  const auto& u = svd.matrixU();
  const auto& v = svd.matrixV();
  for (Eigen::Index r = 0; r < s.size() && s(r) > tol.eps * s(0); ++r) {
    ComplexMatrix left(d, d);
    ComplexMatrix right(d, d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        left(a, b) = u(a * d + b, r);
        right(a, b) = std::conj(v(a * d + b, r));
      }
    out.terms.push_back({s(r), std::move(left), std::move(right)});
  }
  out.rank = out.terms.size();
  return out;
}

}  // namespace turaev
