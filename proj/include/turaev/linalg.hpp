#pragma once

/**
 * Dense complex matrices and the handful of kernels the invariant code needs.
 *
 * Tensor convention: the basis vector e_i (x) e_j of V (x) V has index
 * i * d + j, i.e. the first tensor factor is the major index. Storage is
 * row-major. Every routine in the library, the JSON operator format included,
 * uses this convention.
 */

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace turaev {

using Complex = std::complex<double>;

/// Absolute/relative slack used by every approximate comparison.
struct Tolerance {
  double eps = 1e-9;

  Tolerance() = default;
  explicit Tolerance(double e);
};

class ComplexMatrix {
 public:
  /// Zero matrix; both extents must be positive.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix diagonal(std::initializer_list<Complex> diag);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return data_; }
  std::span<Complex> entries() { return data_; }

  Complex trace() const;
  /// Largest entry modulus (0 for the zero matrix).
  double max_abs() const;
  bool all_finite() const;

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  /// Exact entrywise equality.
  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// a (x) a (x) ... (x) a, n >= 1 factors.
ComplexMatrix kron_power(const ComplexMatrix& a, std::size_t n);

/// Tr_2 over the second factor of V (x) V: result[i,j] = sum_k M[(i,k),(j,k)].
ComplexMatrix partial_trace_second(const ComplexMatrix& m, std::size_t d);

/// The swap gate on C^d (x) C^d.
ComplexMatrix swap_gate(std::size_t d);

/// AB - BA.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Maximum modulus of the entrywise difference. Shapes must agree.
double max_entry_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// max|M - N| <= eps * (1 + max(max|M|, max|N|)).
bool approx_eq(const ComplexMatrix& m, const ComplexMatrix& n, Tolerance tol = {});
bool approx_eq(Complex a, Complex b, Tolerance tol = {});

/// Singular values in descending order.
std::vector<double> singular_values(const ComplexMatrix& m);

/// Inverse; throws SingularMatrix when sigma_min <= eps * sigma_max.
ComplexMatrix inverse(const ComplexMatrix& m, Tolerance tol = {});

bool is_invertible(const ComplexMatrix& m, Tolerance tol = {});

/// Orthonormal basis (as columns) of the range of m, chosen canonically:
/// Gram-Schmidt over the columns of the range projector in index order, so a
/// range spanned by coordinate vectors comes back as exactly those vectors.
struct RangeBasis {
  std::size_t rank = 0;
  std::vector<std::vector<Complex>> columns;

  /// rows x rank; only valid when rank > 0.
  ComplexMatrix as_matrix() const;
};
RangeBasis range_basis(const ComplexMatrix& m, Tolerance tol = {});

struct SchmidtTerm {
  double weight;
  ComplexMatrix left;
  ComplexMatrix right;
};

struct SchmidtDecomposition {
  std::size_t rank = 0;
  std::vector<double> singular_values;
  /// Only the rank-many significant terms; sum weight * left (x) right == M.
  std::vector<SchmidtTerm> terms;

  ComplexMatrix reconstruct(std::size_t d) const;
};

/// Operator-Schmidt decomposition of a d^2 x d^2 operator via the SVD of its
/// reshuffled matrix N[(i,k),(j,l)] = M[(i,j),(k,l)]. Rank counts singular
/// values above eps * sigma_max.
SchmidtDecomposition operator_schmidt(const ComplexMatrix& m, std::size_t d, Tolerance tol = {});

inline std::size_t operator_schmidt_rank(const ComplexMatrix& m, std::size_t d, Tolerance tol = {}) {
  return operator_schmidt(m, d, tol).rank;
}

}  // namespace turaev
