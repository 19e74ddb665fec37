#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "turaev/linalg.hpp"

namespace turaev {

/// An invertible operator R on V (x) V, dim V = d. The inverse is computed
/// once at construction; construction fails with SingularMatrix otherwise.
/// Satisfying the Yang-Baxter equation is not a construction invariant; use
/// check_yang_baxter.
class YBOperator {
 public:
  YBOperator(std::size_t d, ComplexMatrix r, Tolerance tol = {});

  std::size_t dim() const { return d_; }
  const ComplexMatrix& matrix() const { return r_; }
  const ComplexMatrix& inverse_matrix() const { return r_inv_; }

  /// s * R, with the inverse rescaled rather than recomputed.
  YBOperator scaled(Complex s) const;

 private:
  YBOperator(std::size_t d, ComplexMatrix r, ComplexMatrix r_inv);

  std::size_t d_;
  ComplexMatrix r_;
  ComplexMatrix r_inv_;
};

/// (R, alpha, beta, mu). Enhancement is verified by check_enhanced, not here.
class EnhancedYB {
 public:
  EnhancedYB(YBOperator op, Complex alpha, Complex beta, ComplexMatrix mu);
  /// Convenience for alpha = beta = 1.
  EnhancedYB(YBOperator op, ComplexMatrix mu);

  const YBOperator& op() const { return op_; }
  std::size_t dim() const { return op_.dim(); }
  Complex alpha() const { return alpha_; }
  Complex beta() const { return beta_; }
  const ComplexMatrix& mu() const { return mu_; }
  bool normalized() const { return alpha_ == Complex(1.0) && beta_ == Complex(1.0); }

 private:
  YBOperator op_;
  Complex alpha_;
  Complex beta_;
  ComplexMatrix mu_;
};

struct Check {
  bool passed = false;
  double residual = 0.0;
};

Check residual_check(const ComplexMatrix& lhs, const ComplexMatrix& rhs, Tolerance tol);

/// Compares (R(x)1)(1(x)R)(R(x)1) with (1(x)R)(R(x)1)(1(x)R) on V^(x)3.
Check check_yang_baxter(const YBOperator& op, Tolerance tol = {});

struct EnhancementReport {
  Check commutes;     // (mu(x)mu) R = R (mu(x)mu)
  Check trace_plus;   // Tr_2(R (mu(x)mu)) = alpha beta mu
  Check trace_minus;  // Tr_2(R^-1 (mu(x)mu)) = alpha^-1 beta mu

  bool passed() const { return commutes.passed && trace_plus.passed && trace_minus.passed; }
};

EnhancementReport check_enhanced(const EnhancedYB& e, Tolerance tol = {});

struct Scalars {
  Complex alpha;
  Complex beta;
};

/// Reads alpha, beta off the partial-trace conditions. With c1 = alpha*beta
/// and c2 = beta/alpha, beta is the principal root of c1*c2 and alpha = c1/beta.
/// (-alpha, -beta) is the other valid choice; it multiplies the invariant by
/// (-1)^(writhe + strands), which is constant on each link type.
/// Throws ZeroMu or NotProportional.
Scalars infer_scalars(const YBOperator& op, const ComplexMatrix& mu, Tolerance tol = {});

/// (alpha^-1 R, 1, 1, beta^-1 mu); leaves the invariant unchanged.
EnhancedYB normalize(const EnhancedYB& e);

/// Outcome of restricting an enhanced operator to the range of mu.
struct MuReduction {
  /// Empty when mu restricts all the way down to zero: the invariant is then
  /// identically zero.
  std::optional<EnhancedYB> reduced;
  std::size_t steps = 0;

  bool identically_zero() const { return !reduced.has_value(); }
};

/// Restricts R and mu to range(mu) (and its tensor square) until mu is
/// invertible. A no-op for invertible mu.
MuReduction reduce_mu(const EnhancedYB& e, Tolerance tol = {});

struct ProductForm {
  ComplexMatrix a;
  ComplexMatrix b;
};

struct SwapProductForm {
  ComplexMatrix f;
  ComplexMatrix g;
};

struct Entangling {};

/// Product:      M = A (x) B
/// SwapProduct:  M = (F (x) G) o S
/// The factor pair is only defined up to (cA, B/c); it is pinned by scaling
/// the first factor so its largest-modulus entry (first in row-major order) is 1.
struct EntanglementClass {
  std::variant<ProductForm, SwapProductForm, Entangling> form;
  std::size_t schmidt_rank = 0;
  std::size_t swapped_schmidt_rank = 0;
  /// Reconstruction residual for the two product variants, 0 otherwise.
  double residual = 0.0;

  bool is_product() const { return std::holds_alternative<ProductForm>(form); }
  bool is_swap_product() const { return std::holds_alternative<SwapProductForm>(form); }
  bool is_entangling() const { return std::holds_alternative<Entangling>(form); }
  std::string_view name() const;
};

/// Throws SingularMatrix for non-invertible M.
EntanglementClass classify_nonentangling(const ComplexMatrix& m, std::size_t d, Tolerance tol = {});

struct NamedCheck {
  std::string_view name;
  Check check;
};

/// The relations forced on a normalized enhanced swap-form operator.
struct CommutationReport {
  std::array<NamedCheck, 7> checks;

  bool passed() const;
};

/// Throws SingularMatrix unless F, G and mu are invertible.
CommutationReport commutation_report(const ComplexMatrix& f, const ComplexMatrix& g,
                                     const ComplexMatrix& mu, Tolerance tol = {});

// Fixtures -------------------------------------------------------------------

/// R = (F (x) G) o S.
ComplexMatrix swap_product_matrix(const ComplexMatrix& f, const ComplexMatrix& g);

/// F = 1, G = diag(1,-1), mu = G, alpha = beta = 1.
EnhancedYB cr_swap_operator();

/// The entangling involution R_e (SWAP then controlled phase) with mu = diag(1,-1).
EnhancedYB cr_entangling_operator();

/// (S, 1, 1, 1) on C^d.
EnhancedYB pure_swap_operator(std::size_t d = 2);

/// (r 1, r, 2, 1) on C^2.
EnhancedYB scalar_operator(Complex r);

/// Temperley-Lieb solution R = A 1 + A^-1 c c^T, c = (0, iA, -iA^-1, 0), with
/// mu = diag(-A^2, -A^-2) and alpha, beta inferred. Its invariant is
/// (-A^2 - A^-2) times the Jones polynomial at t = A^-4.
EnhancedYB kauffman_operator(Complex a);

/// Random enhanced swap-form operator: F, G diagonal in a random common
/// eigenbasis, (FG)^2 = 1, mu = (GF)^-1, then R and mu rescaled by random
/// constants and alpha, beta inferred.
EnhancedYB swap_random_operator(std::uint64_t seed, std::size_t d = 2);

/// r 1 with r random complex and a random mu (Tr mu != 0), scalars inferred.
EnhancedYB scalar_random_operator(std::uint64_t seed, std::size_t d = 2);

/// cr-swap embedded in C^3: F = 1, G = diag(1,-1,1), mu = diag(1,-1,0).
EnhancedYB padded_cr_swap_operator();

struct NamedOperator {
  std::string name;
  EnhancedYB op;
};

/// cr-swap, cr-entangling, pure-swap, scalar(+1), scalar(-1), kauffman at
/// A = e^{i pi/5}, swap-random seeds 1..3 (d = 2) and swap-random-d3.
const std::vector<NamedOperator>& fixture_operators();
const EnhancedYB& fixture_operator(std::string_view name);

}  // namespace turaev
