#include "turaev/yang_baxter.hpp"

#include <algorithm>
#include <cmath>

#include "turaev/errors.hpp"

namespace turaev {

namespace {

// Frobenius projection coefficient <mu, t> / <mu, mu>.
Complex projection_coefficient(const ComplexMatrix& mu, const ComplexMatrix& t) {
  Complex num = 0.0;
  double den = 0.0;
  const auto m = mu.entries();
  const auto e = t.entries();
  for (std::size_t i = 0; i < m.size(); ++i) {
    num += std::conj(m[i]) * e[i];
    den += std::norm(m[i]);
  }
  return num / den;
}

// Scale the pair so the first factor's largest-modulus entry becomes 1.
void canonicalize(ComplexMatrix& first, ComplexMatrix& second) {
  const double top = first.max_abs();
  const auto entries = first.entries();
  std::size_t pivot = 0;
  while (std::abs(entries[pivot]) < top * (1.0 - 1e-9)) ++pivot;
  const Complex c = entries[pivot];
  first *= 1.0 / c;
  second *= c;
}

}  // namespace

YBOperator::YBOperator(std::size_t d, ComplexMatrix r, Tolerance tol)
    : d_(d), r_(std::move(r)), r_inv_(1, 1) {
  if (d == 0 || r_.rows() != d * d || r_.cols() != d * d)
    throw DimensionMismatch("Yang-Baxter operator must be d^2 x d^2 with d = " + std::to_string(d));
  r_inv_ = inverse(r_, tol);
}

YBOperator::YBOperator(std::size_t d, ComplexMatrix r, ComplexMatrix r_inv)
    : d_(d), r_(std::move(r)), r_inv_(std::move(r_inv)) {}

YBOperator YBOperator::scaled(Complex s) const { return YBOperator(d_, r_ * s, r_inv_ * (1.0 / s)); }

EnhancedYB::EnhancedYB(YBOperator op, Complex alpha, Complex beta, ComplexMatrix mu)
    : op_(std::move(op)), alpha_(alpha), beta_(beta), mu_(std::move(mu)) {
  if (alpha_ == Complex{} || beta_ == Complex{}) throw InputError("alpha and beta must be nonzero");
  if (mu_.rows() != op_.dim() || mu_.cols() != op_.dim())
    throw DimensionMismatch("mu must be " + std::to_string(op_.dim()) + "x" + std::to_string(op_.dim()));
}

EnhancedYB::EnhancedYB(YBOperator op, ComplexMatrix mu)
    : EnhancedYB(std::move(op), 1.0, 1.0, std::move(mu)) {}

Check residual_check(const ComplexMatrix& lhs, const ComplexMatrix& rhs, Tolerance tol) {
  return {approx_eq(lhs, rhs, tol), max_entry_distance(lhs, rhs)};
}

Check check_yang_baxter(const YBOperator& op, Tolerance tol) {
  const auto id = ComplexMatrix::identity(op.dim());
  const auto r12 = kron(op.matrix(), id);
  const auto r23 = kron(id, op.matrix());
  return residual_check(r12 * r23 * r12, r23 * r12 * r23, tol);
}

EnhancementReport check_enhanced(const EnhancedYB& e, Tolerance tol) {
  const std::size_t d = e.dim();
  const auto mumu = kron(e.mu(), e.mu());
  const auto& r = e.op().matrix();
  const auto& r_inv = e.op().inverse_matrix();
  EnhancementReport rep;
  rep.commutes = residual_check(mumu * r, r * mumu, tol);
  rep.trace_plus =
      residual_check(partial_trace_second(r * mumu, d), e.mu() * (e.alpha() * e.beta()), tol);
  rep.trace_minus =
      residual_check(partial_trace_second(r_inv * mumu, d), e.mu() * (e.beta() / e.alpha()), tol);
  return rep;
}

Scalars infer_scalars(const YBOperator& op, const ComplexMatrix& mu, Tolerance tol) {
  if (mu.rows() != op.dim() || mu.cols() != op.dim())
    throw DimensionMismatch("mu does not match the operator dimension");
  if (mu.max_abs() == 0.0) throw ZeroMu("mu is the zero matrix");
  const auto mumu = kron(mu, mu);
  const auto t_plus = partial_trace_second(op.matrix() * mumu, op.dim());
  const auto t_minus = partial_trace_second(op.inverse_matrix() * mumu, op.dim());
  const Complex c1 = projection_coefficient(mu, t_plus);
  const Complex c2 = projection_coefficient(mu, t_minus);
  if (!approx_eq(t_plus, mu * c1, tol))
    throw NotProportional("Tr_2(R mu(x)mu) is not a multiple of mu");
  if (!approx_eq(t_minus, mu * c2, tol))
    throw NotProportional("Tr_2(R^-1 mu(x)mu) is not a multiple of mu");
  if (c1 == Complex{} || c2 == Complex{})
    throw NotProportional("a partial trace vanishes, so alpha or beta would be zero");
  const Complex beta = std::sqrt(c1 * c2);
  return {c1 / beta, beta};
}

EnhancedYB normalize(const EnhancedYB& e) {
  if (e.normalized()) return e;
  return EnhancedYB(e.op().scaled(1.0 / e.alpha()), 1.0, 1.0, e.mu() * (1.0 / e.beta()));
}

MuReduction reduce_mu(const EnhancedYB& e, Tolerance tol) {
  MuReduction out;
  EnhancedYB current = e;
  while (!is_invertible(current.mu(), tol)) {
    const RangeBasis basis = range_basis(current.mu(), tol);
    ++out.steps;
    if (basis.rank == 0) return out;
    const auto q = basis.as_matrix();
    const auto qq = kron(q, q);
    auto r = qq.adjoint() * current.op().matrix() * qq;
    auto mu = q.adjoint() * current.mu() * q;
    current = EnhancedYB(YBOperator(basis.rank, std::move(r), tol), current.alpha(), current.beta(),
                         std::move(mu));
  }
  out.reduced = std::move(current);
  return out;
}

std::string_view EntanglementClass::name() const {
  if (is_product()) return "Product";
  if (is_swap_product()) return "SwapProduct";
  return "Entangling";
}

EntanglementClass classify_nonentangling(const ComplexMatrix& m, std::size_t d, Tolerance tol) {
  if (!is_invertible(m, tol)) throw SingularMatrix("classification needs an invertible operator");
  const auto s = swap_gate(d);
  const auto direct = operator_schmidt(m, d, tol);
  const auto swapped = operator_schmidt(m * s, d, tol);

  EntanglementClass out{Entangling{}, direct.rank, swapped.rank, 0.0};
  if (direct.rank == 1) {
    const auto& t = direct.terms.front();
    ProductForm p{t.left, t.right * Complex(t.weight)};
    canonicalize(p.a, p.b);
    out.residual = max_entry_distance(m, kron(p.a, p.b));
    out.form = std::move(p);
  } else if (swapped.rank == 1) {
    const auto& t = swapped.terms.front();
    SwapProductForm sp{t.left, t.right * Complex(t.weight)};
    canonicalize(sp.f, sp.g);
    out.residual = max_entry_distance(m, swap_product_matrix(sp.f, sp.g));
    out.form = std::move(sp);
  }
  return out;
}

bool CommutationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.check.passed; });
}

CommutationReport commutation_report(const ComplexMatrix& f, const ComplexMatrix& g,
                                     const ComplexMatrix& mu, Tolerance tol) {
  const auto f_inv = inverse(f, tol);
  const auto g_inv = inverse(g, tol);
  inverse(mu, tol);
  const auto id = ComplexMatrix::identity(f.rows());
  const auto gf = g * f;
  return CommutationReport{{{
      {"[F,G]=0", residual_check(f * g, g * f, tol)},
      {"[F,mu]=0", residual_check(f * mu, mu * f, tol)},
      {"[G,mu]=0", residual_check(g * mu, mu * g, tol)},
      {"(GF)^2=1", residual_check(gf * gf, id, tol)},
      {"mu.GF=1", residual_check(mu * gf, id, tol)},
      {"mu.F.mu.G=mu", residual_check(mu * f * mu * g, mu, tol)},
      {"mu.G^-1.mu.F^-1=mu", residual_check(mu * g_inv * mu * f_inv, mu, tol)},
  }}};
}

}  // namespace turaev
