#include <cmath>
#include <numbers>

#include "turaev/errors.hpp"
#include "turaev/random.hpp"
#include "turaev/yang_baxter.hpp"

namespace turaev {

namespace {

// Modulus log-uniform in [1/2, 2], phase uniform.
Complex random_unit_scale(Rng& rng) {
  const double mag = std::exp(rng.uniform(-std::numbers::ln2, std::numbers::ln2));
  const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return std::polar(mag, phase);
}

// Random unitary (Gram-Schmidt on a random complex matrix) times a unit upper
// triangular matrix with small off-diagonal entries: a random but
// well-conditioned change of basis.
ComplexMatrix random_basis(Rng& rng, std::size_t d) {
  std::vector<std::vector<Complex>> cols;
  while (cols.size() < d) {
    std::vector<Complex> v(d);
    for (auto& z : v) z = rng.complex_box();
    for (const auto& q : cols) {
      Complex dot = 0.0;
      for (std::size_t i = 0; i < d; ++i) dot += std::conj(q[i]) * v[i];
      for (std::size_t i = 0; i < d; ++i) v[i] -= dot * q[i];
    }
    double norm = 0.0;
    for (const auto& z : v) norm += std::norm(z);
    norm = std::sqrt(norm);
    if (norm < 1e-3) continue;
    for (auto& z : v) z /= norm;
    cols.push_back(std::move(v));
  }
  ComplexMatrix u(d, d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < d; ++r) u(r, c) = cols[c][r];
  ComplexMatrix t = ComplexMatrix::identity(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = r + 1; c < d; ++c) t(r, c) = 0.4 * rng.complex_box();
  return u * t;
}

EnhancedYB with_inferred_scalars(YBOperator op, ComplexMatrix mu) {
  const Scalars s = infer_scalars(op, mu);
  return EnhancedYB(std::move(op), s.alpha, s.beta, std::move(mu));
}

}  // namespace

ComplexMatrix swap_product_matrix(const ComplexMatrix& f, const ComplexMatrix& g) {
  if (f.rows() != g.rows() || !f.is_square() || !g.is_square())
    throw DimensionMismatch("swap-product factors must be square of equal size");
  return kron(f, g) * swap_gate(f.rows());
}

EnhancedYB cr_swap_operator() {
  const auto f = ComplexMatrix::identity(2);
  const auto g = ComplexMatrix::diagonal({1.0, -1.0});
  return EnhancedYB(YBOperator(2, swap_product_matrix(f, g)), g);
}

EnhancedYB cr_entangling_operator() {
  auto r = ComplexMatrix::from_rows({
      {1, 0, 0, 0},
      {0, 0, 1, 0},
      {0, 1, 0, 0},
      {0, 0, 0, -1},
  });
  return EnhancedYB(YBOperator(2, std::move(r)), ComplexMatrix::diagonal({1.0, -1.0}));
}

EnhancedYB pure_swap_operator(std::size_t d) {
  return EnhancedYB(YBOperator(d, swap_gate(d)), ComplexMatrix::identity(d));
}

EnhancedYB scalar_operator(Complex r) {
  return EnhancedYB(YBOperator(2, ComplexMatrix::identity(4) * r), r, 2.0, ComplexMatrix::identity(2));
}

EnhancedYB kauffman_operator(Complex a) {
  const Complex i(0.0, 1.0);
  const Complex c[4] = {0.0, i * a, -i / a, 0.0};
  ComplexMatrix r = ComplexMatrix::identity(4) * a;
  for (std::size_t row = 0; row < 4; ++row)
    for (std::size_t col = 0; col < 4; ++col) r(row, col) += c[row] * c[col] / a;
  auto mu = ComplexMatrix::diagonal({-a * a, -1.0 / (a * a)});
  return with_inferred_scalars(YBOperator(2, std::move(r)), std::move(mu));
}

EnhancedYB swap_random_operator(std::uint64_t seed, std::size_t d) {
  Rng rng(seed);
  const auto p = random_basis(rng, d);
  const auto p_inv = inverse(p);
  std::vector<Complex> f_eig(d), g_eig(d), mu_eig(d);
  for (std::size_t i = 0; i < d; ++i) {
    const double sign = rng.coin() ? 1.0 : -1.0;
    f_eig[i] = random_unit_scale(rng);
    g_eig[i] = sign / f_eig[i];
    mu_eig[i] = sign;
  }
  const auto f = p * ComplexMatrix::diagonal(f_eig) * p_inv;
  const auto g = p * ComplexMatrix::diagonal(g_eig) * p_inv;
  const auto mu = p * ComplexMatrix::diagonal(mu_eig) * p_inv;
  const Complex r_scale = random_unit_scale(rng);
  const Complex mu_scale = random_unit_scale(rng);
  return with_inferred_scalars(YBOperator(d, swap_product_matrix(f, g) * r_scale), mu * mu_scale);
}

EnhancedYB scalar_random_operator(std::uint64_t seed, std::size_t d) {
  Rng rng(seed);
  const Complex r = random_unit_scale(rng);
  ComplexMatrix mu(d, d);
  do {
    for (auto& z : mu.entries()) z = rng.complex_box();
  } while (std::abs(mu.trace()) < 0.5);
  return with_inferred_scalars(YBOperator(d, ComplexMatrix::identity(d * d) * r), std::move(mu));
}

EnhancedYB padded_cr_swap_operator() {
  const auto f = ComplexMatrix::identity(3);
  const auto g = ComplexMatrix::diagonal({1.0, -1.0, 1.0});
  return EnhancedYB(YBOperator(3, swap_product_matrix(f, g)), ComplexMatrix::diagonal({1.0, -1.0, 0.0}));
}

const std::vector<NamedOperator>& fixture_operators() {
  static const std::vector<NamedOperator> table = [] {
    std::vector<NamedOperator> t;
    t.push_back({"cr-swap", cr_swap_operator()});
    t.push_back({"cr-entangling", cr_entangling_operator()});
    t.push_back({"pure-swap", pure_swap_operator(2)});
    t.push_back({"scalar+1", scalar_operator(1.0)});
    t.push_back({"scalar-1", scalar_operator(-1.0)});
    t.push_back({"kauffman", kauffman_operator(std::polar(1.0, std::numbers::pi / 5))});
    for (std::uint64_t seed = 1; seed <= 3; ++seed)
      t.push_back({"swap-random-" + std::to_string(seed), swap_random_operator(seed, 2)});
    t.push_back({"swap-random-d3", swap_random_operator(1, 3)});
    return t;
  }();
  return table;
}

const EnhancedYB& fixture_operator(std::string_view name) {
  for (const auto& f : fixture_operators())
    if (f.name == name) return f.op;
  throw InputError("unknown operator fixture '" + std::string(name) + "'");
}

}  // namespace turaev
