#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include "oracles.hpp"
#include "turaev/errors.hpp"
#include "turaev/random.hpp"
#include "turaev/yang_baxter.hpp"

using namespace turaev;

namespace {

ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (auto& z : m.entries()) z = rng.complex_box();
  return m;
}

ComplexMatrix cnot() {
  return ComplexMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
}

ComplexMatrix pauli_x() { return ComplexMatrix::from_rows({{0, 1}, {1, 0}}); }

bool scalars_close(Scalars s, Complex alpha, Complex beta, double eps = 1e-10) {
  return approx_eq(s.alpha, alpha, Tolerance(eps)) && approx_eq(s.beta, beta, Tolerance(eps));
}

}  // namespace

TEST_CASE("Yang-Baxter check") {
  CHECK(check_yang_baxter(YBOperator(2, swap_gate(2))).passed);
  CHECK(check_yang_baxter(YBOperator(3, swap_gate(3))).passed);
  CHECK(check_yang_baxter(cr_entangling_operator().op()).passed);
  const auto bad = check_yang_baxter(YBOperator(2, cnot()));
  CHECK_FALSE(bad.passed);
  CHECK(bad.residual > 0.5);

  // A (x) B solves the equation only in degenerate cases.
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_matrix(rng, 2, 2) + ComplexMatrix::identity(2) * 3.0;
    const auto b = random_matrix(rng, 2, 2) + ComplexMatrix::identity(2) * 3.0;
    CHECK_FALSE(check_yang_baxter(YBOperator(2, kron(a, b))).passed);
  }
}

TEST_CASE("YB operator construction") {
  CHECK_THROWS_AS(YBOperator(2, ComplexMatrix::identity(3)), DimensionMismatch);
  CHECK_THROWS_AS(YBOperator(2, ComplexMatrix::diagonal({1.0, 1.0, 1.0, 0.0})), SingularMatrix);
  const YBOperator op(2, swap_gate(2));
  CHECK(approx_eq(op.matrix() * op.inverse_matrix(), ComplexMatrix::identity(4)));
  const auto s = op.scaled(Complex(0.0, 2.0));
  CHECK(approx_eq(s.matrix() * s.inverse_matrix(), ComplexMatrix::identity(4)));
  CHECK_THROWS_AS(EnhancedYB(op, 0.0, 1.0, ComplexMatrix::identity(2)), InputError);
  CHECK_THROWS_AS(EnhancedYB(op, ComplexMatrix::identity(3)), DimensionMismatch);
}

TEST_CASE("fixture operators are enhanced Yang-Baxter operators") {
  CHECK(fixture_operators().size() == 10);
  for (const auto& f : fixture_operators()) {
    INFO(f.name);
    const auto yb = check_yang_baxter(f.op.op());
    CHECK(yb.passed);
    CHECK(yb.residual < 1e-12);
    const auto report = check_enhanced(f.op);
    CHECK(report.commutes.passed);
    CHECK(report.trace_plus.passed);
    CHECK(report.trace_minus.passed);
  }
  CHECK_THROWS_AS(fixture_operator("missing"), InputError);
}

TEST_CASE("random swap-form and scalar operators are enhanced") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t d = 2 + seed % 3;
    const auto e = swap_random_operator(seed, d);
    INFO("seed " << seed << " d " << d);
    CHECK(check_yang_baxter(e.op()).passed);
    CHECK(check_enhanced(e).passed());
    CHECK(classify_nonentangling(e.op().matrix(), d).is_swap_product());

    const auto s = scalar_random_operator(seed, 2);
    CHECK(check_enhanced(s).passed());
  }
  CHECK(swap_random_operator(5).op().matrix() == swap_random_operator(5).op().matrix());
}

TEST_CASE("enhancement failures are reported per condition") {
  const EnhancedYB bad_mu(cr_swap_operator().op(), ComplexMatrix::identity(2));
  const auto report = check_enhanced(bad_mu);
  CHECK(report.commutes.passed);
  CHECK_FALSE(report.trace_plus.passed);
  CHECK_FALSE(report.passed());

  const EnhancedYB wrong_scalar(cr_swap_operator().op(), 2.0, 1.0, cr_swap_operator().mu());
  const auto r2 = check_enhanced(wrong_scalar);
  CHECK(r2.commutes.passed);
  CHECK_FALSE(r2.trace_plus.passed);
  CHECK_FALSE(r2.trace_minus.passed);
}

TEST_CASE("scalar inference") {
  CHECK(scalars_close(infer_scalars(cr_entangling_operator().op(), cr_entangling_operator().mu()), 1.0, 1.0));
  CHECK(scalars_close(infer_scalars(YBOperator(2, swap_gate(2)), ComplexMatrix::identity(2)), 1.0, 1.0));
  for (Complex r : {Complex(1.0), Complex(-1.0), Complex(0.3, 1.7), Complex(-2.0, -0.5)}) {
    const auto s = infer_scalars(YBOperator(2, ComplexMatrix::identity(4) * r), ComplexMatrix::identity(2));
    // beta^2 = 4 picks the principal root 2 whatever r is
    CHECK(scalars_close(s, r, 2.0));
  }
  CHECK_THROWS_AS(infer_scalars(YBOperator(2, swap_gate(2)), ComplexMatrix(2, 2)), ZeroMu);
  CHECK_THROWS_AS(infer_scalars(cr_swap_operator().op(), ComplexMatrix::identity(2)), NotProportional);
  CHECK_THROWS_AS(infer_scalars(YBOperator(2, swap_gate(2)), ComplexMatrix::identity(3)), DimensionMismatch);

  SUBCASE("Kauffman scalars") {
    const Complex a = std::polar(1.0, std::numbers::pi / 5);
    const auto e = kauffman_operator(a);
    CHECK(approx_eq(e.alpha(), -a * a * a, Tolerance(1e-12)));
    CHECK(approx_eq(e.beta(), Complex(1.0), Tolerance(1e-12)));
  }
}

TEST_CASE("normalization") {
  const Complex a = std::polar(1.0, 0.37);
  const auto e = kauffman_operator(a);
  const auto n = normalize(e);
  CHECK(n.normalized());
  CHECK(check_yang_baxter(n.op()).passed);
  CHECK(check_enhanced(n).passed());
  CHECK(approx_eq(n.op().matrix() * e.alpha(), e.op().matrix()));
  CHECK(approx_eq(n.mu() * e.beta(), e.mu()));

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto r = swap_random_operator(seed, 2);
    CHECK(check_enhanced(normalize(r)).passed());
  }
  const auto cr = cr_swap_operator();
  CHECK(normalize(cr).op().matrix() == cr.op().matrix());
}

TEST_CASE("mu reduction") {
  SUBCASE("invertible mu is untouched") {
    const auto red = reduce_mu(cr_swap_operator());
    REQUIRE_FALSE(red.identically_zero());
    CHECK(red.steps == 0);
    CHECK(red.reduced->op().matrix() == cr_swap_operator().op().matrix());
  }
  SUBCASE("padded operator reduces to its core") {
    const auto padded = padded_cr_swap_operator();
    REQUIRE(check_yang_baxter(padded.op()).passed);
    REQUIRE(check_enhanced(padded).passed());
    const auto red = reduce_mu(padded);
    REQUIRE_FALSE(red.identically_zero());
    CHECK(red.steps == 1);
    CHECK(red.reduced->dim() == 2);
    CHECK(approx_eq(red.reduced->op().matrix(), cr_swap_operator().op().matrix(), Tolerance(1e-12)));
    CHECK(approx_eq(red.reduced->mu(), cr_swap_operator().mu(), Tolerance(1e-12)));
    CHECK(check_enhanced(*red.reduced).passed());
  }
  SUBCASE("zero mu") {
    const EnhancedYB zero(YBOperator(2, swap_gate(2)), ComplexMatrix(2, 2));
    const auto red = reduce_mu(zero);
    CHECK(red.identically_zero());
    CHECK(red.steps == 1);
  }
}

TEST_CASE("classification") {
  CHECK(classify_nonentangling(ComplexMatrix::identity(4), 2).is_product());
  CHECK(classify_nonentangling(swap_gate(2), 2).is_swap_product());
  CHECK(classify_nonentangling(cr_swap_operator().op().matrix(), 2).is_swap_product());
  CHECK(classify_nonentangling(cr_entangling_operator().op().matrix(), 2).is_entangling());
  CHECK(classify_nonentangling(cnot(), 2).is_entangling());
  CHECK(classify_nonentangling(kauffman_operator(std::polar(1.0, 0.2)).op().matrix(), 2).is_entangling());
  CHECK_THROWS_AS(classify_nonentangling(ComplexMatrix::diagonal({1.0, 1.0, 1.0, 0.0}), 2), SingularMatrix);

  const auto id_class = classify_nonentangling(ComplexMatrix::identity(4), 2);
  CHECK(id_class.name() == "Product");
  CHECK(id_class.schmidt_rank == 1);
  CHECK(id_class.swapped_schmidt_rank == 4);
  CHECK(classify_nonentangling(cnot(), 2).name() == "Entangling");

  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const auto a = random_matrix(rng, d, d) + ComplexMatrix::identity(d) * 2.0;
    const auto b = random_matrix(rng, d, d) + ComplexMatrix::identity(d) * 2.0;

    const auto prod = classify_nonentangling(kron(a, b), d);
    REQUIRE(prod.is_product());
    CHECK_FALSE(prod.is_swap_product());
    const auto& pf = std::get<ProductForm>(prod.form);
    CHECK(approx_eq(kron(pf.a, pf.b), kron(a, b)));
    CHECK(prod.residual < 1e-10);

    const auto swapped = classify_nonentangling(kron(a, b) * swap_gate(d), d);
    REQUIRE(swapped.is_swap_product());
    CHECK_FALSE(swapped.is_product());
    const auto& sf = std::get<SwapProductForm>(swapped.form);
    CHECK(approx_eq(swap_product_matrix(sf.f, sf.g), kron(a, b) * swap_gate(d)));

    // Canonical scaling: the largest entry of the first factor is exactly 1.
    double top = 0.0;
    for (auto z : sf.f.entries()) top = std::max(top, std::abs(z));
    CHECK(top == doctest::Approx(1.0).epsilon(1e-12));

    const auto generic = random_matrix(rng, d * d, d * d);
    CHECK(classify_nonentangling(generic, d).is_entangling());
  }
}

TEST_CASE("swap product matrix") {
  Rng rng(5);
  const auto f = random_matrix(rng, 2, 2), g = random_matrix(rng, 2, 2);
  CHECK(approx_eq(swap_product_matrix(f, g), oracle::matmul(oracle::kron(f, g), swap_gate(2)), Tolerance(1e-14)));
  CHECK(swap_product_matrix(ComplexMatrix::identity(3), ComplexMatrix::identity(3)) == swap_gate(3));
}

TEST_CASE("commutation report") {
  const auto g = ComplexMatrix::diagonal({1.0, -1.0});
  const auto good = commutation_report(ComplexMatrix::identity(2), g, g);
  CHECK(good.passed());
  CHECK(good.checks[0].name == "[F,G]=0");

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto n = normalize(swap_random_operator(seed, 2));
    const auto cls = classify_nonentangling(n.op().matrix(), 2);
    REQUIRE(cls.is_swap_product());
    const auto& sf = std::get<SwapProductForm>(cls.form);
    CHECK(commutation_report(sf.f, sf.g, n.mu()).passed());
  }

  // G = X does not commute with mu = diag(1,-1)
  const auto bad = commutation_report(ComplexMatrix::identity(2), pauli_x(), g);
  CHECK_FALSE(bad.passed());
  CHECK(bad.checks[0].check.passed);
  CHECK(bad.checks[1].check.passed);
  CHECK_FALSE(bad.checks[2].check.passed);

  CHECK_THROWS_AS(commutation_report(ComplexMatrix::identity(2), g, ComplexMatrix(2, 2)), SingularMatrix);
}
