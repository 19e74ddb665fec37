#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "turaev/errors.hpp"
#include "turaev/linalg.hpp"
#include "turaev/random.hpp"

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

const Tolerance tight{1e-12};

}  // namespace

TEST_CASE("matrix construction validates extents") {
  CHECK_THROWS_AS(ComplexMatrix(0, 3), DimensionMismatch);
  CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)), DimensionMismatch);
  CHECK_THROWS_AS(ComplexMatrix::from_rows({{1, 2}, {3}}), DimensionMismatch);
  CHECK_THROWS_AS(Tolerance(-1.0), InputError);
  CHECK(ComplexMatrix::identity(3).trace() == Complex(3.0));
}

TEST_CASE("kron") {
  CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) == ComplexMatrix::identity(4));
  CHECK(kron(ComplexMatrix::diagonal({1.0, -1.0}), ComplexMatrix::identity(2)) ==
        ComplexMatrix::diagonal({1.0, 1.0, -1.0, -1.0}));

  SUBCASE("matches the quadruple-loop formula") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_matrix(rng, 2, 2);
      const auto b = random_matrix(rng, 2, 2);
      CHECK(kron(a, b) == oracle::kron(a, b));
    }
    const auto a = random_matrix(rng, 2, 3);
    const auto b = random_matrix(rng, 3, 2);
    CHECK(kron(a, b) == oracle::kron(a, b));
  }

  SUBCASE("associative") {
    Rng rng(12);
    const auto a = random_matrix(rng, 2, 2), b = random_matrix(rng, 3, 3), c = random_matrix(rng, 2, 2);
    CHECK(approx_eq(kron(kron(a, b), c), kron(a, kron(b, c)), tight));
  }
}

TEST_CASE("partial trace over the second factor") {
  CHECK(partial_trace_second(ComplexMatrix::identity(4), 2) == ComplexMatrix::identity(2) * 2.0);
  CHECK_THROWS_AS(partial_trace_second(ComplexMatrix::identity(3), 2), DimensionMismatch);

  Rng rng(21);
  for (std::size_t d : {2u, 3u}) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto a = random_matrix(rng, d, d);
      const auto b = random_matrix(rng, d, d);
      // Tr_2(A (x) B) = Tr(B) A
      CHECK(approx_eq(partial_trace_second(kron(a, b), d), a * b.trace(), tight));
      // Tr_2((A (x) B) S) = A B
      CHECK(approx_eq(partial_trace_second(kron(a, b) * swap_gate(d), d), a * b, tight));
      const auto m = random_matrix(rng, d * d, d * d);
      CHECK(approx_eq(partial_trace_second(m, d), oracle::partial_trace_second(m, d), tight));
      CHECK(approx_eq(partial_trace_second(m, d).trace(), m.trace(), tight));
    }
  }
}

TEST_CASE("swap gate exchanges tensor factors") {
  Rng rng(3);
  const auto a = random_matrix(rng, 3, 3), b = random_matrix(rng, 3, 3);
  const auto s = swap_gate(3);
  CHECK(approx_eq(s * kron(a, b) * s, kron(b, a), tight));
  CHECK(s * s == ComplexMatrix::identity(9));
}

TEST_CASE("operator Schmidt rank") {
  // Frozen against exact elimination on the reshuffled matrix.
  REQUIRE(oracle::rank(oracle::reshuffle(swap_gate(2), 2)) == 4);
  REQUIRE(oracle::rank(oracle::reshuffle(cnot(), 2)) == 2);
  CHECK(operator_schmidt_rank(swap_gate(2), 2) == 4);
  CHECK(operator_schmidt_rank(cnot(), 2) == 2);
  CHECK_THROWS_AS(operator_schmidt(ComplexMatrix::identity(5), 2), DimensionMismatch);

  Rng rng(31);
  for (std::size_t d : {2u, 3u}) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto a = random_matrix(rng, d, d), b = random_matrix(rng, d, d);
      const auto dec = operator_schmidt(kron(a, b), d);
      CHECK(dec.rank == 1);
      CHECK(approx_eq(dec.reconstruct(d), kron(a, b)));

      const auto m = random_matrix(rng, d * d, d * d);
      const auto full = operator_schmidt(m, d);
      CHECK(full.rank == d * d);
      CHECK(approx_eq(full.reconstruct(d), m));
    }
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(ComplexMatrix::identity(4)) == ComplexMatrix::identity(4));
  CHECK(approx_eq(inverse(ComplexMatrix::diagonal({1.0, -1.0})), ComplexMatrix::diagonal({1.0, -1.0}), tight));
  CHECK_THROWS_AS(inverse(ComplexMatrix::diagonal({1.0, 0.0})), SingularMatrix);
  CHECK_THROWS_AS(inverse(ComplexMatrix::diagonal({1.0, 1e-12})), SingularMatrix);
  CHECK_THROWS_AS(inverse(ComplexMatrix(2, 3)), DimensionMismatch);

  Rng rng(41);
  for (std::size_t n : {2u, 4u, 9u}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto m = random_matrix(rng, n, n) + ComplexMatrix::identity(n) * 2.0;
      CHECK(approx_eq(m * inverse(m), ComplexMatrix::identity(n)));
    }
  }
}

TEST_CASE("approx_eq uses the mixed absolute/relative rule") {
  const auto id = ComplexMatrix::identity(2);
  CHECK(approx_eq(id, id, Tolerance(0.0)));
  auto nudged = id;
  nudged(0, 1) += 1e-12;
  CHECK(approx_eq(id, nudged, Tolerance(1e-9)));
  CHECK_FALSE(approx_eq(id, ComplexMatrix::diagonal({1.0, -1.0})));
  // at entry scale 1e6 the slack is about 1e-3
  const auto big = id * 1e6;
  auto big_nudged = big;
  big_nudged(0, 0) += 1e-4;
  CHECK(approx_eq(big, big_nudged));
  big_nudged(0, 0) += 1e-2;
  CHECK_FALSE(approx_eq(big, big_nudged));
  CHECK_THROWS_AS(approx_eq(id, ComplexMatrix::identity(3)), DimensionMismatch);
}

TEST_CASE("range basis is canonical for coordinate subspaces") {
  const auto basis = range_basis(ComplexMatrix::diagonal({1.0, -1.0, 0.0}));
  REQUIRE(basis.rank == 2);
  const auto q = basis.as_matrix();
  CHECK(approx_eq(q, ComplexMatrix::from_rows({{1, 0}, {0, 1}, {0, 0}}), tight));
  CHECK(range_basis(ComplexMatrix(3, 3)).rank == 0);

  Rng rng(51);
  const auto u = random_matrix(rng, 4, 2);
  const auto m = u * random_matrix(rng, 2, 4);
  const auto b = range_basis(m);
  REQUIRE(b.rank == 2);
  const auto qb = b.as_matrix();
  CHECK(approx_eq(qb.adjoint() * qb, ComplexMatrix::identity(2)));
  // projector onto the range fixes m
  CHECK(approx_eq(qb * qb.adjoint() * m, m));
}
