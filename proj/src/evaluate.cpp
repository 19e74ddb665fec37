#include "turaev/evaluate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "detail.hpp"
#include "turaev/errors.hpp"

namespace turaev {

namespace {

std::size_t checked_dimension(std::size_t d, std::size_t n, std::size_t cap) {
  std::size_t dim = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (dim > cap / d)
      throw DimensionCapExceeded("dense evaluation needs d^n = " + std::to_string(d) + "^" +
                                 std::to_string(n) + " > cap " + std::to_string(cap) +
                                 "; raise --cap or use --method wire/product");
    dim *= d;
  }
  if (dim > cap)
    throw DimensionCapExceeded("dense dimension " + std::to_string(dim) + " exceeds cap " +
                               std::to_string(cap));
  return dim;
}

// One letter of the word as an action on (C^d)^(x)n: the two-site matrix and
// the stride of the lower of its two slots.
struct Gate {
  const ComplexMatrix* matrix;
  std::size_t stride;
};

// Gates in the order they act on a vector (last letter first).
std::vector<Gate> gate_list(const BraidWord& b, const YBOperator& op) {
  const std::size_t n = b.strands();
  const std::size_t d = op.dim();
  std::vector<Gate> gates;
  gates.reserve(b.length());
  const auto& letters = b.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const auto slot = static_cast<std::size_t>(std::abs(*it)) - 1;
    std::size_t stride = 1;
    for (std::size_t p = slot + 2; p < n; ++p) stride *= d;
    gates.push_back({*it > 0 ? &op.matrix() : &op.inverse_matrix(), stride});
  }
  return gates;
}

// Applies the gates to `state` in place; `in`/`out` are d^2-sized buffers.
void apply_gates(std::vector<Complex>& state, const std::vector<Gate>& gates, std::size_t d,
                 std::vector<Complex>& in, std::vector<Complex>& out) {
  const std::size_t dd = d * d;
  const std::size_t dim = state.size();
  for (const auto& gate : gates) {
    const std::size_t s = gate.stride;
    const std::size_t block = dd * s;
    const ComplexMatrix& m = *gate.matrix;
    for (std::size_t hi = 0; hi < dim; hi += block) {
      for (std::size_t lo = 0; lo < s; ++lo) {
        const std::size_t base = hi + lo;
        for (std::size_t ab = 0; ab < dd; ++ab) in[ab] = state[base + ab * s];
        for (std::size_t row = 0; row < dd; ++row) {
          Complex acc = 0.0;
          for (std::size_t col = 0; col < dd; ++col) acc += m(row, col) * in[col];
          out[row] = acc;
        }
        for (std::size_t ab = 0; ab < dd; ++ab) state[base + ab * s] = out[ab];
      }
    }
  }
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Dense: return "dense";
    case Method::Product: return "product";
    case Method::Wire: return "wire";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::Auto, Method::Dense, Method::Product, Method::Wire})
    if (method_name(m) == name) return m;
  throw InputError("unknown method '" + std::string(name) + "' (auto|dense|product|wire)");
}

ComplexMatrix represent(const BraidWord& b, const YBOperator& op, std::size_t cap) {
  const std::size_t d = op.dim();
  const std::size_t dim = checked_dimension(d, b.strands(), cap);
  const auto gates = gate_list(b, op);
  std::vector<Complex> in(d * d), out(d * d), column(dim);
  ComplexMatrix result(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    std::fill(column.begin(), column.end(), Complex{});
    column[c] = 1.0;
    apply_gates(column, gates, d, in, out);
    for (std::size_t r = 0; r < dim; ++r) result(r, c) = column[r];
  }
  return result;
}

InvariantValue dense_invariant(const EnhancedYB& e, const BraidWord& b, const EvalOptions& opts) {
  const std::size_t d = e.dim();
  const std::size_t n = b.strands();
  const std::size_t dim = checked_dimension(d, n, opts.dense_cap);
  const auto gates = gate_list(b, e.op());
  const ComplexMatrix& mu = e.mu();

  std::vector<Complex> diagonal(dim);
  std::atomic<std::size_t> next{0};
  constexpr std::size_t chunk = 16;

  auto worker = [&] {
    std::vector<Complex> state(dim), in(d * d), out(d * d);
    std::vector<std::size_t> digits(n);
    for (;;) {
      const std::size_t begin = next.fetch_add(chunk);
      if (begin >= dim) break;
      for (std::size_t x = begin; x < std::min(dim, begin + chunk); ++x) {
        for (std::size_t p = n, rest = x; p-- > 0; rest /= d) digits[p] = rest % d;
        // mu^(x)n e_x is the product vector (mu e_{x_1}) (x) ... (x) (mu e_{x_n}).
        state[0] = 1.0;
        std::size_t len = 1;
        for (std::size_t p = 0; p < n; ++p) {
          for (std::size_t i = len; i-- > 0;) {
            const Complex amp = state[i];
            for (std::size_t y = 0; y < d; ++y) state[i * d + y] = amp * mu(y, digits[p]);
          }
          len *= d;
        }
        apply_gates(state, gates, d, in, out);
        diagonal[x] = state[x];
      }
    }
  };

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, dim / chunk)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  Complex trace = 0.0;
  for (const auto& z : diagonal) trace += z;
  return {scalar_prefactor(e, b) * trace, Method::Dense, writhe(b), n, components(b)};
}

InvariantValue product_invariant(const EnhancedYB& e, const BraidWord& b, Tolerance tol) {
  if (!e.normalized()) throw NotNormalized("product formula needs a normalized operator (alpha = beta = 1)");
  const auto& r = e.op().matrix();
  const Complex scalar = r(0, 0);
  if (!approx_eq(r, ComplexMatrix::identity(r.rows()) * scalar, tol))
    throw FormMismatch("product formula needs R = r 1; use --method dense");
  const Complex value =
      integer_power(scalar, writhe(b)) * integer_power(e.mu().trace(), static_cast<long>(b.strands()));
  return {value, Method::Product, writhe(b), b.strands(), components(b)};
}

InvariantValue invariant(const EnhancedYB& e, const BraidWord& b, Method method, const EvalOptions& opts) {
  switch (method) {
    case Method::Dense: return dense_invariant(e, b, opts);
    case Method::Product: return product_invariant(e, b, opts.tol);
    case Method::Wire: return wire_invariant(e, b, opts.tol);
    case Method::Auto: break;
  }
  const auto cls = classify_nonentangling(e.op().matrix(), e.dim(), opts.tol);
  if (cls.is_product()) return product_invariant(normalize(e), b, opts.tol);
  if (cls.is_swap_product()) return wire_invariant(e, b, opts.tol);
  return dense_invariant(e, b, opts);
}

}  // namespace turaev
