#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "turaev/braid.hpp"
#include "turaev/linalg.hpp"
#include "turaev/yang_baxter.hpp"

namespace turaev {

enum class Method { Auto, Dense, Product, Wire };

std::string_view method_name(Method m);
/// "auto" | "dense" | "product" | "wire"; throws InputError otherwise.
Method parse_method(std::string_view name);

struct InvariantValue {
  Complex value;
  Method method;
  int writhe;
  std::size_t strands;
  std::size_t components;
};

struct EvalOptions {
  /// Largest d^n the dense path will touch.
  std::size_t dense_cap = std::size_t{1} << 14;
  Tolerance tol{};
  /// Worker threads for the dense path; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// rho(b) = rho(l_1) rho(l_2) ... rho(l_k), the last letter acting first;
/// sigma_j acts as 1^(j-1) (x) R (x) 1^(n-j-1) and inverse letters use R^-1.
/// Materializes the d^n x d^n matrix, so meant for small checks.
ComplexMatrix represent(const BraidWord& b, const YBOperator& op,
                        std::size_t cap = std::size_t{1} << 14);

/// alpha^-w beta^-n Tr[rho(b) mu^(x)n], streaming each basis vector through the
/// gate list. The trace is summed in basis order, so the result does not
/// depend on the thread count.
InvariantValue dense_invariant(const EnhancedYB& e, const BraidWord& b, const EvalOptions& opts = {});

/// r^w Tr(mu)^n for a normalized operator with R = r 1. Throws NotNormalized
/// or FormMismatch.
InvariantValue product_invariant(const EnhancedYB& e, const BraidWord& b, Tolerance tol = {});

enum class Atom : std::uint8_t { F, G, FInv, GInv, Mu };

std::string_view atom_name(Atom a);

/// The operators met while following each component of the trace-closed
/// circuit of R = (F (x) G) o S. A positive letter on slots (j, j+1) swaps
/// them and then applies F to slot j and G to slot j+1; a negative letter
/// applies G^-1 to slot j and F^-1 to slot j+1 after the swap. Each strand's
/// closure arc contributes one Mu. Within a component, atoms are listed so
/// that the ordinary matrix product of the list, traced, is that component's
/// factor of the invariant. Components are ordered by their smallest strand.
struct WireWord {
  std::vector<std::vector<Atom>> components;
  /// Smallest strand (0-based) of each component; the list starts there.
  std::vector<std::size_t> first_strand;
};

WireWord wire_words(const BraidWord& b);

/// Ordered product of the atoms of one component.
ComplexMatrix wire_product(const std::vector<Atom>& atoms, const ComplexMatrix& f, const ComplexMatrix& g,
                           const ComplexMatrix& mu, Tolerance tol = {});

/// alpha^-w beta^-n prod_j Tr[A_j]. Throws FormMismatch unless R is a swap
/// product. Linear in the braid length and strand count.
InvariantValue wire_invariant(const EnhancedYB& e, const BraidWord& b, Tolerance tol = {});

/// Auto classifies R and uses the product or wire formula when it applies,
/// falling back to dense evaluation.
InvariantValue invariant(const EnhancedYB& e, const BraidWord& b, Method method = Method::Auto,
                         const EvalOptions& opts = {});

}  // namespace turaev
