#include <algorithm>
#include <cstdlib>

#include "turaev/errors.hpp"
#include "turaev/evaluate.hpp"
#include "detail.hpp"

namespace turaev {

namespace {

Complex int_power(Complex base, long exp) {
  Complex result = 1.0;
  Complex b = exp < 0 ? 1.0 / base : base;
  unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  while (e) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

// A wire as it leaves the circuit at some slot: which input slot it entered
// from, and the atoms it collected in the order they acted.
struct Wire {
  std::size_t source;
  std::vector<Atom> applied;
};

}  // namespace

Complex scalar_prefactor(const EnhancedYB& e, const BraidWord& b) {
  return int_power(e.alpha(), -writhe(b)) * int_power(e.beta(), -static_cast<long>(b.strands()));
}

Complex integer_power(Complex base, long exp) { return int_power(base, exp); }

std::string_view atom_name(Atom a) {
  switch (a) {
    case Atom::F: return "F";
    case Atom::G: return "G";
    case Atom::FInv: return "F^-1";
    case Atom::GInv: return "G^-1";
    case Atom::Mu: return "mu";
  }
  return "?";
}

WireWord wire_words(const BraidWord& b) {
  const std::size_t n = b.strands();
  std::vector<Wire> slots(n);
  for (std::size_t p = 0; p < n; ++p) slots[p] = Wire{p, {Atom::Mu}};

  const auto& letters = b.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const int k = *it;
    const auto j = static_cast<std::size_t>(std::abs(k)) - 1;
    std::swap(slots[j], slots[j + 1]);
    slots[j].applied.push_back(k > 0 ? Atom::F : Atom::GInv);
    slots[j + 1].applied.push_back(k > 0 ? Atom::G : Atom::FInv);
  }

  // Output slot p carries P_p e_{source(p)}; the trace over a cycle
  // p -> source(p) -> ... is Tr[P_p P_source(p) ...], and each P lists its
  // latest atom first.
  WireWord out;
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Atom> word;
    for (std::size_t p = start; !seen[p]; p = slots[p].source) {
      seen[p] = true;
      word.insert(word.end(), slots[p].applied.rbegin(), slots[p].applied.rend());
    }
    out.components.push_back(std::move(word));
    out.first_strand.push_back(start);
  }
  return out;
}

ComplexMatrix wire_product(const std::vector<Atom>& atoms, const ComplexMatrix& f, const ComplexMatrix& g,
                           const ComplexMatrix& mu, Tolerance tol) {
  const bool needs_inverse = std::any_of(atoms.begin(), atoms.end(),
                                         [](Atom a) { return a == Atom::FInv || a == Atom::GInv; });
  const ComplexMatrix f_inv = needs_inverse ? inverse(f, tol) : f;
  const ComplexMatrix g_inv = needs_inverse ? inverse(g, tol) : g;
  ComplexMatrix acc = ComplexMatrix::identity(f.rows());
  for (Atom a : atoms) {
    switch (a) {
      case Atom::F: acc = acc * f; break;
      case Atom::G: acc = acc * g; break;
      case Atom::FInv: acc = acc * f_inv; break;
      case Atom::GInv: acc = acc * g_inv; break;
      case Atom::Mu: acc = acc * mu; break;
    }
  }
  return acc;
}

InvariantValue wire_invariant(const EnhancedYB& e, const BraidWord& b, Tolerance tol) {
  const auto cls = classify_nonentangling(e.op().matrix(), e.dim(), tol);
  const auto* form = std::get_if<SwapProductForm>(&cls.form);
  if (!form)
    throw FormMismatch("wire evaluation needs R = (F (x) G) o S, but R is " + std::string(cls.name()) +
                       "; use --method dense");
  const WireWord words = wire_words(b);
  Complex value = scalar_prefactor(e, b);
  for (const auto& word : words.components) value *= wire_product(word, form->f, form->g, e.mu(), tol).trace();
  return {value, Method::Wire, writhe(b), b.strands(), words.components.size()};
}

}  // namespace turaev
