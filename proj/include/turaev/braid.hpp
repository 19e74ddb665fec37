#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace turaev {

/// A word in the Artin generators of B_n. Letter k stands for sigma_|k|
/// (k > 0) or its inverse (k < 0); sigma_j is the crossing in which the
/// strand in position j passes over the strand in position j + 1.
///
/// As an operator the word composes right-to-left (the last letter acts
/// first); as a diagram it is read left-to-right. Words are never freely
/// reduced by any routine here.
class BraidWord {
 public:
  /// Identity braid on `strands` strands.
  explicit BraidWord(std::size_t strands);
  BraidWord(std::size_t strands, std::vector<int> letters);

  std::size_t strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  std::size_t strands_;
  std::vector<int> letters_;
};

/// images[p] is the right-hand position (0-based) reached by the strand that
/// starts at left-hand position p.
struct StrandPermutation {
  std::vector<std::size_t> images;

  /// Cycles, each listed from its smallest element, ordered by that element.
  std::vector<std::vector<std::size_t>> cycles() const;
  friend bool operator==(const StrandPermutation&, const StrandPermutation&) = default;
};

/// Accepts "s1 s2^-1 ..." or "1 -2 ...", each optionally prefixed by "n=<strands>;".
/// Without a prefix the strand count is max|letter| + 1 (1 for an empty word).
BraidWord parse_braid(std::string_view text);

/// Canonical text form, always numeric with the strand prefix: "n=3; 1 -2 1 -2".
std::string format_braid(const BraidWord& b);

int writhe(const BraidWord& b);
StrandPermutation permutation(const BraidWord& b);
std::size_t components(const BraidWord& b);

/// Concatenation a . b . a^{-1}; strand counts must agree.
BraidWord conjugate(const BraidWord& b, const BraidWord& a);

/// i_{n+1}(b) sigma_n^{sign}; sign is +1 or -1.
BraidWord stabilize(const BraidWord& b, int sign);

BraidWord switch_crossing(const BraidWord& b, std::size_t position);
BraidWord switch_crossings(const BraidWord& b, const std::vector<std::size_t>& positions);

/// Letter positions whose switching makes the closure a descending diagram
/// (hence an unknot). The closure is walked from the left end of strand 1 in
/// diagram order; each crossing met for the first time on its under-strand is
/// flipped. Positions come back in the order they were met. Throws NotAKnot
/// unless the closure has one component.
std::vector<std::size_t> descending_switches(const BraidWord& b);

/// Letters uniform over {+-1, ..., +-(strands-1)}; empty when strands == 1.
BraidWord random_braid(std::size_t strands, std::size_t length, std::uint64_t seed);

struct LinkFixture {
  std::string name;
  BraidWord braid;
  std::size_t components;
  bool is_knot;
};

/// Standard presentations: unknots in B1/B2, trefoil and mirror, figure-eight,
/// 5_1, granny, Hopf link, two-component unlink.
const std::vector<LinkFixture>& fixture_links();
const LinkFixture& fixture_link(std::string_view name);

}  // namespace turaev
