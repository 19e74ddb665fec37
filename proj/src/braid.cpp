#include "turaev/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "turaev/errors.hpp"
#include "turaev/random.hpp"

namespace turaev {

namespace {

void check_letters(std::size_t strands, const std::vector<int>& letters) {
  for (int k : letters) {
    const auto j = static_cast<std::size_t>(std::abs(k));
    if (k == 0 || j >= strands)
      throw ParseError("letter " + std::to_string(k) + " is not a generator of B_" +
                       std::to_string(strands));
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_int(std::string_view s, long& out) {
  if (s.empty()) return false;
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

enum class TokenKind { Symbolic, Numeric };

int parse_token(std::string_view tok, TokenKind& kind) {
  long value = 0;
  if (tok.front() == 's') {
    kind = TokenKind::Symbolic;
    std::string_view body = tok.substr(1);
    bool inverse = false;
    if (const auto caret = body.find('^'); caret != std::string_view::npos) {
      if (body.substr(caret) != "^-1") throw ParseError("malformed exponent in token '" + std::string(tok) + "'");
      inverse = true;
      body = body.substr(0, caret);
    }
    if (!parse_int(body, value) || body.front() == '-')
      throw ParseError("malformed generator token '" + std::string(tok) + "'");
    if (value == 0) throw ParseError("generator indices start at 1: '" + std::string(tok) + "'");
    return static_cast<int>(inverse ? -value : value);
  }
  kind = TokenKind::Numeric;
  if (!parse_int(tok, value)) throw ParseError("malformed token '" + std::string(tok) + "'");
  if (value == 0) throw ParseError("letter 0 is not a generator");
  return static_cast<int>(value);
}

}  // namespace

BraidWord::BraidWord(std::size_t strands) : BraidWord(strands, {}) {}

BraidWord::BraidWord(std::size_t strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands == 0) throw ParseError("a braid needs at least one strand");
  check_letters(strands_, letters_);
}

std::vector<std::vector<std::size_t>> StrandPermutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(images.size(), false);
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t p = start; !seen[p]; p = images[p]) {
      seen[p] = true;
      cycle.push_back(p);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

BraidWord parse_braid(std::string_view text) {
  std::string_view body = trim(text);
  long declared = -1;
  if (body.starts_with('n') && trim(body.substr(1)).starts_with('=')) {
    const auto eq = body.find('=');
    const auto semi = body.find(';');
    if (semi == std::string_view::npos) throw ParseError("strand prefix must end with ';'");
    if (!parse_int(trim(body.substr(eq + 1, semi - eq - 1)), declared) || declared <= 0)
      throw ParseError("strand count must be a positive integer");
    body = body.substr(semi + 1);
  }

  std::vector<int> letters;
  std::istringstream in{std::string(body)};
  std::string tok;
  bool have_kind = false;
  TokenKind first_kind = TokenKind::Numeric;
  while (in >> tok) {
    TokenKind kind;
    letters.push_back(parse_token(tok, kind));
    if (have_kind && kind != first_kind)
      throw ParseError("cannot mix symbolic and numeric letters");
    have_kind = true;
    first_kind = kind;
  }

  std::size_t strands = 1;
  if (declared > 0) {
    strands = static_cast<std::size_t>(declared);
  } else {
    for (int k : letters) strands = std::max(strands, static_cast<std::size_t>(std::abs(k)) + 1);
  }
  return BraidWord(strands, std::move(letters));
}

std::string format_braid(const BraidWord& b) {
  std::string out = "n=" + std::to_string(b.strands()) + ";";
  for (int k : b.letters()) out += " " + std::to_string(k);
  return out;
}

int writhe(const BraidWord& b) {
  int w = 0;
  for (int k : b.letters()) w += k > 0 ? 1 : -1;
  return w;
}

StrandPermutation permutation(const BraidWord& b) {
  // slot[p] = which strand currently occupies position p
  std::vector<std::size_t> slot(b.strands());
  for (std::size_t p = 0; p < slot.size(); ++p) slot[p] = p;
  for (int k : b.letters()) {
    const auto j = static_cast<std::size_t>(std::abs(k)) - 1;
    std::swap(slot[j], slot[j + 1]);
  }
  StrandPermutation perm;
  perm.images.resize(b.strands());
  for (std::size_t p = 0; p < slot.size(); ++p) perm.images[slot[p]] = p;
  return perm;
}

std::size_t components(const BraidWord& b) { return permutation(b).cycles().size(); }

BraidWord conjugate(const BraidWord& b, const BraidWord& a) {
  if (a.strands() != b.strands())
    throw DimensionMismatch("conjugate: braid on " + std::to_string(b.strands()) +
                            " strands, conjugator on " + std::to_string(a.strands()));
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) letters.push_back(-*it);
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord stabilize(const BraidWord& b, int sign) {
  if (sign != 1 && sign != -1) throw InputError("stabilization sign must be +1 or -1");
  std::vector<int> letters = b.letters();
  letters.push_back(sign * static_cast<int>(b.strands()));
  return BraidWord(b.strands() + 1, std::move(letters));
}

BraidWord switch_crossing(const BraidWord& b, std::size_t position) {
  if (position >= b.length())
    throw std::out_of_range("crossing position " + std::to_string(position) + " out of range");
  std::vector<int> letters = b.letters();
  letters[position] = -letters[position];
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord switch_crossings(const BraidWord& b, const std::vector<std::size_t>& positions) {
  BraidWord out = b;
  for (auto p : positions) out = switch_crossing(out, p);
  return out;
}

std::vector<std::size_t> descending_switches(const BraidWord& b) {
  if (components(b) != 1) throw NotAKnot("descending_switches needs a one-component closure");
  std::vector<std::size_t> flips;
  std::vector<bool> visited(b.length(), false);
  std::size_t pos = 0;
  // A knot's wire runs once through every strand position, so n passes over
  // the word cover every crossing twice.
  for (std::size_t pass = 0; pass < b.strands(); ++pass) {
    for (std::size_t i = 0; i < b.length(); ++i) {
      const int k = b.letters()[i];
      const auto j = static_cast<std::size_t>(std::abs(k)) - 1;
      if (pos != j && pos != j + 1) continue;
      if (!visited[i]) {
        visited[i] = true;
        const bool on_top = pos == j;
        const bool over = k > 0 ? on_top : !on_top;
        if (!over) flips.push_back(i);
      }
      pos = pos == j ? j + 1 : j;
    }
  }
  return flips;
}

BraidWord random_braid(std::size_t strands, std::size_t length, std::uint64_t seed) {
  if (strands <= 1) return BraidWord(std::max<std::size_t>(strands, 1));
  Rng rng(seed);
  std::vector<int> letters(length);
  const std::uint64_t gens = strands - 1;
  for (auto& k : letters) {
    const std::uint64_t x = rng.below(2 * gens);
    k = static_cast<int>(x % gens) + 1;
    if (x >= gens) k = -k;
  }
  return BraidWord(strands, std::move(letters));
}

const std::vector<LinkFixture>& fixture_links() {
  static const std::vector<LinkFixture> table = [] {
    auto make = [](std::string name, std::size_t n, std::vector<int> letters) {
      BraidWord b(n, std::move(letters));
      const std::size_t m = components(b);
      return LinkFixture{std::move(name), std::move(b), m, m == 1};
    };
    return std::vector<LinkFixture>{
        make("unknot-B1", 1, {}),
        make("unknot-B2", 2, {1}),
        make("unknot-neg", 2, {-1}),
        make("trefoil", 2, {1, 1, 1}),
        make("mirror-trefoil", 2, {-1, -1, -1}),
        make("figure-eight", 3, {1, -2, 1, -2}),
        make("cinquefoil", 2, {1, 1, 1, 1, 1}),
        make("granny", 3, {1, 1, 1, 2, 2, 2}),
        make("hopf", 2, {1, 1}),
        make("unlink-2", 2, {}),
    };
  }();
  return table;
}

const LinkFixture& fixture_link(std::string_view name) {
  for (const auto& f : fixture_links())
    if (f.name == name) return f;
  throw InputError("unknown link fixture '" + std::string(name) + "'");
}

}  // namespace turaev
