#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "turaev/errors.hpp"
#include "turaev/evaluate.hpp"
#include "turaev/operator_io.hpp"
#include "turaev/random.hpp"

namespace turaev::cli {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

using Json = nlohmann::ordered_json;

struct Settings {
  std::string operator_path;
  double tol = 1e-9;
  std::string braid;
  std::string method = "auto";
  std::size_t cap = 16384;
  std::size_t trials = 100;
  std::size_t max_strands = 4;
  std::size_t max_length = 8;
  std::uint64_t seed = 1;
  std::string fixture_name;
  bool json = false;
};

struct Outcome {
  Json report;
  std::vector<std::string> lines;
  int code = kPass;
};

struct LoadedOperator {
  std::string path;
  std::string digest;
  OperatorFile file;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open operator file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string hex_digest(std::string_view bytes) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

LoadedOperator load(const std::string& path) {
  const std::string bytes = read_file(path);
  return {path, hex_digest(bytes), parse_operator_json(bytes)};
}

Json cjson(Complex z) { return Json::array({z.real(), z.imag()}); }

Json mjson(const ComplexMatrix& m) {
  auto rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(cjson(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string show(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "[%.12g, %.12g]", z.real(), z.imag());
  return buf;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string check_line(const std::string& label, const Check& c) {
  return pad(label, 22) + (c.passed ? "PASS" : "FAIL") + "  residual " + sci(c.residual);
}

double deviation(Complex a, Complex b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

Json base_report(std::string_view command, const LoadedOperator& op, const Settings& s) {
  Json r;
  r["command"] = command;
  r["inputs"] = {{"operator", op.path}, {"digest", op.digest}, {"tol", s.tol}};
  return r;
}

bool is_scalar_multiple_of_identity(const ComplexMatrix& m, Tolerance tol) {
  return approx_eq(m, ComplexMatrix::identity(m.rows()) * m(0, 0), tol);
}

Outcome cmd_check(const Settings& s) {
  const auto op = load(s.operator_path);
  const Tolerance tol(s.tol);
  const EnhancedYB e = op.file.to_enhanced(tol);
  const auto yb = check_yang_baxter(e.op(), tol);
  const auto en = check_enhanced(e, tol);

  Outcome o;
  o.report = base_report("check", op, s);
  o.report["results"] = {
      {"yang_baxter", yb.passed},
      {"commutes", en.commutes.passed},
      {"trace_plus", en.trace_plus.passed},
      {"trace_minus", en.trace_minus.passed},
      {"alpha", cjson(e.alpha())},
      {"beta", cjson(e.beta())},
      {"scalars_from_file", op.file.alpha.has_value() && op.file.beta.has_value()},
  };
  o.report["residuals"] = {{"yang_baxter", yb.residual},
                           {"commutes", en.commutes.residual},
                           {"trace_plus", en.trace_plus.residual},
                           {"trace_minus", en.trace_minus.residual}};
  o.lines.push_back(check_line("yang-baxter", yb));
  o.lines.push_back(check_line("mu (x) mu commutes", en.commutes));
  o.lines.push_back(check_line("Tr_2 R(mu(x)mu)", en.trace_plus));
  o.lines.push_back(check_line("Tr_2 R^-1(mu(x)mu)", en.trace_minus));
  o.lines.push_back(pad("scalars", 22) + "alpha " + show(e.alpha()) + "  beta " + show(e.beta()));

  Json inferred;
  try {
    const auto sc = infer_scalars(e.op(), e.mu(), tol);
    inferred = {{"alpha", cjson(sc.alpha)}, {"beta", cjson(sc.beta)}};
    if (!op.file.alpha || !op.file.beta) {
      const bool ok = check_enhanced(EnhancedYB(e.op(), sc.alpha, sc.beta, e.mu()), tol).passed();
      inferred["enhanced_with_inferred"] = ok;
      o.lines.push_back(pad("inferred scalars", 22) + "alpha " + show(sc.alpha) + "  beta " + show(sc.beta) +
                        (ok ? "  (enhanced with these)" : ""));
    }
  } catch (const Error& ex) {
    inferred = {{"error", ex.what()}};
    o.lines.push_back(pad("inferred scalars", 22) + "none: " + ex.what());
  }
  o.report["inferred"] = std::move(inferred);

  const bool passed = yb.passed && en.passed();
  o.report["passed"] = passed;
  o.code = passed ? kPass : kCheckFailed;
  return o;
}

Outcome cmd_classify(const Settings& s) {
  const auto op = load(s.operator_path);
  const Tolerance tol(s.tol);
  const auto cls = classify_nonentangling(op.file.r, op.file.d, tol);

  Outcome o;
  o.report = base_report("classify", op, s);
  Json results = {{"class", cls.name()},
                  {"schmidt_rank", cls.schmidt_rank},
                  {"swapped_schmidt_rank", cls.swapped_schmidt_rank}};
  o.lines.push_back(pad("class", 22) + std::string(cls.name()));
  o.lines.push_back(pad("schmidt rank", 22) + std::to_string(cls.schmidt_rank) + " (R), " +
                    std::to_string(cls.swapped_schmidt_rank) + " (R S)");
  if (const auto* p = std::get_if<ProductForm>(&cls.form)) {
    results["factors"] = {{"A", mjson(p->a)}, {"B", mjson(p->b)}};
    if (is_scalar_multiple_of_identity(op.file.r, tol)) {
      results["scalar"] = cjson(op.file.r(0, 0));
      o.lines.push_back(pad("scalar", 22) + show(op.file.r(0, 0)));
    }
  } else if (const auto* f = std::get_if<SwapProductForm>(&cls.form)) {
    results["factors"] = {{"F", mjson(f->f)}, {"G", mjson(f->g)}};
  }
  o.report["results"] = std::move(results);
  o.report["residuals"] = {{"reconstruction", cls.residual}};
  if (!cls.is_entangling()) o.lines.push_back(pad("reconstruction", 22) + "residual " + sci(cls.residual));
  o.report["passed"] = true;
  return o;
}

Outcome cmd_invariant(const Settings& s) {
  const auto op = load(s.operator_path);
  const Tolerance tol(s.tol);
  const auto braid = parse_braid(s.braid);
  const Method method = parse_method(s.method);
  const EnhancedYB e = op.file.to_enhanced(tol);
  const auto v = invariant(e, braid, method, EvalOptions{s.cap, tol, 0});

  Outcome o;
  o.report = base_report("invariant", op, s);
  o.report["inputs"]["braid"] = format_braid(braid);
  o.report["inputs"]["method"] = s.method;
  o.report["inputs"]["cap"] = s.cap;
  o.report["results"] = {{"value", cjson(v.value)},
                         {"writhe", v.writhe},
                         {"strands", v.strands},
                         {"components", v.components}};
  o.report["method"] = method_name(v.method);
  o.report["passed"] = true;
  o.lines.push_back(pad("braid", 22) + format_braid(braid));
  o.lines.push_back(pad("value", 22) + show(v.value));
  o.lines.push_back(pad("writhe", 22) + std::to_string(v.writhe));
  o.lines.push_back(pad("strands", 22) + std::to_string(v.strands));
  o.lines.push_back(pad("components", 22) + std::to_string(v.components));
  o.lines.push_back(pad("method", 22) + std::string(method_name(v.method)));
  return o;
}

Outcome cmd_markov_test(const Settings& s) {
  if (s.max_strands == 0) throw InputError("--max-strands must be at least 1");
  const auto op = load(s.operator_path);
  const Tolerance tol(s.tol);
  const EnhancedYB e = op.file.to_enhanced(tol);
  const EvalOptions opts{s.cap, tol, 0};
  const bool enhanced = check_yang_baxter(e.op(), tol).passed && check_enhanced(e, tol).passed();

  struct Worst {
    double dev = -1.0;
    std::size_t trial = 0;
    std::string move;
    BraidWord braid{1};
    BraidWord moved{1};
    Complex before, after;
  } worst;

  Rng rng(s.seed);
  std::size_t failures = 0;
  for (std::size_t t = 0; t < s.trials; ++t) {
    const std::size_t n = 1 + rng.below(s.max_strands);
    const auto b = random_braid(n, rng.below(s.max_length + 1), rng.bits());
    const auto a = random_braid(n, 1 + rng.below(std::max<std::size_t>(s.max_length, 1)), rng.bits());
    const Complex base = invariant(e, b, Method::Auto, opts).value;
    const std::pair<const char*, BraidWord> moves[] = {
        {"conjugate", conjugate(b, a)}, {"stabilize+", stabilize(b, 1)}, {"stabilize-", stabilize(b, -1)}};
    for (const auto& [name, moved] : moves) {
      const Complex after = invariant(e, moved, Method::Auto, opts).value;
      const double dev = deviation(base, after);
      if (dev > s.tol) ++failures;
      if (dev > worst.dev) worst = {dev, t, name, b, moved, base, after};
    }
  }

  Outcome o;
  o.report = base_report("markov-test", op, s);
  o.report["inputs"]["trials"] = s.trials;
  o.report["inputs"]["max_strands"] = s.max_strands;
  o.report["inputs"]["max_length"] = s.max_length;
  o.report["inputs"]["seed"] = s.seed;
  const bool passed = failures == 0;
  Json results = {{"probes", 3 * s.trials}, {"failures", failures}, {"enhanced", enhanced}};
  if (s.trials > 0) {
    results["worst"] = {{"trial", worst.trial},
                        {"move", worst.move},
                        {"braid", format_braid(worst.braid)},
                        {"moved", format_braid(worst.moved)},
                        {"before", cjson(worst.before)},
                        {"after", cjson(worst.after)}};
  }
  o.report["results"] = std::move(results);
  o.report["residuals"] = {{"max_deviation", std::max(worst.dev, 0.0)}};
  o.report["passed"] = passed;
  o.code = passed ? kPass : kCheckFailed;

  o.lines.push_back(pad("probes", 22) + std::to_string(3 * s.trials) + " (" + std::to_string(failures) +
                    " over tolerance)");
  o.lines.push_back(pad("max deviation", 22) + sci(std::max(worst.dev, 0.0)));
  if (!enhanced) o.lines.push_back("warning: operator does not pass the enhancement checks");
  if (!passed) {
    o.lines.push_back("counterexample (" + worst.move + ", trial " + std::to_string(worst.trial) + "):");
    o.lines.push_back("  " + format_braid(worst.braid) + "  -> " + show(worst.before));
    o.lines.push_back("  " + format_braid(worst.moved) + "  -> " + show(worst.after));
  }
  return o;
}

Outcome cmd_knot_test(const Settings& s) {
  const auto op = load(s.operator_path);
  const Tolerance tol(s.tol);
  const EnhancedYB e = op.file.to_enhanced(tol);
  const auto cls = classify_nonentangling(e.op().matrix(), e.dim(), tol);
  const EvalOptions opts{s.cap, tol, 0};

  Outcome o;
  o.report = base_report("knot-test", op, s);
  auto knots = Json::array();
  std::optional<Complex> reference;
  double spread = 0.0;
  for (const auto& link : fixture_links()) {
    if (!link.is_knot) continue;
    const auto v = invariant(e, link.braid, Method::Auto, opts);
    if (!reference) reference = v.value;
    spread = std::max(spread, deviation(*reference, v.value));
    knots.push_back({{"name", link.name},
                     {"braid", format_braid(link.braid)},
                     {"value", cjson(v.value)},
                     {"method", method_name(v.method)}});
    o.lines.push_back(pad(link.name, 22) + show(v.value));
  }
  const bool asserted = !cls.is_entangling();
  const bool passed = !asserted || spread <= s.tol;
  o.report["results"] = {{"class", cls.name()}, {"asserted_constant", asserted}, {"knots", std::move(knots)}};
  o.report["residuals"] = {{"max_spread", spread}};
  o.report["passed"] = passed;
  o.code = passed ? kPass : kCheckFailed;
  o.lines.insert(o.lines.begin(), pad("class", 22) + std::string(cls.name()));
  o.lines.push_back(pad("max spread", 22) + sci(spread) +
                    (asserted ? (passed ? "  constant on knots" : "  NOT constant on knots")
                              : "  (entangling: tabulated only)"));
  return o;
}

// Extra shipped operators that are not enhanced fixtures of the library.
std::optional<EnhancedYB> extra_fixture(std::string_view name) {
  if (name == "padded-cr-swap") return padded_cr_swap_operator();
  if (name == "cnot") {
    const auto cnot = ComplexMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
    return EnhancedYB(YBOperator(2, cnot), ComplexMatrix::identity(2));
  }
  if (name == "product-example") {
    const auto a = ComplexMatrix::from_rows({{2, 1}, {0, 1}});
    const auto b = ComplexMatrix::from_rows({{1, Complex(0, 1)}, {1, 3}});
    return EnhancedYB(YBOperator(2, kron(a, b)), ComplexMatrix::identity(2));
  }
  return std::nullopt;
}

constexpr std::string_view kExtraFixtures[] = {"padded-cr-swap", "cnot", "product-example"};

int cmd_fixture(const Settings& s, std::ostream& out) {
  if (s.fixture_name.empty()) {
    for (const auto& f : fixture_operators()) out << f.name << "\n";
    for (auto name : kExtraFixtures) out << name << "\n";
    return kPass;
  }
  if (auto extra = extra_fixture(s.fixture_name)) {
    out << operator_to_json(*extra) << "\n";
  } else {
    out << operator_to_json(fixture_operator(s.fixture_name)) << "\n";
  }
  return kPass;
}

std::string_view error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const InputError*>(&e)) return "InputError";
  if (dynamic_cast<const SingularMatrix*>(&e)) return "SingularMatrix";
  if (dynamic_cast<const DimensionCapExceeded*>(&e)) return "DimensionCapExceeded";
  if (dynamic_cast<const NotNormalized*>(&e)) return "NotNormalized";
  if (dynamic_cast<const FormMismatch*>(&e)) return "FormMismatch";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "DimensionMismatch";
  return "Error";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Link invariants from enhanced Yang-Baxter operators", "turaev"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--operator", s.operator_path, "operator JSON file")->required();
    sub->add_option("--tol", s.tol, "tolerance")->capture_default_str()->check(CLI::NonNegativeNumber);
    sub->add_flag("--json", s.json, "print the report as a single JSON object");
  };
  auto* check = app.add_subcommand("check", "Yang-Baxter and enhancement checks");
  common(check);
  auto* classify = app.add_subcommand("classify", "Product / SwapProduct / Entangling");
  common(classify);
  auto* inv = app.add_subcommand("invariant", "evaluate the invariant on a braid closure");
  common(inv);
  inv->add_option("--braid", s.braid, "braid word, e.g. \"s1 s2^-1\" or \"n=3; 1 -2\"")->required();
  inv->add_option("--method", s.method, "auto | dense | product | wire")->capture_default_str();
  inv->add_option("--cap", s.cap, "largest d^n for dense evaluation")->capture_default_str();
  auto* markov = app.add_subcommand("markov-test", "random conjugation and stabilization probes");
  common(markov);
  markov->add_option("--trials", s.trials)->capture_default_str();
  markov->add_option("--max-strands", s.max_strands)->capture_default_str();
  markov->add_option("--max-length", s.max_length)->capture_default_str();
  markov->add_option("--seed", s.seed)->capture_default_str();
  markov->add_option("--cap", s.cap)->capture_default_str();
  auto* knot = app.add_subcommand("knot-test", "evaluate every knot fixture");
  common(knot);
  knot->add_option("--cap", s.cap)->capture_default_str();
  auto* fixture = app.add_subcommand("fixture", "print a built-in operator as JSON (no name: list them)");
  fixture->add_option("name", s.fixture_name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    if (chosen == fixture) return cmd_fixture(s, out);
    if (chosen == check) o = cmd_check(s);
    else if (chosen == classify) o = cmd_classify(s);
    else if (chosen == inv) o = cmd_invariant(s);
    else if (chosen == markov) o = cmd_markov_test(s);
    else o = cmd_knot_test(s);
  } catch (const std::exception& e) {
    const bool usage = dynamic_cast<const InputError*>(&e) != nullptr || dynamic_cast<const Error*>(&e) == nullptr;
    const int code = usage ? kUsage : kCheckFailed;
    if (s.json) {
      Json r;
      r["command"] = command;
      r["error"] = {{"kind", error_kind(e)}, {"message", e.what()}};
      r["passed"] = false;
      out << r.dump() << "\n";
    }
    err << "turaev " << command << ": " << error_kind(e) << ": " << e.what() << "\n";
    return code;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (s.json) {
    out << o.report.dump() << "\n";
  } else {
    out << command << "  " << s.operator_path << "\n";
    for (const auto& line : o.lines) out << "  " << line << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.1f ms)", ms);
    out << (o.code == kPass ? "passed" : "FAILED") << buf << "\n";
  }
  return o.code;
}

}  // namespace turaev::cli
