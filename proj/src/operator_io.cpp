#include "turaev/operator_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "turaev/errors.hpp"

namespace turaev {

namespace {

using nlohmann::json;

Complex parse_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError(where + ": complex entries must be [re, im] number pairs");
  const Complex z(j[0].get<double>(), j[1].get<double>());
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ParseError(where + ": non-finite entry");
  return z;
}

ComplexMatrix parse_matrix(const json& j, std::size_t n, const std::string& name) {
  if (!j.is_array() || j.size() != n)
    throw ParseError(name + " must be an array of " + std::to_string(n) + " rows");
  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != n)
      throw ParseError(name + " row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = parse_complex(row[c], name + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

nlohmann::ordered_json complex_json(Complex z) { return nlohmann::ordered_json::array({z.real(), z.imag()}); }

}  // namespace

EnhancedYB OperatorFile::to_enhanced(Tolerance tol) const {
  return EnhancedYB(YBOperator(d, r, tol), alpha.value_or(1.0), beta.value_or(1.0),
                    mu.value_or(ComplexMatrix::identity(d)));
}

OperatorFile parse_operator_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("operator file must hold a JSON object");
  if (!j.contains("d") || !j["d"].is_number_unsigned() || j["d"].get<std::size_t>() == 0)
    throw ParseError("field 'd' must be a positive integer");
  const auto d = j["d"].get<std::size_t>();
  if (!j.contains("R")) throw ParseError("field 'R' is required");

  OperatorFile out{d, parse_matrix(j["R"], d * d, "R"), std::nullopt, std::nullopt, std::nullopt};
  if (j.contains("alpha")) out.alpha = parse_complex(j["alpha"], "alpha");
  if (j.contains("beta")) out.beta = parse_complex(j["beta"], "beta");
  if (j.contains("mu")) out.mu = parse_matrix(j["mu"], d, "mu");
  if ((out.alpha && *out.alpha == Complex{}) || (out.beta && *out.beta == Complex{}))
    throw ParseError("alpha and beta must be nonzero");
  return out;
}

OperatorFile load_operator_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open operator file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_operator_json(buf.str());
}

std::string operator_to_json(const EnhancedYB& e) {
  // One matrix row per line keeps the files readable and diffable.
  auto matrix_text = [](const ComplexMatrix& m) {
    std::string out = "[\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
      auto row = nlohmann::ordered_json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
      out += "    " + row.dump() + (r + 1 < m.rows() ? ",\n" : "\n");
    }
    return out + "  ]";
  };
  std::string out = "{\n";
  out += "  \"d\": " + std::to_string(e.dim()) + ",\n";
  out += "  \"R\": " + matrix_text(e.op().matrix()) + ",\n";
  out += "  \"alpha\": " + complex_json(e.alpha()).dump() + ",\n";
  out += "  \"beta\": " + complex_json(e.beta()).dump() + ",\n";
  out += "  \"mu\": " + matrix_text(e.mu()) + "\n";
  return out + "}";
}

}  // namespace turaev
