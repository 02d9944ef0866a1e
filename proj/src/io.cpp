#include "extform/io.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace extform {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("syntax error at byte " + std::to_string(e.byte) + ": " +
                     e.what());
  }
}

Rational coeff_field(const json& term, std::size_t pos) {
  if (!term.contains("coeff") || !term["coeff"].is_string())
    throw ParseError("term " + std::to_string(pos) +
                     ": missing or non-string coeff");
  try {
    return parse_rational(term["coeff"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError("term " + std::to_string(pos) + ": " + e.what());
  }
}

}  // namespace

ExteriorForm parse_form(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  for (const char* field : {"dim", "degree", "variance", "terms"})
    if (!doc.contains(field))
      throw ParseError(std::string("missing field \"") + field + "\"");
  if (!doc["dim"].is_number_integer() || !doc["degree"].is_number_integer())
    throw ParseError("dim and degree must be integers");
  const int dim = doc["dim"].get<int>();
  const int degree = doc["degree"].get<int>();
  if (dim < 0 || degree < 0 || degree > dim)
    throw ParseError("need 0 <= degree <= dim");
  const std::string var = doc["variance"].get<std::string>();
  if (var != "form" && var != "vector")
    throw ParseError("variance must be \"form\" or \"vector\"");
  ExteriorForm f(dim, degree,
                 var == "form" ? Variance::Form : Variance::Vector);
  if (!doc["terms"].is_array()) throw ParseError("terms must be an array");
  std::size_t pos = 0;
  for (const auto& term : doc["terms"]) {
    ++pos;
    if (!term.is_object() || !term.contains("indices") ||
        !term["indices"].is_array())
      throw ParseError("term " + std::to_string(pos) + ": malformed");
    IndexSet I;
    for (const auto& ix : term["indices"]) {
      if (!ix.is_number_integer())
        throw ParseError("term " + std::to_string(pos) + ": non-integer index");
      I.push_back(ix.get<int>());
    }
    if (static_cast<int>(I.size()) != degree)
      throw ParseError("term " + std::to_string(pos) +
                       ": index count differs from degree");
    if (!strictly_increasing(I))
      throw ParseError("term " + std::to_string(pos) +
                       ": indices must be strictly increasing");
    if (!in_range(I, dim))
      throw ParseError("term " + std::to_string(pos) + ": index out of range");
    if (!is_zero(f.coeff(I)))
      throw ParseError("term " + std::to_string(pos) + ": duplicate index set");
    Rational c = coeff_field(term, pos);
    if (is_zero(c))
      throw ParseError("term " + std::to_string(pos) + ": zero coefficient");
    f.add(I, c);
  }
  return f;
}

std::string serialize_form(const ExteriorForm& f) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"dim\": " << f.dim() << ",\n";
  os << "  \"degree\": " << f.degree() << ",\n";
  os << "  \"variance\": \""
     << (f.variance() == Variance::Form ? "form" : "vector") << "\",\n";
  os << "  \"terms\": [";
  bool first = true;
  for (const auto& [I, c] : f.terms()) {
    os << (first ? "\n" : ",\n") << "    {\"indices\": [";
    for (std::size_t k = 0; k < I.size(); ++k)
      os << (k ? ", " : "") << I[k];
    os << "], \"coeff\": \"" << to_string(c) << "\"}";
    first = false;
  }
  os << (first ? "]\n" : "\n  ]\n");
  os << "}\n";
  return os.str();
}

LieAlgebra parse_lie_algebra(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("brackets"))
    throw ParseError("expected an object with dim and brackets");
  if (!doc["dim"].is_number_integer())
    throw ParseError("dim must be an integer");
  LieAlgebra L(doc["dim"].get<int>());
  std::size_t pos = 0;
  for (const auto& b : doc["brackets"]) {
    ++pos;
    for (const char* field : {"i", "j", "k"})
      if (!b.contains(field) || !b[field].is_number_integer())
        throw ParseError("bracket " + std::to_string(pos) + ": missing index " +
                         field);
    const int i = b["i"].get<int>(), j = b["j"].get<int>(), k = b["k"].get<int>();
    if (i >= j)
      throw ParseError("bracket " + std::to_string(pos) + ": need i < j");
    try {
      L.set_structure(i, j, k, coeff_field(b, pos));
    } catch (const std::invalid_argument& e) {
      throw ParseError("bracket " + std::to_string(pos) + ": " + e.what());
    }
  }
  return L;
}

std::string serialize_lie_algebra(const LieAlgebra& L) {
  std::ostringstream os;
  os << "{\n  \"dim\": " << L.dim() << ",\n  \"brackets\": [";
  bool first = true;
  for (const auto& [key, coeff] : L.structure()) {
    auto [i, j, k] = key;
    os << (first ? "\n" : ",\n") << "    {\"i\": " << i << ", \"j\": " << j
       << ", \"k\": " << k << ", \"coeff\": \"" << to_string(coeff) << "\"}";
    first = false;
  }
  os << (first ? "]\n" : "\n  ]\n") << "}\n";
  return os.str();
}

namespace {

struct PolyLexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("polynomial, position " + std::to_string(pos) + ": " + what);
  }
  long integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected a number");
    return std::stol(s.substr(start, pos - start));
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int nvars) {
  PolyLexer lx{text};
  Polynomial out(nvars);
  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      sign = (c == '-') ? -1 : 1;
      ++lx.pos;
    } else if (!first) {
      lx.fail("expected '+' or '-' between terms");
    }
    if (lx.eof()) lx.fail("dangling sign");
    first = false;

    Rational coeff(sign);
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      long num = lx.integer();
      long den = 1;
      if (lx.pos < lx.s.size() && lx.s[lx.pos] == '/') {
        ++lx.pos;
        den = lx.integer();
        if (den == 0) lx.fail("zero denominator");
      }
      coeff *= rat(num, den);
      have_factor = true;
    }
    std::vector<int> exps(nvars, 0);
    while (lx.peek() == 'x') {
      ++lx.pos;
      long v = lx.integer();
      if (v < 1 || v > nvars) lx.fail("variable index out of range");
      long e = 1;
      if (lx.pos < lx.s.size() && lx.s[lx.pos] == '^') {
        ++lx.pos;
        e = lx.integer();
      }
      exps[v - 1] += static_cast<int>(e);
      have_factor = true;
    }
    if (!have_factor) lx.fail("expected a coefficient or a variable");
    out.add_monomial(exps, coeff);
  }
  return out;
}

}  // namespace extform
