#include "sidonlab/polyjson.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sidonlab {

namespace {

using nlohmann::json;

// Line and column of a byte offset, plus the offending line itself.
std::string locate(const std::string& text, std::size_t byte, int& line, int& column) {
  line = 1;
  std::size_t start = 0;
  const std::size_t end = std::min(byte, text.size());
  for (std::size_t i = 0; i < end; ++i)
    if (text[i] == '\n') {
      ++line;
      start = i + 1;
    }
  column = static_cast<int>(end - start) + 1;
  std::size_t stop = text.find('\n', start);
  if (stop == std::string::npos) stop = text.size();
  return text.substr(start, stop - start);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw PolyParseError(where + ": missing \"" + key + "\"");
  return *it;
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw PolyParseError(where + ": expected an integer");
  return v.get<int>();
}

double as_number(const json& v, const std::string& where) {
  if (!v.is_number()) throw PolyParseError(where + ": expected a number");
  return v.get<double>();
}

}  // namespace

Polynomial parse_polynomial(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 0;
    int column = 0;
    const std::string context = locate(text, e.byte == 0 ? 0 : e.byte - 1, line, column);
    throw PolyParseError("syntax error at line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + context,
                         line, column);
  }
  if (!doc.is_object()) throw PolyParseError("top level: expected an object");

  const int n = as_int(field(doc, "n", "top level"), "\"n\"");
  const int d = as_int(field(doc, "d", "top level"), "\"d\"");
  if (n < 1 || d < 0) throw PolyParseError("need n >= 1 and d >= 0");
  const json& dom = field(doc, "domain", "top level");
  if (!dom.is_string()) throw PolyParseError("\"domain\": expected a string");
  Domain domain;
  if (dom == "torus")
    domain = Domain::torus;
  else if (dom == "cube")
    domain = Domain::cube;
  else
    throw PolyParseError("\"domain\": expected \"torus\" or \"cube\", got " + dom.dump());
  bool homogeneous = true;
  if (auto it = doc.find("homogeneous"); it != doc.end()) {
    if (!it->is_boolean()) throw PolyParseError("\"homogeneous\": expected a boolean");
    homogeneous = it->get<bool>();
  }

  const auto cls = domain == Domain::torus ? Monotonicity::non_decreasing
                                           : Monotonicity::strictly_increasing;
  CoefficientTable table(n, d, cls, homogeneous);
  const json& coeffs = field(doc, "coefficients", "top level");
  if (!coeffs.is_array()) throw PolyParseError("\"coefficients\": expected an array");
  for (std::size_t t = 0; t < coeffs.size(); ++t) {
    const std::string where = "coefficients[" + std::to_string(t) + "]";
    const json& c = coeffs[t];
    if (!c.is_object()) throw PolyParseError(where + ": expected an object");
    const json& idx = field(c, "index", where);
    if (!idx.is_array()) throw PolyParseError(where + ".index: expected an array");
    std::vector<int> index;
    for (const auto& v : idx) index.push_back(as_int(v, where + ".index"));

    const int kinds = static_cast<int>(c.contains("phase")) + static_cast<int>(c.contains("sign")) +
                      static_cast<int>(c.contains("value"));
    if (kinds != 1)
      throw PolyParseError(where + ": give exactly one of \"phase\", \"sign\", \"value\"");
    Complex value;
    if (c.contains("phase")) {
      value = std::polar(1.0, as_number(c["phase"], where + ".phase"));
    } else if (c.contains("sign")) {
      const int s = as_int(c["sign"], where + ".sign");
      if (s != 1 && s != -1) throw PolyParseError(where + ".sign: expected +1 or -1");
      value = Complex(s, 0.0);
    } else {
      const json& v = c["value"];
      if (!v.is_array() || v.size() != 2) throw PolyParseError(where + ".value: expected [re, im]");
      value = Complex(as_number(v[0], where + ".value"), as_number(v[1], where + ".value"));
    }
    if (table.entries().count(index) != 0) throw PolyParseError(where + ": duplicate index");
    try {
      table.set(std::move(index), value);
    } catch (const std::invalid_argument& e) {
      throw PolyParseError(where + ": " + e.what());
    }
  }
  return Polynomial(domain, std::move(table));
}

Polynomial read_polynomial_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PolyParseError(path + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_polynomial(buf.str());
  } catch (const PolyParseError& e) {
    throw PolyParseError(path + ": " + e.what(), e.line(), e.column());
  }
}

std::string polynomial_to_json(const Polynomial& p) {
  json doc;
  doc["n"] = p.n();
  doc["d"] = p.d();
  doc["domain"] = to_string(p.domain());
  doc["homogeneous"] = p.homogeneous();
  json coeffs = json::array();
  for (const auto& [index, a] : p.coefficients().entries()) {
    json c;
    c["index"] = index;
    if (a.imag() == 0.0 && (a.real() == 1.0 || a.real() == -1.0) && p.domain() == Domain::cube)
      c["sign"] = static_cast<int>(a.real());
    else if (std::abs(std::abs(a) - 1.0) <= 1e-12)
      c["phase"] = std::arg(a);
    else
      c["value"] = {a.real(), a.imag()};
    coeffs.push_back(std::move(c));
  }
  doc["coefficients"] = std::move(coeffs);
  return doc.dump(2);
}

}  // namespace sidonlab
