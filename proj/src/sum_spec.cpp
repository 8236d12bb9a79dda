#include "bohr/sum_spec.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bohr/error.hpp"

namespace bohr {

namespace {

using nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const json& member(const json& object, const char* key, const std::string& path) {
  if (!object.is_object()) throw Error(ErrorKind::Parse, path + ": expected an object");
  auto it = object.find(key);
  if (it == object.end()) throw Error(ErrorKind::Parse, path + ": missing key '" + key + "'");
  return *it;
}

const json& array_member(const json& object, const char* key, const std::string& path) {
  const json& value = member(object, key, path);
  if (!value.is_array()) throw Error(ErrorKind::Parse, path + "." + key + ": expected an array");
  return value;
}

// Strings are taken verbatim; integers and floats are rendered back to text.
std::string scalar_text(const json& value, const std::string& path) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return value.dump();
  if (value.is_number_float()) {
    char buffer[32];
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value.get<double>());
    return std::string(buffer, end);
  }
  throw Error(ErrorKind::Parse, path + ": expected a number or numeric string");
}

double parse_double(const std::string& text, const std::string& path) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [end, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || end != last || text.empty()) {
    throw Error(ErrorKind::Parse, path + ": malformed decimal '" + text + "'");
  }
  return value;
}

bool is_integer_literal(std::string_view s) {
  std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

int significant_digits(std::string_view decimal) {
  std::string digits;
  for (char c : decimal) {
    if (c == 'e' || c == 'E') break;
    if (std::isdigit(static_cast<unsigned char>(c))) digits.push_back(c);
  }
  auto first = digits.find_first_not_of('0');
  if (first == std::string::npos) return 0;
  return static_cast<int>(digits.size() - first);
}

SumSpec parse_sum_spec(std::string_view text) {
  json document;
  try {
    document = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, line_column(text, e.byte) + ": " + e.what());
  }
  if (!document.is_object()) throw Error(ErrorKind::Parse, "$: expected an object");

  SumSpec spec;
  const json& basis = array_member(document, "basis", "$");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string path = "$.basis[" + std::to_string(i) + "]";
    const json& label = member(basis[i], "label", path);
    if (!label.is_string()) throw Error(ErrorKind::Parse, path + ".label: expected a string");
    std::string value = scalar_text(member(basis[i], "value", path), path + ".value");
    if (!is_integer_literal(value) && significant_digits(value) < kMinBasisDigits) {
      throw Error(ErrorKind::Validation, path + ".value: '" + value + "' has fewer than " +
                                             std::to_string(kMinBasisDigits) + " significant digits");
    }
    try {
      spec.basis.add(label.get<std::string>(), std::move(value));
    } catch (const Error& e) {
      throw Error(e.kind(), path + ": " + e.what());
    }
  }

  std::vector<Term> terms;
  const json& term_list = array_member(document, "terms", "$");
  for (std::size_t i = 0; i < term_list.size(); ++i) {
    const std::string path = "$.terms[" + std::to_string(i) + "]";
    const json& entry = term_list[i];
    const double re = parse_double(scalar_text(member(entry, "re", path), path + ".re"), path + ".re");
    double im = 0.0;
    if (entry.contains("im")) im = parse_double(scalar_text(entry["im"], path + ".im"), path + ".im");
    std::vector<Frequency::Coordinate> coords;
    const json& frequency = array_member(entry, "frequency", path);
    for (std::size_t j = 0; j < frequency.size(); ++j) {
      const std::string cpath = path + ".frequency[" + std::to_string(j) + "]";
      const json& label = member(frequency[j], "label", cpath);
      if (!label.is_string()) throw Error(ErrorKind::Parse, cpath + ".label: expected a string");
      SymbolRef symbol = spec.basis.find(label.get<std::string>());
      if (!symbol) {
        throw Error(ErrorKind::Validation, cpath + ": undeclared basis label '" + label.get<std::string>() + "'");
      }
      const std::string num = scalar_text(member(frequency[j], "numerator", cpath), cpath + ".numerator");
      std::string den = "1";
      if (frequency[j].contains("denominator")) den = scalar_text(frequency[j]["denominator"], cpath + ".denominator");
      if (!is_integer_literal(num) || !is_integer_literal(den)) {
        throw Error(ErrorKind::Parse, cpath + ": numerator and denominator must be integers");
      }
      try {
        coords.emplace_back(symbol, Rational::parse(num + "/" + den));
      } catch (const Error& e) {
        throw Error(e.kind(), cpath + ": " + e.what());
      }
    }
    terms.push_back({Complex(re, im), Frequency(std::move(coords))});
  }
  spec.sum = ExponentialSum(std::move(terms));

  if (document.contains("guards")) {
    const json& guards = document["guards"];
    if (!guards.is_object()) throw Error(ErrorKind::Parse, "$.guards: expected an object");
    if (guards.contains("kappa")) {
      std::string kappa = scalar_text(guards["kappa"], "$.guards.kappa");
      parse_double(kappa, "$.guards.kappa");
      spec.kappa = std::move(kappa);
    }
  }
  return spec;
}

SumSpec load_sum_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_sum_spec(buffer.str());
}

}  // namespace bohr
