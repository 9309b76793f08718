#include "orebc/config.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "orebc/expr.hpp"

namespace orebc {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void config_error(const std::string& msg) { throw Error(Errc::config_error, msg); }

// Splits `name(a, b)` at top-level commas.
std::pair<std::string, std::vector<std::string>> split_preset(std::string_view text) {
  std::string s = trim(text);
  auto open = s.find('(');
  if (open == std::string::npos) return {s, {}};
  if (s.back() != ')') config_error("malformed preset '" + s + "'");
  std::vector<std::string> args;
  int depth = 0;
  std::string current;
  for (std::size_t i = open + 1; i + 1 < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      args.push_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  args.push_back(trim(current));
  return {trim(s.substr(0, open)), args};
}

}  // namespace

AlgebraConfig parse_config(std::string_view text) {
  AlgebraConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string content = trim(line);
    if (content.empty()) continue;
    auto eq = content.find('=');
    if (eq == std::string::npos) config_error("line " + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = trim(content.substr(0, eq));
    std::string value = trim(content.substr(eq + 1));
    if (key == "field")
      cfg.field = value;
    else if (key == "coeff_ring")
      cfg.coeff_ring = value;
    else if (key == "sigma")
      cfg.sigma = value;
    else if (key == "delta")
      cfg.delta = value;
    else if (key == "preset")
      cfg.preset = value;
    else if (key == "q")
      cfg.q = value;
    else
      config_error("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  return cfg;
}

AlgebraConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_error("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

FieldSpec parse_field(std::string_view text) {
  std::string s = trim(text);
  if (s == "Q" || s == "QQ") return FieldSpec::rationals();
  std::string digits;
  if (s.size() > 4 && s.rfind("GF(", 0) == 0 && s.back() == ')')
    digits = s.substr(3, s.size() - 4);
  else if (s.size() > 1 && s[0] == 'F')
    digits = s.substr(1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 19)
    config_error("unknown field '" + s + "' (expected Q, GF(p) or Fp)");
  return FieldSpec::prime(std::stoull(digits));
}

CoeffRing parse_coeff_ring(std::string_view text) {
  std::string s = trim(text);
  if (s == "poly" || s == "polynomials") return CoeffRing::polynomials;
  if (s == "ratfunc" || s == "rational_functions") return CoeffRing::rational_functions;
  config_error("unknown coefficient ring '" + s + "' (expected poly or ratfunc)");
}

AlgebraPtr build_algebra(const AlgebraConfig& config) {
  FieldSpec field = parse_field(config.field);
  CoeffRing ring = parse_coeff_ring(config.coeff_ring);
  if (!config.preset) {
    Poly sigma = eval_poly_expr(config.sigma.value_or("y"), field);
    Poly delta = eval_poly_expr(config.delta.value_or("1"), field);
    return OreAlgebra::create(field, ring, std::move(sigma), std::move(delta));
  }

  auto [name, args] = split_preset(*config.preset);
  auto arg_or = [&](std::size_t i, const std::optional<std::string>& fallback) -> std::optional<std::string> {
    if (i < args.size() && !args[i].empty()) return args[i];
    return fallback;
  };
  if (name == "weyl") {
    if (!args.empty()) config_error("preset weyl takes no arguments");
    return OreAlgebra::weyl(field, ring);
  }
  if (name == "qweyl") {
    auto q = arg_or(0, config.q);
    if (!q) config_error("preset qweyl needs q");
    Poly qp = eval_poly_expr(*q, field);
    if (!qp.is_constant()) config_error("q must be a scalar, got '" + *q + "'");
    return OreAlgebra::q_weyl(qp.is_zero() ? Scalar::zero(field) : qp.leading_coeff(), ring);
  }
  if (name == "power") {
    auto p = arg_or(0, config.sigma);
    if (!p) config_error("preset power needs sigma = p(y)");
    auto d = arg_or(1, config.delta);
    return OreAlgebra::power(eval_poly_expr(*p, field), eval_poly_expr(d.value_or("0"), field), ring);
  }
  config_error("unknown preset '" + name + "' (expected weyl, qweyl or power)");
}

}  // namespace orebc
