#include "hochkit/builtins.hpp"

#include <stdexcept>

#include "hochkit/error.hpp"

namespace hochkit {

namespace {

SparseVector e(uint32_t i) { return {{i, Rational(1)}}; }

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t"), end = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, end - b + 1);
}

int parse_int(const std::string& s, const std::string& context) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("bad integer '" + s + "' in " + context);
}

}  // namespace

DgAlgebra dual_numbers(Field field) { return trunc_poly(field, 2); }

DgAlgebra trunc_poly(Field field, int n) {
  if (n < 1) throw std::invalid_argument("trunc_poly needs n >= 1");
  std::vector<std::string> labels{"1"};
  for (int i = 1; i < n; ++i) labels.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
  DgAlgebra a(field, labels, std::vector<int>(static_cast<size_t>(n), 0), 0);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (i + j < n) a.set_product(i, j, e(static_cast<uint32_t>(i + j)));
  return a;
}

DgAlgebra upper_triangular(Field field, int n) {
  if (n != 2) throw std::invalid_argument("upper_triangular is available for n = 2 only");
  DgAlgebra a(field, {"1", "e11", "e12"}, {0, 0, 0}, 0);
  a.set_product(1, 1, e(1));
  a.set_product(1, 2, e(2));
  return a;
}

DgAlgebra koszul_example(Field field) {
  DgAlgebra a(field, {"1", "x", "ξ", "xξ"}, {0, 0, -1, -1}, 0);
  a.set_product(1, 2, e(3));
  a.set_product(2, 1, e(3));
  a.set_differential(2, e(1));
  return a;
}

DgAlgebra builtin(const std::string& raw, Field field) {
  std::string name = trim(raw);
  if (name == "ground_field" || name == "k") return ground_field(field);
  if (name == "dual_numbers") return dual_numbers(field);
  if (name == "koszul_example") return koszul_example(field);
  if (name == "upper_triangular" || name == "upper_triangular(2)") return upper_triangular(field, 2);
  auto open = name.find('(');
  if (open != std::string::npos && name.back() == ')') {
    std::string head = trim(name.substr(0, open));
    std::string args = name.substr(open + 1, name.size() - open - 2);
    if (head == "trunc_poly") return trunc_poly(field, parse_int(trim(args), name));
    if (head == "upper_triangular") return upper_triangular(field, parse_int(trim(args), name));
    if (head == "matrix") {
      auto comma = args.find(',');
      int n = parse_int(trim(args.substr(0, comma)), name);
      std::string inner = comma == std::string::npos ? "ground_field" : trim(args.substr(comma + 1));
      return matrix_algebra(builtin(inner, field), n);
    }
  }
  if (name.rfind("trunc", 0) == 0 && name.size() > 5 && name.find('(') == std::string::npos)
    return trunc_poly(field, parse_int(name.substr(5), name));
  throw std::invalid_argument("unknown algebra '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"ground_field", "dual_numbers", "trunc_poly(3)", "matrix(2, ground_field)",
          "upper_triangular(2)", "koszul_example"};
}

}  // namespace hochkit
