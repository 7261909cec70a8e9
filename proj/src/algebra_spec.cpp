#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "hochkit/builtins.hpp"
#include "hochkit/error.hpp"
#include "hochkit/harness.hpp"

namespace hochkit {

namespace {

bool is_separator(char c) { return std::isspace(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '*' || c == '='; }

struct Token {
  std::string text;
  int column;
};

// Splits on whitespace, keeping 1-based columns.
std::vector<Token> words(const std::string& line, size_t from = 0) {
  std::vector<Token> out;
  size_t i = from;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

struct Term {
  Rational coefficient;
  std::string label;
  int column;
};

struct Rule {
  int line;
  std::vector<Token> lhs;
  std::vector<Term> rhs;
};

class LineParser {
 public:
  LineParser(const std::string& text, int line, size_t pos) : s_(text), line_(line), i_(pos) {}

  std::vector<Term> expression() {
    std::vector<Term> out;
    skip();
    if (i_ >= s_.size()) fail("expected an expression");
    bool first = true;
    while (true) {
      skip();
      if (i_ >= s_.size()) break;
      int sign = 1;
      if (!first) {
        if (s_[i_] != '+' && s_[i_] != '-') fail("expected '+' or '-'");
        if (s_[i_] == '-') sign = -1;
        ++i_;
        skip();
      } else if (s_[i_] == '-') {
        sign = -1;
        ++i_;
        skip();
      }
      first = false;
      Token w = word();
      skip();
      if (i_ < s_.size() && s_[i_] == '*') {
        ++i_;
        skip();
        Rational c;
        try {
          c = Rational::parse(w.text);
        } catch (const std::exception&) {
          throw ParseError(line_, w.column, "bad coefficient '" + w.text + "'");
        }
        Token l = word();
        out.push_back({sign < 0 ? -c : c, l.text, l.column});
      } else {
        out.push_back({Rational(sign), w.text, w.column});
      }
    }
    return out;
  }

  Token word() {
    skip();
    size_t start = i_;
    while (i_ < s_.size() && !is_separator(s_[i_])) ++i_;
    if (i_ == start) fail("expected a label or coefficient");
    return {s_.substr(start, i_ - start), static_cast<int>(start) + 1};
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(line_, static_cast<int>(i_) + 1, what); }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  const std::string& s_;
  int line_;
  size_t i_;
};

std::string format_terms(const DgAlgebra& a, const SparseVector& v) {
  if (v.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < v.size(); ++k) {
    const auto& [i, c] = v[k];
    bool negative = c < Rational(0);
    Rational mag = negative ? -c : c;
    if (k == 0)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (mag != Rational(1)) out += mag.to_string() + "*";
    out += a.label(i);
  }
  return out;
}

}  // namespace

DgAlgebra parse_algebra(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  std::optional<Field> field;
  std::vector<std::string> labels;
  std::vector<int> degrees;
  std::map<std::string, std::pair<size_t, int>> where;  // label -> index, line
  std::optional<Token> unit;
  int unit_line = 0;
  std::vector<Rule> products, differentials;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = words(line);
    if (toks.empty()) continue;
    const std::string& head = toks[0].text;
    size_t eq = line.find('=');
    if (head == "field" && eq == std::string::npos) {
      if (field) throw ParseError(line_no, toks[0].column, "field declared twice");
      std::string spec;
      for (size_t k = 1; k < toks.size(); ++k) spec += (k > 1 ? " " : "") + toks[k].text;
      if (toks.size() < 2) throw ParseError(line_no, static_cast<int>(line.size()) + 1, "expected Q or Fp <prime>");
      try {
        field = Field::parse(spec);
      } catch (const std::exception& e) {
        throw ParseError(line_no, toks[1].column, e.what());
      }
    } else if (head == "basis" && eq == std::string::npos) {
      if (toks.size() < 2) throw ParseError(line_no, static_cast<int>(line.size()) + 1, "expected label:degree items");
      for (size_t k = 1; k < toks.size(); ++k) {
        const Token& t = toks[k];
        size_t colon = t.text.rfind(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == t.text.size())
          throw ParseError(line_no, t.column, "expected label:degree, got '" + t.text + "'");
        std::string label = t.text.substr(0, colon);
        for (char c : label)
          if (is_separator(c) || c == ':' || c == '#')
            throw ParseError(line_no, t.column, "label '" + label + "' contains a reserved character");
        int degree;
        try {
          size_t used = 0;
          degree = std::stoi(t.text.substr(colon + 1), &used);
          if (used != t.text.size() - colon - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          throw ParseError(line_no, t.column + static_cast<int>(colon) + 1, "bad degree in '" + t.text + "'");
        }
        if (where.count(label)) throw ParseError(line_no, t.column, "duplicate basis label '" + label + "'");
        where[label] = {labels.size(), line_no};
        labels.push_back(label);
        degrees.push_back(degree);
      }
    } else if (head == "unit" && eq == std::string::npos) {
      if (unit) throw ParseError(line_no, toks[0].column, "unit declared twice");
      if (toks.size() != 2) throw ParseError(line_no, toks[0].column, "expected: unit <label>");
      unit = toks[1];
      unit_line = line_no;
    } else {
      if (eq == std::string::npos) throw ParseError(line_no, toks[0].column, "unknown statement '" + head + "'");
      std::string lhs = line.substr(0, eq);
      LineParser rhs(line, line_no, eq + 1);
      Rule r{line_no, {}, rhs.expression()};
      if (lhs.find('*') != std::string::npos) {
        size_t star = lhs.find('*');
        auto left = words(lhs.substr(0, star));
        auto right = words(lhs, star + 1);
        if (left.size() != 1 || right.size() != 1)
          throw ParseError(line_no, toks[0].column, "expected: <label> * <label> = <expression>");
        r.lhs = {left[0], right[0]};
        products.push_back(std::move(r));
      } else {
        auto lw = words(lhs);
        if (lw.size() != 2 || lw[0].text != "d")
          throw ParseError(line_no, toks[0].column, "expected: d <label> = <expression> or a product rule");
        r.lhs = {lw[1]};
        differentials.push_back(std::move(r));
      }
    }
  }
  if (!field) throw ParseError(line_no + 1, 1, "missing field declaration");
  if (labels.empty()) throw ParseError(line_no + 1, 1, "missing basis");
  if (!unit) throw ParseError(line_no + 1, 1, "missing unit declaration");
  auto lookup = [&](int line, const Token& t) -> size_t {
    auto it = where.find(t.text);
    if (it == where.end()) throw ParseError(line, t.column, "unknown basis label '" + t.text + "'");
    return it->second.first;
  };
  auto vector_of = [&](const Rule& r) {
    SparseVector v;
    for (const auto& t : r.rhs) {
      if (t.label == "0" && !where.count("0") && t.coefficient == Rational(1) && r.rhs.size() == 1) continue;
      v.emplace_back(static_cast<uint32_t>(lookup(r.line, {t.label, t.column})), field->element(t.coefficient));
    }
    canonicalize(v, *field);
    return v;
  };
  DgAlgebra a(*field, labels, degrees, static_cast<uint32_t>(lookup(unit_line, *unit)));
  std::map<std::pair<size_t, size_t>, int> seen;
  for (const auto& r : products) {
    size_t i = lookup(r.line, r.lhs[0]), j = lookup(r.line, r.lhs[1]);
    if (seen.count({i, j})) throw ParseError(r.line, r.lhs[0].column, "duplicate product rule");
    seen[{i, j}] = r.line;
    a.set_product(i, j, vector_of(r));
  }
  std::map<size_t, int> seen_d;
  for (const auto& r : differentials) {
    size_t i = lookup(r.line, r.lhs[0]);
    if (seen_d.count(i)) throw ParseError(r.line, r.lhs[0].column, "duplicate differential rule");
    seen_d[i] = r.line;
    a.set_differential(i, vector_of(r));
  }
  require_valid(a);
  return a;
}

std::string serialize_algebra(const DgAlgebra& a) {
  std::ostringstream out;
  Field f = a.field();
  out << "field " << (f.is_rational() ? std::string("Q") : "Fp " + std::to_string(f.characteristic())) << "\n";
  out << "basis";
  for (size_t i = 0; i < a.dim(); ++i) out << " " << a.label(i) << ":" << a.degree(i);
  out << "\nunit " << a.label(a.unit()) << "\n";
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j) {
      if (i == a.unit() || j == a.unit() || a.product(i, j).empty()) continue;
      out << a.label(i) << " * " << a.label(j) << " = " << format_terms(a, a.product(i, j)) << "\n";
    }
  for (size_t i = 0; i < a.dim(); ++i)
    if (!a.differential(i).empty()) out << "d " << a.label(i) << " = " << format_terms(a, a.differential(i)) << "\n";
  return out.str();
}

DgAlgebra resolve_algebra(const std::string& name_or_path, Field field) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(name_or_path, ec)) {
    std::ifstream in(name_or_path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str());
  }
  return builtin(name_or_path, field);
}

}  // namespace hochkit
