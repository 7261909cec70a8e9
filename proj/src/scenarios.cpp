#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "hochkit/builtins.hpp"
#include "hochkit/cech.hpp"
#include "hochkit/cyclic.hpp"
#include "hochkit/error.hpp"
#include "hochkit/harness.hpp"
#include "hochkit/hochschild.hpp"

namespace hochkit {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<long> to_long(const std::vector<size_t>& v) { return {v.begin(), v.end()}; }

std::vector<long> prefix(std::vector<long> v, size_t n) {
  v.resize(std::min(v.size(), n));
  return v;
}

Check row_check(std::string name, std::optional<std::vector<long>> expected, std::vector<long> actual) {
  bool pass = !expected || *expected == actual;
  return {std::move(name), std::move(expected), std::move(actual), pass, ""};
}

Check witness(std::string name, bool pass, std::string note = "") {
  return {std::move(name), std::nullopt, std::nullopt, pass, std::move(note)};
}

std::vector<long> repeat(std::vector<long> head, std::vector<long> cycle, int count) {
  std::vector<long> out;
  for (int i = 0; i < count; ++i) {
    size_t k = static_cast<size_t>(i);
    out.push_back(k < head.size() ? head[k] : cycle[(k - head.size()) % cycle.size()]);
  }
  return out;
}

// Frozen values, matched by structure constants.
std::optional<std::vector<long>> fixture(const std::string& invariant, const DgAlgebra& a, int count) {
  Field f = a.field();
  auto is = [&](const char* name) { return a == builtin(name, f); };
  bool k = is("ground_field"), m2 = is("matrix(2, ground_field)"), ut = is("upper_triangular(2)"),
       dual = is("dual_numbers");
  if (invariant == "hh") {
    if (k || m2 || ut) return repeat({1}, {0}, count);
    if (dual && f.is_rational()) return repeat({2}, {1}, count);
    if (dual && f.characteristic() == 2) return repeat({}, {2}, count);
  } else if (invariant == "hh-homology") {
    if (k || m2) return repeat({1}, {0}, count);
    if (ut) return repeat({2}, {0}, count);
    if (dual && f.is_rational()) return repeat({2}, {1}, count);
    if (dual && f.characteristic() == 2) return repeat({}, {2}, count);
  } else if (invariant == "hc") {
    if (k || m2) return repeat({}, {1, 0}, count);
    if (dual && f.is_rational()) return repeat({}, {2, 0}, count);
  }
  return std::nullopt;
}

std::vector<long> convolution(const KunnethReport& r) {
  std::vector<long> out;
  for (const auto& c : r.checks) out.push_back(c.expected);
  return out;
}

std::vector<long> actuals(const KunnethReport& r) {
  std::vector<long> out;
  for (const auto& c : r.checks) out.push_back(c.actual);
  return out;
}

void add_kunneth(Report& out, const std::string& name, const KunnethReport& r) {
  out.checks.push_back(row_check(name, convolution(r), actuals(r)));
  for (const auto& [w, ok] : r.witnesses) out.checks.push_back(witness(w, ok));
}

std::string failing_witnesses(const KunnethReport& r) {
  std::string s;
  for (const auto& [w, ok] : r.witnesses)
    if (!ok) s += (s.empty() ? "" : "; ") + w;
  return s;
}

void add_sequence(Report& out, const ExactSequenceReport& r) {
  for (const auto& n : r.nodes)
    out.checks.push_back({"exact at " + n.label, std::nullopt, std::vector<long>{static_cast<long>(n.dim)}, n.exact, ""});
  for (const auto& [w, ok] : r.witnesses) out.checks.push_back(witness(w, ok));
}

// Runs body, timing it and turning library failures into failed checks.
Report timed(std::string id, std::string command, const std::function<void(Report&)>& body, double limit = 0) {
  Report r;
  r.id = std::move(id);
  r.command = std::move(command);
  r.time_limit = limit;
  auto start = Clock::now();
  try {
    body(r);
  } catch (const TruncationError& e) {
    r.checks.push_back(witness("truncation", false, std::string("truncation-unreliable: ") + e.what()));
  } catch (const CapExceeded& e) {
    r.checks.push_back(witness("size cap", false, e.what()));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    r.checks.push_back(witness("error", false, e.what()));
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

std::string field_flag(Field f) { return " --field " + f.name(); }

int parse_twist(const std::string& s, const char* flag) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(std::string(flag) + " expects an integer twist, got '" + s + "'");
}

const std::vector<std::string> kCriterionAlgebras{"ground_field", "dual_numbers", "trunc_poly(3)",
                                                  "matrix(2, ground_field)", "upper_triangular(2)"};

Report criterion_axioms() {
  return timed("criterion-01", "suite --criterion 1", [](Report& r) {
    for (Field f : {Field::rationals(), Field::prime(2)}) {
      std::vector<std::pair<std::string, DgAlgebra>> all;
      std::vector<std::pair<std::string, DgAlgebra>> base;
      for (const auto& n : builtin_names()) base.emplace_back(n, builtin(n, f));
      for (const auto& [n, a] : base) {
        all.emplace_back(n, a);
        all.emplace_back("opposite(" + n + ")", opposite(a));
        all.emplace_back("enveloping(" + n + ")", enveloping(a));
      }
      for (size_t i = 0; i < base.size(); ++i)
        for (size_t j = i; j < base.size(); ++j)
          all.emplace_back(base[i].first + "⊗" + base[j].first, tensor_algebras(base[i].second, base[j].second));
      all.emplace_back("matrix(2, dual_numbers)", matrix_algebra(dual_numbers(f), 2));
      all.emplace_back("matrix(2, koszul_example)", matrix_algebra(koszul_example(f), 2));
      bool ok = true;
      std::string bad;
      for (const auto& [n, a] : all) {
        auto v = validate(a);
        if (!v.ok()) {
          ok = false;
          bad += (bad.empty() ? "" : "; ") + n + ": " + v.to_string();
        }
      }
      r.checks.push_back({"validate " + std::to_string(all.size()) + " algebras over " + f.name(), std::nullopt,
                          std::vector<long>{static_cast<long>(all.size())}, ok, bad});
    }
  }, 1);
}

Report criterion_hh_ground() {
  return timed("criterion-02", "hh --algebra ground_field --max-degree 5", [](Report& r) {
    r.window = {{"max_degree", 5}};
    auto dims = to_long(hh_cohomology_dims(ground_field(Field::rationals()), 5));
    r.checks.push_back(row_check("HH^0..HH^4", std::vector<long>{1, 0, 0, 0, 0}, dims));
  }, 1);
}

Report criterion_dual() {
  return timed("criterion-03", "suite --criterion 3", [](Report& r) {
    Field q = Field::rationals();
    r.window = {{"max_degree", 5}};
    auto oracle = periodic_resolution_oracle(2, q, 5);
    r.checks.push_back(row_check("periodic resolution oracle (frozen)", std::vector<long>{2, 1, 1, 1, 1}, oracle));
    DgAlgebra a = dual_numbers(q);
    r.checks.push_back(row_check("HH^0..HH^4 vs oracle", oracle, to_long(hh_cohomology_dims(a, 5))));
    r.checks.push_back(row_check("HH_0..HH_4 vs oracle", oracle, to_long(hh_homology_dims(a, 5))));
  }, 10);
}

Report criterion_kunneth(bool homology) {
  std::string id = homology ? "criterion-05" : "criterion-04";
  return timed(id, "suite --criterion " + std::string(homology ? "5" : "4"), [homology](Report& r) {
    Field q = Field::rationals();
    r.window = {{"max_degree", 3}};
    for (size_t i = 0; i < kCriterionAlgebras.size(); ++i)
      for (size_t j = i; j < kCriterionAlgebras.size(); ++j) {
        DgAlgebra a = builtin(kCriterionAlgebras[i], q), b = builtin(kCriterionAlgebras[j], q);
        KunnethReport k = homology ? kunneth_check_homology(a, b, 3) : kunneth_check_cohomology(a, b, 3);
        Check c = row_check((homology ? "HH_*(" : "HH^*(") + kCriterionAlgebras[i] + " ⊗ " + kCriterionAlgebras[j] + ")",
                            convolution(k), actuals(k));
        c.pass = k.pass();
        c.note = failing_witnesses(k);
        r.checks.push_back(c);
      }
  }, 300);
}

Report criterion_morita() {
  return timed("criterion-06", "suite --criterion 6", [](Report& r) {
    r.window = {{"max_degree", 3}};
    for (const char* n : {"ground_field", "dual_numbers"}) {
      KunnethReport k = morita_check(builtin(n, Field::rationals()), 2, 3);
      Check c = row_check(std::string("HH^*(M_2(") + n + ")) vs HH^*(" + n + ")", convolution(k), actuals(k));
      c.pass = k.pass();
      c.note = failing_witnesses(k);
      r.checks.push_back(c);
    }
  }, 120);
}

Report criterion_cyclic() {
  return timed("criterion-07", "suite --criterion 7", [](Report& r) {
    Field q = Field::rationals();
    r.window = {{"hc_level", 6}, {"periodicity_level", 5}};
    for (const char* n : {"ground_field", "dual_numbers", "matrix(2, ground_field)"})
      r.checks.push_back(witness(std::string("b^2 = B^2 = bB + Bb = 0 for ") + n,
                                 check_mixed(mixed_complex(builtin(n, q), 6)).empty()));
    r.checks.push_back(
        row_check("HC_0..HC_4(k)", std::vector<long>{1, 0, 1, 0, 1}, to_long(cyclic_homology_dims(ground_field(q), 6))));
    for (const char* n : {"ground_field", "dual_numbers", "matrix(2, ground_field)"}) {
      auto s = periodicity_sequence_check(builtin(n, q), 5);
      std::vector<long> dims;
      bool exact = true;
      for (const auto& node : s.nodes) {
        dims.push_back(static_cast<long>(node.dim));
        exact = exact && node.exact;
      }
      bool wit = std::all_of(s.witnesses.begin(), s.witnesses.end(), [](const auto& w) { return w.second; });
      r.checks.push_back({std::string("periodicity sequence exact for ") + n + " (n <= 3)", std::nullopt, dims,
                          exact && wit, ""});
    }
  }, 120);
}

Report criterion_hc_kunneth() {
  return timed("criterion-08", "suite --criterion 8", [](Report& r) {
    Field q = Field::rationals();
    r.window = {{"level", 4}};
    for (auto [x, y] : {std::pair<const char*, const char*>{"dual_numbers", "ground_field"}, {"dual_numbers", "dual_numbers"}}) {
      auto s = hc_kunneth_sequence_check(builtin(x, q), builtin(y, q), 4);
      std::vector<long> dims;
      bool exact = true;
      for (const auto& node : s.nodes) {
        dims.push_back(static_cast<long>(node.dim));
        exact = exact && node.exact;
      }
      bool wit = std::all_of(s.witnesses.begin(), s.witnesses.end(), [](const auto& w) { return w.second; });
      r.checks.push_back({std::string("HC Künneth sequence exact for ") + x + " ⊗ " + y + " (n <= 2)", std::nullopt, dims,
                          exact && wit, ""});
    }
  }, 300);
}

Report criterion_cech() {
  return timed("criterion-09", "suite --criterion 9", [](Report& r) {
    r.window = {{"window", 8}, {"recheck_window", 10}};
    std::vector<long> oracle, w8, w10;
    for (int d = -6; d <= 6; ++d) {
      auto [h0, h1] = monomial_oracle(d);
      oracle.insert(oracle.end(), {h0, h1});
      for (auto [m, out] : {std::pair<int, std::vector<long>*>{8, &w8}, {10, &w10}}) {
        CechComplex c = cech_complex(d, MonomialWindow{m});
        out->push_back(static_cast<long>(cohomology_dim(c.complex, 0)));
        out->push_back(static_cast<long>(cohomology_dim(c.complex, 1)));
      }
    }
    r.checks.push_back(row_check("(h0,h1) of O(-6)..O(6), window 8", oracle, w8));
    r.checks.push_back(row_check("window stability 8 -> 10", w8, w10));
  }, 10);
}

Report criterion_cech_kunneth() {
  return timed("criterion-10", "suite --criterion 10", [](Report& r) {
    r.window = {{"window", 5}, {"cosimplicial_level", 3}};
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b) {
        KunnethReport k = kunneth_cech_check(a, b, MonomialWindow{5});
        Check c = row_check("H^*(O(" + std::to_string(a) + ")⊠O(" + std::to_string(b) + "))", convolution(k), actuals(k));
        c.pass = k.pass();
        c.note = failing_witnesses(k);
        r.checks.push_back(c);
      }
  }, 60);
}

Report criterion_truncation() {
  return timed("criterion-11", "suite --criterion 11", [](Report& r) {
    Field q = Field::rationals();
    r.window = {{"max_degree", 5}, {"recheck_max_degree", 7}, {"window", 8}, {"recheck_window", 10}};
    auto compare = [&](const std::string& name, std::vector<long> base, std::vector<long> deeper) {
      Check c = row_check(name, base, prefix(deeper, base.size()));
      if (!c.pass) c.note = "truncation-unreliable";
      r.checks.push_back(c);
    };
    for (const auto& n : kCriterionAlgebras) {
      DgAlgebra a = builtin(n, q);
      compare("HH^* " + n, to_long(hh_cohomology_dims(a, 5)), to_long(hh_cohomology_dims(a, 7)));
      compare("HH_* " + n, to_long(hh_homology_dims(a, 5)), to_long(hh_homology_dims(a, 7)));
      compare("HC_* " + n, to_long(cyclic_homology_dims(a, 6)), to_long(cyclic_homology_dims(a, 8)));
    }
    for (int d = -6; d <= 6; ++d) {
      auto h = [d](int m) {
        CechComplex c = cech_complex(d, MonomialWindow{m});
        return std::vector<long>{static_cast<long>(cohomology_dim(c.complex, 0)),
                                 static_cast<long>(cohomology_dim(c.complex, 1))};
      };
      compare("H^*(O(" + std::to_string(d) + "))", h(8), h(10));
    }
    for (auto [a, b] : {std::pair<int, int>{-2, -2}, {1, -2}, {-3, 3}}) {
      auto h = [a, b](int m) {
        CechComplex c = product_cech_complex(a, b, MonomialWindow{m});
        std::vector<long> out;
        for (int n = 0; n <= 3; ++n) out.push_back(static_cast<long>(cohomology_dim(c.complex, n)));
        return out;
      };
      compare("H^*(O(" + std::to_string(a) + ")⊠O(" + std::to_string(b) + "))", h(5), h(7));
    }
  }, 300);
}

}  // namespace

std::vector<long> periodic_resolution_oracle(int n, Field field, int count) {
  // A = k[x]/(x^n) has the resolution ... -> A^e -(N)-> A^e -(x⊗1 - 1⊗x)-> A^e
  // with N = sum_i x^i ⊗ x^{n-1-i}. Applying Hom_{A^e}(-, A) or A ⊗_{A^e} -
  // gives A in every degree with maps alternating 0 and multiplication by
  // n x^{n-1}.
  std::vector<Triplet> t;
  if (n >= 1) t.push_back({static_cast<uint32_t>(n - 1), 0, field.element(Rational(n))});
  SparseMatrix norm = SparseMatrix::from_triplets(field, static_cast<size_t>(n), static_cast<size_t>(n), t);
  long r = static_cast<long>(rank(norm));
  std::vector<long> out;
  for (int m = 0; m < count; ++m) out.push_back(m == 0 ? n : n - r);
  return out;
}

std::pair<long, long> monomial_oracle(int d) {
  long h0 = 0, h1 = 0;
  int reach = std::abs(d) + 2;
  for (int j = -reach; j <= reach; ++j) {
    bool on_u0 = j >= 0, on_u1 = j <= d;
    if (on_u0 && on_u1) ++h0;
    if (!on_u0 && !on_u1) ++h1;
  }
  return {h0, h1};
}

std::vector<std::string> scenario_names() {
  return {"validate", "hh", "hh-homology", "hc", "periodicity", "kunneth-hh", "kunneth-hh-homology",
          "kunneth-hc", "morita", "cech", "cech-hom", "cech-kunneth", "suite"};
}

Report run_criterion(int id) {
  switch (id) {
    case 1:
      return criterion_axioms();
    case 2:
      return criterion_hh_ground();
    case 3:
      return criterion_dual();
    case 4:
      return criterion_kunneth(false);
    case 5:
      return criterion_kunneth(true);
    case 6:
      return criterion_morita();
    case 7:
      return criterion_cyclic();
    case 8:
      return criterion_hc_kunneth();
    case 9:
      return criterion_cech();
    case 10:
      return criterion_cech_kunneth();
    case 11:
      return criterion_truncation();
    default:
      throw std::invalid_argument("criterion must be between 1 and " + std::to_string(kCriteria));
  }
}

std::vector<Report> run_scenario(const std::string& command, const ScenarioOptions& o) {
  const int N = o.max_degree;
  const std::string deg = " --max-degree " + std::to_string(N);
  if (N < 1 || N > 12) throw std::invalid_argument("--max-degree must be between 1 and 12");
  if (o.window < 1) throw std::invalid_argument("--window must be positive");

  if (command == "validate") {
    std::string cmd = "validate --algebra " + o.algebra + field_flag(o.field);
    DgAlgebra a;
    try {
      a = resolve_algebra(o.algebra, o.field);
    } catch (const InvalidAlgebra& e) {
      return {timed("validate", cmd, [&](Report& r) { r.checks.push_back(witness("axioms", false, e.what())); })};
    }
    return {timed("validate", cmd, [&](Report& r) {
      auto v = validate(a);
      r.checks.push_back(witness("axioms", v.ok(), v.to_string()));
      r.checks.push_back({"dimension", std::nullopt, std::vector<long>{static_cast<long>(a.dim())}, true, ""});
    })};
  }
  if (command == "hh" || command == "hh-homology" || command == "hc") {
    DgAlgebra a = resolve_algebra(o.algebra, o.field);
    std::string cmd = command + " --algebra " + o.algebra + field_flag(a.field()) + deg;
    return {timed(command, cmd, [&](Report& r) {
      r.window = {{"max_degree", N}, {"recheck_max_degree", N + 2}};
      std::function<std::vector<size_t>(int)> dims;
      std::string name;
      if (command == "hh") {
        dims = [&](int n) { return hh_cohomology_dims(a, n); };
        name = "HH^0..HH^" + std::to_string(N - 1);
      } else if (command == "hh-homology") {
        dims = [&](int n) { return hh_homology_dims(a, n); };
        name = "HH_0..HH_" + std::to_string(N - 1);
      } else {
        dims = [&](int n) { return cyclic_homology_dims(a, n + 1); };
        name = "HC_0..HC_" + std::to_string(N - 1);
      }
      auto base = to_long(dims(N));
      r.checks.push_back(row_check(name, fixture(command, a, N), base));
      Check again = row_check("stable at max-degree " + std::to_string(N + 2), base, prefix(to_long(dims(N + 2)), base.size()));
      if (!again.pass) again.note = "truncation-unreliable";
      r.checks.push_back(again);
    })};
  }
  if (command == "periodicity") {
    DgAlgebra a = resolve_algebra(o.algebra, o.field);
    std::string cmd = command + " --algebra " + o.algebra + field_flag(a.field()) + deg;
    return {timed(command, cmd, [&](Report& r) {
      r.window = {{"max_degree", N}, {"level", N + 2}};
      add_sequence(r, periodicity_sequence_check(a, N + 2));
    })};
  }
  if (command == "kunneth-hh" || command == "kunneth-hh-homology" || command == "kunneth-hc") {
    DgAlgebra a = resolve_algebra(o.a, o.field), b = resolve_algebra(o.b, o.field);
    std::string cmd = command + " --a " + o.a + " --b " + o.b + field_flag(a.field()) + deg;
    return {timed(command, cmd, [&](Report& r) {
      if (command == "kunneth-hc") {
        r.window = {{"max_degree", N}, {"level", N + 2}};
        add_sequence(r, hc_kunneth_sequence_check(a, b, N + 2));
      } else {
        r.window = {{"max_degree", N}};
        bool hom = command == "kunneth-hh-homology";
        add_kunneth(r, hom ? "HH_*(A⊗B) vs convolution" : "HH^*(A⊗B) vs convolution",
                    hom ? kunneth_check_homology(a, b, N) : kunneth_check_cohomology(a, b, N));
      }
    })};
  }
  if (command == "morita") {
    DgAlgebra a = resolve_algebra(o.algebra, o.field);
    std::string cmd = command + " --algebra " + o.algebra + " --n " + std::to_string(o.matrix_size) + field_flag(a.field()) + deg;
    return {timed(command, cmd, [&](Report& r) {
      r.window = {{"max_degree", N}};
      add_kunneth(r, "HH^*(M_n(A)) vs HH^*(A)", morita_check(a, o.matrix_size, N));
    })};
  }
  if (command == "cech" || command == "cech-hom") {
    bool hom = command == "cech-hom";
    int d = hom ? o.d2 - o.d1 : o.twist;
    std::string cmd = hom ? "cech-hom --d1 " + std::to_string(o.d1) + " --d2 " + std::to_string(o.d2)
                          : "cech --twist " + std::to_string(o.twist);
    cmd += " --window " + std::to_string(o.window);
    return {timed(command, cmd, [&](Report& r) {
      r.window = {{"window", o.window}, {"recheck_window", o.window + 2}};
      auto h = [&](int m) {
        CochainComplex c = hom ? hom_complex_cech(o.d1, o.d2, MonomialWindow{m}) : cech_complex(d, MonomialWindow{m}).complex;
        return std::vector<long>{static_cast<long>(cohomology_dim(c, 0)), static_cast<long>(cohomology_dim(c, 1))};
      };
      auto [h0, h1] = monomial_oracle(d);
      auto base = h(o.window);
      r.checks.push_back(row_check("(h0,h1) vs monomial oracle", std::vector<long>{h0, h1}, base));
      Check again = row_check("stable at window " + std::to_string(o.window + 2), base, h(o.window + 2));
      if (!again.pass) again.note = "truncation-unreliable";
      r.checks.push_back(again);
    })};
  }
  if (command == "cech-kunneth") {
    int a = parse_twist(o.a, "--a"), b = parse_twist(o.b, "--b");
    std::string cmd = "cech-kunneth --a " + std::to_string(a) + " --b " + std::to_string(b) + " --window " +
                      std::to_string(o.window);
    return {timed(command, cmd, [&](Report& r) {
      r.window = {{"window", o.window}, {"cosimplicial_level", 3}};
      add_kunneth(r, "H^*(O(a)⊠O(b)) vs convolution", kunneth_cech_check(a, b, MonomialWindow{o.window}));
    })};
  }
  if (command == "suite") {
    std::vector<Report> out;
    if (o.criterion != 0) {
      out.push_back(run_criterion(o.criterion));
    } else {
      for (int i = 1; i <= kCriteria; ++i) out.push_back(run_criterion(i));
    }
    return out;
  }
  throw std::invalid_argument("unknown command '" + command + "'");
}

}  // namespace hochkit
