#include "hochkit/dgalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hochkit/error.hpp"
#include "sign.hpp"

namespace hochkit {

namespace {

constexpr size_t kMaxViolations = 200;

void add_violation(ValidationReport& r, std::string axiom, std::vector<std::string> witness,
                   std::string detail = {}) {
  if (r.violations.size() < kMaxViolations)
    r.violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
}

SparseVector scaled(const SparseVector& v, const Rational& c, Field f) {
  return axpy({}, c, v, f);
}

SparseVector sub(const SparseVector& a, const SparseVector& b, Field f) {
  return axpy(a, Rational(-1), b, f);
}

void check_indices(const SparseVector& v, size_t dim, const char* what) {
  for (const auto& [i, x] : v)
    if (i >= dim) throw ShapeMismatch(std::string(what) + " refers to basis index out of range");
}

}  // namespace

std::string ValidationReport::to_string() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.axiom << " (";
    for (size_t i = 0; i < v.witness.size(); ++i) os << (i ? ", " : "") << v.witness[i];
    os << ")";
    if (!v.detail.empty()) os << ": " << v.detail;
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------- DgAlgebra

DgAlgebra::DgAlgebra(Field field, std::vector<std::string> labels, std::vector<int> degrees,
                     uint32_t unit)
    : field_(field), labels_(std::move(labels)), degrees_(std::move(degrees)), unit_(unit) {
  if (labels_.size() != degrees_.size()) throw ShapeMismatch("label and degree counts differ");
  if (labels_.empty() || unit_ >= labels_.size()) throw InvalidAlgebra("unit index out of range");
  size_t n = labels_.size();
  mult_.assign(n * n, {});
  diff_.assign(n, {});
  for (uint32_t i = 0; i < n; ++i) {
    mult_[unit_ * n + i] = basis_vector(i);
    mult_[i * n + unit_] = basis_vector(i);
  }
}

std::optional<uint32_t> DgAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<uint32_t>(it - labels_.begin());
}

void DgAlgebra::set_product(size_t i, size_t j, SparseVector v) {
  if (i >= dim() || j >= dim()) throw ShapeMismatch("product of basis indices out of range");
  check_indices(v, dim(), "product");
  canonicalize(v, field_);
  mult_[i * dim() + j] = std::move(v);
}

void DgAlgebra::set_differential(size_t i, SparseVector v) {
  if (i >= dim()) throw ShapeMismatch("differential of basis index out of range");
  check_indices(v, dim(), "differential");
  canonicalize(v, field_);
  diff_[i] = std::move(v);
}

SparseVector DgAlgebra::multiply(const SparseVector& a, const SparseVector& b) const {
  SparseVector out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b)
      for (const auto& [k, z] : product(i, j)) out.emplace_back(k, field_.mul(field_.mul(x, y), z));
  canonicalize(out, field_);
  return out;
}

SparseVector DgAlgebra::apply_d(const SparseVector& a) const {
  SparseVector out;
  for (const auto& [i, x] : a)
    for (const auto& [k, z] : differential(i)) out.emplace_back(k, field_.mul(x, z));
  canonicalize(out, field_);
  return out;
}

bool DgAlgebra::is_degree_zero() const {
  return std::all_of(degrees_.begin(), degrees_.end(), [](int d) { return d == 0; });
}

bool DgAlgebra::has_zero_differential() const {
  return std::all_of(diff_.begin(), diff_.end(), [](const SparseVector& v) { return v.empty(); });
}

int DgAlgebra::min_degree() const { return *std::min_element(degrees_.begin(), degrees_.end()); }
int DgAlgebra::max_degree() const { return *std::max_element(degrees_.begin(), degrees_.end()); }

bool operator==(const DgAlgebra& a, const DgAlgebra& b) {
  return a.field_ == b.field_ && a.labels_ == b.labels_ && a.degrees_ == b.degrees_ &&
         a.unit_ == b.unit_ && a.mult_ == b.mult_ && a.diff_ == b.diff_;
}

// --------------------------------------------------------------- DgBimodule

DgBimodule::DgBimodule(std::shared_ptr<const DgAlgebra> left,
                       std::shared_ptr<const DgAlgebra> right, std::vector<std::string> labels,
                       std::vector<int> degrees)
    : left_(std::move(left)),
      right_(std::move(right)),
      labels_(std::move(labels)),
      degrees_(std::move(degrees)) {
  if (left_->field() != right_->field()) throw FieldMismatch("bimodule over different fields");
  if (labels_.size() != degrees_.size()) throw ShapeMismatch("label and degree counts differ");
  size_t n = labels_.size();
  left_act_.assign(left_->dim() * n, {});
  right_act_.assign(n * right_->dim(), {});
  diff_.assign(n, {});
  for (uint32_t m = 0; m < n; ++m) {
    left_act_[left_->unit() * n + m] = {{m, Rational(1)}};
    right_act_[m * right_->dim() + right_->unit()] = {{m, Rational(1)}};
  }
}

void DgBimodule::set_left_action(size_t a, size_t m, SparseVector v) {
  check_indices(v, dim(), "left action");
  canonicalize(v, field());
  left_act_[a * dim() + m] = std::move(v);
}

void DgBimodule::set_right_action(size_t m, size_t b, SparseVector v) {
  check_indices(v, dim(), "right action");
  canonicalize(v, field());
  right_act_[m * right_->dim() + b] = std::move(v);
}

void DgBimodule::set_differential(size_t m, SparseVector v) {
  check_indices(v, dim(), "module differential");
  canonicalize(v, field());
  diff_[m] = std::move(v);
}

SparseVector DgBimodule::act_left(const SparseVector& a, const SparseVector& m) const {
  Field f = field();
  SparseVector out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : m)
      for (const auto& [k, z] : left_action(i, j)) out.emplace_back(k, f.mul(f.mul(x, y), z));
  canonicalize(out, f);
  return out;
}

SparseVector DgBimodule::act_right(const SparseVector& m, const SparseVector& b) const {
  Field f = field();
  SparseVector out;
  for (const auto& [i, x] : m)
    for (const auto& [j, y] : b)
      for (const auto& [k, z] : right_action(i, j)) out.emplace_back(k, f.mul(f.mul(x, y), z));
  canonicalize(out, f);
  return out;
}

SparseVector DgBimodule::apply_d(const SparseVector& m) const {
  Field f = field();
  SparseVector out;
  for (const auto& [i, x] : m)
    for (const auto& [k, z] : differential(i)) out.emplace_back(k, f.mul(x, z));
  canonicalize(out, f);
  return out;
}

// ---------------------------------------------------------------- validate

ValidationReport validate(const DgAlgebra& a) {
  ValidationReport r;
  Field f = a.field();
  const size_t n = a.dim();
  const uint32_t u = a.unit();
  if (a.degree(u) != 0) add_violation(r, "unit degree", {a.label(u)}, "unit must have degree 0");
  if (!a.differential(u).empty()) add_violation(r, "differential of unit", {a.label(u)});
  for (uint32_t i = 0; i < n; ++i) {
    SparseVector e = a.basis_vector(i);
    if (a.product(u, i) != e) add_violation(r, "left unit", {a.label(u), a.label(i)});
    if (a.product(i, u) != e) add_violation(r, "right unit", {a.label(i), a.label(u)});
    for (const auto& [k, x] : a.differential(i))
      if (a.degree(k) != a.degree(i) + 1)
        add_violation(r, "differential degree", {a.label(i)},
                      a.label(k) + " has degree " + std::to_string(a.degree(k)) + ", expected " +
                          std::to_string(a.degree(i) + 1));
    if (!a.apply_d(a.differential(i)).empty()) add_violation(r, "d∘d = 0", {a.label(i)});
  }
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = 0; j < n; ++j) {
      const SparseVector& p = a.product(i, j);
      for (const auto& [k, x] : p)
        if (a.degree(k) != a.degree(i) + a.degree(j))
          add_violation(r, "degree additivity", {a.label(i), a.label(j)},
                        a.label(k) + " has degree " + std::to_string(a.degree(k)) + ", expected " +
                            std::to_string(a.degree(i) + a.degree(j)));
      SparseVector lhs = a.apply_d(p);
      SparseVector rhs = a.multiply(a.differential(i), a.basis_vector(j));
      rhs = axpy(rhs, koszul_sign(a.degree(i)), a.multiply(a.basis_vector(i), a.differential(j)), f);
      if (lhs != rhs) add_violation(r, "Leibniz", {a.label(i), a.label(j)});
      for (uint32_t k = 0; k < n; ++k) {
        SparseVector left = a.multiply(p, a.basis_vector(k));
        SparseVector right = a.multiply(a.basis_vector(i), a.product(j, k));
        if (left != right) add_violation(r, "associativity", {a.label(i), a.label(j), a.label(k)});
      }
    }
  }
  return r;
}

void require_valid(const DgAlgebra& a) {
  ValidationReport r = validate(a);
  if (r.ok()) return;
  std::string text = r.to_string();
  text.pop_back();
  throw InvalidAlgebra(text);
}

ValidationReport validate(const AlgebraMorphism& m) {
  ValidationReport r;
  const DgAlgebra& s = *m.source;
  const DgAlgebra& t = *m.target;
  if (s.field() != t.field()) {
    add_violation(r, "field", {}, "source and target fields differ");
    return r;
  }
  if (m.images.size() != s.dim()) {
    add_violation(r, "shape", {}, "one image per source basis element is required");
    return r;
  }
  Field f = s.field();
  auto image = [&](const SparseVector& v) {
    SparseVector out;
    for (const auto& [i, x] : v) out = axpy(out, x, m.images[i], f);
    return out;
  };
  if (m.images[s.unit()] != t.basis_vector(t.unit())) add_violation(r, "unit preserved", {s.label(s.unit())});
  for (uint32_t i = 0; i < s.dim(); ++i) {
    for (const auto& [k, x] : m.images[i])
      if (t.degree(k) != s.degree(i)) add_violation(r, "degree zero", {s.label(i)});
    if (t.apply_d(m.images[i]) != image(s.differential(i)))
      add_violation(r, "commutes with differential", {s.label(i)});
    for (uint32_t j = 0; j < s.dim(); ++j)
      if (image(s.product(i, j)) != t.multiply(m.images[i], m.images[j]))
        add_violation(r, "multiplicative", {s.label(i), s.label(j)});
  }
  return r;
}

ValidationReport validate(const DgBimodule& m) {
  ValidationReport r;
  Field f = m.field();
  const DgAlgebra& a = m.left();
  const DgAlgebra& b = m.right();
  for (uint32_t x = 0; x < m.dim(); ++x) {
    SparseVector e{{x, Rational(1)}};
    if (!m.apply_d(m.apply_d(e)).empty()) add_violation(r, "d∘d = 0", {m.label(x)});
    for (const auto& [k, c] : m.differential(x))
      if (m.degree(k) != m.degree(x) + 1) add_violation(r, "differential degree", {m.label(x)});
    if (m.act_left(a.basis_vector(a.unit()), e) != e) add_violation(r, "left unit", {m.label(x)});
    if (m.act_right(e, b.basis_vector(b.unit())) != e) add_violation(r, "right unit", {m.label(x)});
    for (uint32_t i = 0; i < a.dim(); ++i) {
      SparseVector ai = a.basis_vector(i);
      SparseVector am = m.act_left(ai, e);
      for (const auto& [k, c] : am)
        if (m.degree(k) != a.degree(i) + m.degree(x))
          add_violation(r, "left action degree", {a.label(i), m.label(x)});
      SparseVector lhs = m.apply_d(am);
      SparseVector rhs = axpy(m.act_left(a.differential(i), e), koszul_sign(a.degree(i)),
                              m.act_left(ai, m.apply_d(e)), f);
      if (lhs != rhs) add_violation(r, "left Leibniz", {a.label(i), m.label(x)});
      for (uint32_t j = 0; j < a.dim(); ++j)
        if (m.act_left(a.product(i, j), e) != m.act_left(ai, m.act_left(a.basis_vector(j), e)))
          add_violation(r, "left associativity", {a.label(i), a.label(j), m.label(x)});
      for (uint32_t j = 0; j < b.dim(); ++j)
        if (m.act_right(am, b.basis_vector(j)) != m.act_left(ai, m.act_right(e, b.basis_vector(j))))
          add_violation(r, "actions commute", {a.label(i), m.label(x), b.label(j)});
    }
    for (uint32_t j = 0; j < b.dim(); ++j) {
      SparseVector bj = b.basis_vector(j);
      SparseVector mb = m.act_right(e, bj);
      for (const auto& [k, c] : mb)
        if (m.degree(k) != m.degree(x) + b.degree(j))
          add_violation(r, "right action degree", {m.label(x), b.label(j)});
      SparseVector lhs = m.apply_d(mb);
      SparseVector rhs = axpy(m.act_right(m.apply_d(e), bj), koszul_sign(m.degree(x)),
                              m.act_right(e, b.differential(j)), f);
      if (lhs != rhs) add_violation(r, "right Leibniz", {m.label(x), b.label(j)});
      for (uint32_t k = 0; k < b.dim(); ++k)
        if (m.act_right(mb, b.basis_vector(k)) != m.act_right(e, b.product(j, k)))
          add_violation(r, "right associativity", {m.label(x), b.label(j), b.label(k)});
    }
  }
  return r;
}

// ------------------------------------------------------------ constructions

DgAlgebra ground_field(Field field) { return DgAlgebra(field, {"1"}, {0}, 0); }

DgAlgebra opposite(const DgAlgebra& a) {
  DgAlgebra out(a.field(), a.labels(), a.degrees(), a.unit());
  for (size_t i = 0; i < a.dim(); ++i) {
    out.set_differential(i, a.differential(i));
    for (size_t j = 0; j < a.dim(); ++j)
      out.set_product(i, j, scaled(a.product(j, i), koszul_sign(a.degree(i) * a.degree(j)), a.field()));
  }
  return out;
}

DgAlgebra tensor_algebras(const DgAlgebra& a, const DgAlgebra& b) {
  if (a.field() != b.field()) throw FieldMismatch("tensor of algebras over different fields");
  Field f = a.field();
  const size_t nb = b.dim();
  std::vector<std::string> labels;
  std::vector<int> degrees;
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < nb; ++j) {
      labels.push_back(a.label(i) + "⊗" + b.label(j));
      degrees.push_back(a.degree(i) + b.degree(j));
    }
  DgAlgebra out(f, std::move(labels), std::move(degrees),
                static_cast<uint32_t>(a.unit() * nb + b.unit()));
  auto pair_product = [&](const SparseVector& x, const SparseVector& y, const Rational& sign) {
    SparseVector v;
    for (const auto& [k, c] : x)
      for (const auto& [l, e] : y) v.emplace_back(static_cast<uint32_t>(k * nb + l), f.mul(sign, f.mul(c, e)));
    return v;
  };
  for (size_t i = 0; i < a.dim(); ++i) {
    for (size_t j = 0; j < nb; ++j) {
      size_t ij = i * nb + j;
      SparseVector d = pair_product(a.differential(i), b.basis_vector(j), Rational(1));
      SparseVector d2 = pair_product(a.basis_vector(i), b.differential(j), koszul_sign(a.degree(i)));
      d.insert(d.end(), d2.begin(), d2.end());
      out.set_differential(ij, std::move(d));
      for (size_t k = 0; k < a.dim(); ++k) {
        const SparseVector& ak = a.product(i, k);
        if (ak.empty()) continue;
        for (size_t l = 0; l < nb; ++l)
          out.set_product(ij, k * nb + l,
                          pair_product(ak, b.product(j, l), koszul_sign(b.degree(j) * a.degree(k))));
      }
    }
  }
  return out;
}

DgAlgebra enveloping(const DgAlgebra& a) {
  DgAlgebra op = opposite(a);
  std::vector<std::string> labels;
  for (const auto& l : op.labels()) labels.push_back(l + "°");
  DgAlgebra marked(a.field(), labels, op.degrees(), op.unit());
  for (size_t i = 0; i < a.dim(); ++i) {
    marked.set_differential(i, op.differential(i));
    for (size_t j = 0; j < a.dim(); ++j) marked.set_product(i, j, op.product(i, j));
  }
  return tensor_algebras(marked, a);
}

namespace {

// Structure constants on a basis that need not contain the unit.
struct RawAlgebra {
  Field field;
  std::vector<std::string> labels;
  std::vector<int> degrees;
  std::vector<SparseVector> mult;
  std::vector<SparseVector> diff;
  SparseVector unit;  // the unit in this basis
};

// Replaces basis element r by the unit (which must have a nonzero r
// coordinate) and moves it to the front.
DgAlgebra rebase_unit(const RawAlgebra& raw, uint32_t r, const std::string& unit_label) {
  Field f = raw.field;
  const size_t n = raw.labels.size();
  Rational cr;
  for (const auto& [k, x] : raw.unit)
    if (k == r) cr = x;
  if (cr.is_zero()) throw InvalidAlgebra("unit has no component on the replaced basis element");
  Rational inv = f.inv(cr);
  // new index of old index k != r
  std::vector<uint32_t> position(n);
  for (uint32_t k = 0, next = 1; k < n; ++k) position[k] = k == r ? 0 : next++;
  auto to_new = [&](const SparseVector& v) {
    Rational vr;
    for (const auto& [k, x] : v)
      if (k == r) vr = x;
    Rational t = f.mul(vr, inv);
    SparseVector out;
    if (!t.is_zero()) out.emplace_back(0, t);
    for (const auto& [k, x] : v)
      if (k != r) out.emplace_back(position[k], x);
    for (const auto& [k, c] : raw.unit)
      if (k != r) out.emplace_back(position[k], f.neg(f.mul(t, c)));
    canonicalize(out, f);
    return out;
  };
  // old coordinates of the new basis vector at each position
  std::vector<SparseVector> new_in_old(n);
  new_in_old[0] = raw.unit;
  for (uint32_t k = 0; k < n; ++k)
    if (k != r) new_in_old[position[k]] = {{k, Rational(1)}};
  auto multiply_old = [&](const SparseVector& x, const SparseVector& y) {
    SparseVector out;
    for (const auto& [i, a] : x)
      for (const auto& [j, b] : y)
        for (const auto& [k, c] : raw.mult[i * n + j]) out.emplace_back(k, f.mul(f.mul(a, b), c));
    canonicalize(out, f);
    return out;
  };
  std::vector<std::string> labels(n);
  std::vector<int> degrees(n);
  labels[0] = unit_label;
  degrees[0] = 0;
  for (uint32_t k = 0; k < n; ++k)
    if (k != r) {
      labels[position[k]] = raw.labels[k];
      degrees[position[k]] = raw.degrees[k];
    }
  DgAlgebra out(f, labels, degrees, 0);
  for (uint32_t p = 0; p < n; ++p) {
    SparseVector d;
    for (const auto& [k, x] : new_in_old[p])
      for (const auto& [l, y] : raw.diff[k]) d.emplace_back(l, f.mul(x, y));
    canonicalize(d, f);
    out.set_differential(p, to_new(d));
    if (p == 0) continue;
    for (uint32_t q = 1; q < n; ++q) out.set_product(p, q, to_new(multiply_old(new_in_old[p], new_in_old[q])));
  }
  return out;
}

}  // namespace

DgAlgebra matrix_algebra(const DgAlgebra& a, int n) {
  if (n < 1) throw std::invalid_argument("matrix size must be positive");
  if (n > 4) throw CapExceeded("matrix size above 4");
  if (n == 1) return a;
  Field f = a.field();
  const size_t d = a.dim();
  const size_t un = static_cast<size_t>(n);
  const size_t total = un * un * d;
  RawAlgebra raw{f, {}, {}, std::vector<SparseVector>(total * total), std::vector<SparseVector>(total), {}};
  auto index = [&](size_t i, size_t j, size_t k) { return static_cast<uint32_t>((i * un + j) * d + k); };
  for (size_t i = 0; i < un; ++i)
    for (size_t j = 0; j < un; ++j)
      for (size_t k = 0; k < d; ++k) {
        std::string unit_part = "e" + std::to_string(i + 1) + std::to_string(j + 1);
        raw.labels.push_back(k == a.unit() ? unit_part : unit_part + "⊗" + a.label(k));
        raw.degrees.push_back(a.degree(k));
        for (const auto& [l, x] : a.differential(k)) raw.diff[index(i, j, k)].emplace_back(index(i, j, l), x);
        for (size_t l = 0; l < un; ++l)
          for (size_t k2 = 0; k2 < d; ++k2)
            for (const auto& [m, x] : a.product(k, k2))
              raw.mult[index(i, j, k) * total + index(j, l, k2)].emplace_back(index(i, l, m), x);
      }
  for (size_t i = 0; i < un; ++i) raw.unit.emplace_back(index(i, i, a.unit()), Rational(1));
  return rebase_unit(raw, index(un - 1, un - 1, a.unit()), "1");
}

AlgebraMorphism unit_tensor_isomorphism(const DgAlgebra& a) {
  auto k = std::make_shared<DgAlgebra>(ground_field(a.field()));
  auto source = std::make_shared<DgAlgebra>(tensor_algebras(*k, a));
  AlgebraMorphism m{source, std::make_shared<DgAlgebra>(a), {}};
  for (size_t i = 0; i < a.dim(); ++i) m.images.push_back(a.basis_vector(i));
  return m;
}

DgBimodule diagonal_bimodule(std::shared_ptr<const DgAlgebra> a) {
  DgBimodule m(a, a, a->labels(), a->degrees());
  for (size_t i = 0; i < a->dim(); ++i) {
    m.set_differential(i, a->differential(i));
    for (size_t j = 0; j < a->dim(); ++j) {
      m.set_left_action(i, j, a->product(i, j));
      m.set_right_action(i, j, a->product(i, j));
    }
  }
  return m;
}

DgBimodule enveloping_module(std::shared_ptr<const DgAlgebra> a) {
  Field f = a->field();
  auto env = std::make_shared<DgAlgebra>(enveloping(*a));
  auto k = std::make_shared<DgAlgebra>(ground_field(f));
  DgBimodule m(env, k, a->labels(), a->degrees());
  const size_t n = a->dim();
  for (size_t i = 0; i < n; ++i) {
    m.set_differential(i, a->differential(i));
    for (size_t j = 0; j < n; ++j)
      for (size_t x = 0; x < n; ++x) {
        // (a_i°⊗a_j)·m_x = (-1)^{|i|(|j|+|x|)} a_j m_x a_i
        SparseVector v = a->multiply(a->product(j, x), a->basis_vector(i));
        Rational s = koszul_sign(a->degree(i) * (a->degree(j) + a->degree(x)));
        m.set_left_action(i * n + j, x, scaled(v, s, f));
      }
  }
  return m;
}

CochainComplex tensor_over(const DgBimodule& m, const DgAlgebra& a, const DgBimodule& n) {
  if (m.right() != a) throw InvalidModule("right action of the first module is not over the algebra");
  if (n.left() != a) throw InvalidModule("left action of the second module is not over the algebra");
  Field f = a.field();
  const size_t dn = n.dim();
  std::map<int, std::vector<uint32_t>> by_degree;  // degree -> pair indices v*dn+w
  for (size_t v = 0; v < m.dim(); ++v)
    for (size_t w = 0; w < dn; ++w) by_degree[m.degree(v) + n.degree(w)].push_back(static_cast<uint32_t>(v * dn + w));
  if (by_degree.empty()) return CochainComplex(f, 0, -1);
  int lo = by_degree.begin()->first, hi = by_degree.rbegin()->first;
  std::map<uint32_t, uint32_t> local;  // pair index -> position within its degree
  for (const auto& [deg, pairs] : by_degree)
    for (size_t i = 0; i < pairs.size(); ++i) local[pairs[i]] = static_cast<uint32_t>(i);
  auto pair_vector = [&](const SparseVector& x, const SparseVector& y, const Rational& sign) {
    SparseVector out;
    for (const auto& [i, c] : x)
      for (const auto& [j, e] : y) out.emplace_back(local.at(static_cast<uint32_t>(i * dn + j)), f.mul(sign, f.mul(c, e)));
    return out;
  };
  std::map<int, Echelon> image;
  for (const auto& [deg, pairs] : by_degree) image.emplace(deg, Echelon(f, pairs.size()));
  for (uint32_t v = 0; v < m.dim(); ++v)
    for (uint32_t fi = 0; fi < a.dim(); ++fi)
      for (uint32_t w = 0; w < dn; ++w) {
        int deg = m.degree(v) + a.degree(fi) + n.degree(w);
        auto it = image.find(deg);
        SparseVector ev{{v, Rational(1)}}, ew{{w, Rational(1)}};
        Rational s = koszul_sign(m.degree(v) * a.degree(fi));
        // M(f)(v)⊗w - (-1)^{pq} v⊗f·w, M(f)(v) = (-1)^{pq} v·f
        SparseVector sigma = pair_vector(m.act_right(ev, a.basis_vector(fi)), ew, s);
        SparseVector rest = pair_vector(ev, n.act_left(a.basis_vector(fi), ew), f.neg(s));
        sigma.insert(sigma.end(), rest.begin(), rest.end());
        canonicalize(sigma, f);
        if (sigma.empty()) continue;
        if (it == image.end()) throw InvalidModule("relation lands in a degree with no tensor");
        it->second.insert(sigma);
      }
  CochainComplex out(f, lo, hi);
  std::map<int, std::vector<int32_t>> quotient_pos;  // local index -> quotient position or -1
  for (const auto& [deg, pairs] : by_degree) {
    auto pivots = image.at(deg).pivots();
    std::vector<int32_t> pos(pairs.size(), -1);
    std::vector<std::string> labels;
    size_t p = 0;
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (p < pivots.size() && pivots[p] == i) {
        ++p;
        continue;
      }
      pos[i] = static_cast<int32_t>(labels.size());
      labels.push_back(m.label(pairs[i] / dn) + "⊗" + n.label(pairs[i] % dn));
    }
    size_t count = labels.size();
    out.set_component(deg, count, std::move(labels));
    quotient_pos[deg] = std::move(pos);
  }
  for (int deg = lo; deg < hi; ++deg) {
    auto src = by_degree.find(deg);
    auto dst = by_degree.find(deg + 1);
    if (src == by_degree.end() || dst == by_degree.end()) continue;
    ColumnBuilder cb(f, out.dim(deg + 1));
    const auto& spos = quotient_pos[deg];
    const auto& dpos = quotient_pos[deg + 1];
    for (size_t i = 0; i < src->second.size(); ++i) {
      if (spos[i] < 0) continue;
      uint32_t v = src->second[i] / static_cast<uint32_t>(dn), w = src->second[i] % static_cast<uint32_t>(dn);
      SparseVector ev{{v, Rational(1)}}, ew{{w, Rational(1)}};
      SparseVector dvw = pair_vector(m.apply_d(ev), ew, Rational(1));
      SparseVector rest = pair_vector(ev, n.apply_d(ew), koszul_sign(m.degree(v)));
      dvw.insert(dvw.end(), rest.begin(), rest.end());
      canonicalize(dvw, f);
      for (const auto& [k, x] : image.at(deg + 1).reduce(dvw)) {
        if (dpos[k] < 0) throw InvalidModule("reduced differential hits a relation pivot");
        cb.add(static_cast<uint32_t>(dpos[k]), x);
      }
      cb.finish_column();
    }
    out.set_differential(deg, std::move(cb).build());
  }
  return out;
}

Subspace center_degree0(const DgAlgebra& a) {
  if (!a.is_degree_zero()) throw InvalidAlgebra("center_degree0 needs an algebra concentrated in degree 0");
  Field f = a.field();
  const size_t n = a.dim();
  std::vector<Triplet> t;
  for (size_t b = 0; b < n; ++b)
    for (size_t z = 0; z < n; ++z) {
      SparseVector c = sub(a.product(z, b), a.product(b, z), f);
      for (const auto& [k, x] : c)
        t.push_back({static_cast<uint32_t>(b * n + k), static_cast<uint32_t>(z), x});
    }
  return kernel_basis(SparseMatrix::from_triplets(f, n * n, n, std::move(t)));
}

}  // namespace hochkit
