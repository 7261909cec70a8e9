#include "hochkit/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <variant>

#include "echelon_impl.hpp"
#include "hochkit/error.hpp"

namespace hochkit {

using detail::EchelonT;
using detail::ModRing;
using detail::RatRing;

namespace {

template <class Ring>
detail::Vec<Ring> convert_in(const Ring& ring, const SparseVector& v) {
  detail::Vec<Ring> out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) out.emplace_back(i, ring.from(x));
  return out;
}

template <class Ring>
SparseVector convert_out(const Ring& ring, const detail::Vec<Ring>& v) {
  SparseVector out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) out.emplace_back(i, ring.to(x));
  return out;
}

template <class F>
decltype(auto) with_ring(Field field, F&& f) {
  if (field.is_rational()) return f(RatRing{});
  return f(ModRing{field.characteristic()});
}

class UnionFind {
 public:
  explicit UnionFind(size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  uint32_t find(uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<uint32_t> parent_;
};

// Vectors living in field^ambient, split into two groups. Group 0 vectors
// are eliminated before group 1 vectors, and indices of group 0 come before
// indices of group 1 in the pivot order. Returns {pivots attributable to
// group 0, total rank}: with vector groups this is the rank of the group 0
// vectors; with index groups, the rank of the group 0 coordinates' columns.
struct EliminationInput {
  size_t ambient = 0;
  std::vector<SparseVector> vectors;
  std::vector<uint8_t> vector_group;  // empty: all group 0
  std::vector<uint8_t> index_group;   // empty: all group 0
};

template <class Ring>
std::pair<size_t, size_t> eliminate(const Ring& ring, EliminationInput in) {
  const size_t n = in.ambient;
  UnionFind uf(n);
  std::vector<uint32_t> occurrences(n, 0);
  for (const auto& v : in.vectors) {
    for (size_t k = 0; k < v.size(); ++k) {
      ++occurrences[v[k].first];
      if (k) uf.unite(v[0].first, v[k].first);
    }
  }
  // Group indices and vectors by component.
  std::vector<int32_t> comp_of_root(n, -1);
  std::vector<std::vector<uint32_t>> comp_indices;
  for (uint32_t i = 0; i < n; ++i) {
    if (occurrences[i] == 0) continue;
    uint32_t r = uf.find(i);
    if (comp_of_root[r] < 0) {
      comp_of_root[r] = static_cast<int32_t>(comp_indices.size());
      comp_indices.emplace_back();
    }
    comp_indices[static_cast<size_t>(comp_of_root[r])].push_back(i);
  }
  std::vector<std::vector<uint32_t>> comp_vectors(comp_indices.size());
  for (uint32_t j = 0; j < in.vectors.size(); ++j) {
    if (in.vectors[j].empty()) continue;
    comp_vectors[static_cast<size_t>(comp_of_root[uf.find(in.vectors[j][0].first)])]
        .push_back(j);
  }

  auto igroup = [&](uint32_t i) -> int { return in.index_group.empty() ? 0 : in.index_group[i]; };
  auto vgroup = [&](uint32_t j) -> int { return in.vector_group.empty() ? 0 : in.vector_group[j]; };

  size_t first = 0, total = 0;
  std::vector<uint32_t> local(n, 0);
  for (size_t c = 0; c < comp_indices.size(); ++c) {
    auto& idx = comp_indices[c];
    // Rare coordinates first keeps fill-in low.
    std::sort(idx.begin(), idx.end(), [&](uint32_t a, uint32_t b) {
      int ga = igroup(a), gb = igroup(b);
      if (ga != gb) return ga < gb;
      if (occurrences[a] != occurrences[b]) return occurrences[a] < occurrences[b];
      return a < b;
    });
    size_t group0_indices = 0;
    for (size_t k = 0; k < idx.size(); ++k) {
      local[idx[k]] = static_cast<uint32_t>(k);
      if (igroup(idx[k]) == 0) ++group0_indices;
    }
    auto& vs = comp_vectors[c];
    std::stable_sort(vs.begin(), vs.end(), [&](uint32_t a, uint32_t b) {
      int ga = vgroup(a), gb = vgroup(b);
      if (ga != gb) return ga < gb;
      return in.vectors[a].size() < in.vectors[b].size();
    });
    EchelonT<Ring> ech(ring, idx.size());
    size_t limit = std::min(idx.size(), vs.size());
    for (uint32_t j : vs) {
      detail::Vec<Ring> v;
      v.reserve(in.vectors[j].size());
      for (const auto& [i, x] : in.vectors[j]) v.emplace_back(local[i], ring.from(x));
      std::sort(v.begin(), v.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      SparseVector().swap(in.vectors[j]);
      if (ech.insert(std::move(v)) && vgroup(j) == 0 && in.index_group.empty())
        ++first;
      if (ech.rank() == limit && in.vector_group.empty() && in.index_group.empty())
        break;
    }
    if (!in.index_group.empty())
      for (const auto& row : ech.rows())
        if (row.front().first < group0_indices) ++first;
    total += ech.rank();
  }
  return {first, total};
}

std::pair<size_t, size_t> eliminate(Field field, EliminationInput in) {
  return with_ring(field, [&](auto ring) { return eliminate(ring, std::move(in)); });
}

}  // namespace

// ---------------------------------------------------------------- Echelon

struct Echelon::Impl {
  std::variant<EchelonT<RatRing>, EchelonT<ModRing>> e;
};

Echelon::Echelon(Field field, size_t ambient)
    : field_(field), ambient_(ambient), impl_(std::make_unique<Impl>(Impl{
          field.is_rational()
              ? std::variant<EchelonT<RatRing>, EchelonT<ModRing>>(
                    EchelonT<RatRing>(RatRing{}, ambient))
              : std::variant<EchelonT<RatRing>, EchelonT<ModRing>>(
                    EchelonT<ModRing>(ModRing{field.characteristic()}, ambient))})) {}

Echelon::~Echelon() = default;
Echelon::Echelon(Echelon&&) noexcept = default;
Echelon& Echelon::operator=(Echelon&&) noexcept = default;

size_t Echelon::rank() const {
  return std::visit([](const auto& e) { return e.rank(); }, impl_->e);
}

bool Echelon::insert(const SparseVector& v) {
  for (const auto& [i, x] : v)
    if (i >= ambient_) throw ShapeMismatch("vector index out of ambient range");
  if (field_.is_rational())
    return std::get<0>(impl_->e).insert(convert_in(RatRing{}, v));
  ModRing r{field_.characteristic()};
  return std::get<1>(impl_->e).insert(convert_in(r, v));
}

SparseVector Echelon::reduce(const SparseVector& v) const {
  for (const auto& [i, x] : v)
    if (i >= ambient_) throw ShapeMismatch("vector index out of ambient range");
  if (field_.is_rational())
    return convert_out(RatRing{}, std::get<0>(impl_->e).reduce_full(convert_in(RatRing{}, v)));
  ModRing r{field_.characteristic()};
  return convert_out(r, std::get<1>(impl_->e).reduce_full(convert_in(r, v)));
}

std::vector<SparseVector> Echelon::rref() const {
  std::vector<SparseVector> out;
  if (field_.is_rational()) {
    for (const auto& row : std::get<0>(impl_->e).rref())
      out.push_back(convert_out(RatRing{}, row));
  } else {
    ModRing r{field_.characteristic()};
    for (const auto& row : std::get<1>(impl_->e).rref()) out.push_back(convert_out(r, row));
  }
  return out;
}

std::vector<uint32_t> Echelon::pivots() const {
  std::vector<uint32_t> out;
  std::visit(
      [&](const auto& e) {
        for (const auto& row : e.rows()) out.push_back(row.front().first);
      },
      impl_->e);
  std::sort(out.begin(), out.end());
  return out;
}

// --------------------------------------------------------------- Subspace

Subspace Subspace::span(Field field, size_t ambient,
                        const std::vector<SparseVector>& vectors) {
  Echelon e(field, ambient);
  for (const auto& v : vectors) e.insert(v);
  Subspace s(field, ambient);
  s.rows_ = e.rref();
  return s;
}

SparseMatrix Subspace::matrix() const {
  return SparseMatrix::from_columns(field_, ambient_, rows_).transpose();
}

bool Subspace::contains(const SparseVector& v) const {
  Echelon e(field_, ambient_);
  for (const auto& r : rows_) e.insert(r);
  return e.contains(v);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.field_ != field_ || other.ambient_ != ambient_)
    throw ShapeMismatch("subspaces of different spaces");
  Echelon e(field_, ambient_);
  for (const auto& r : rows_) e.insert(r);
  for (const auto& r : other.rows_)
    if (!e.contains(r)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.field_ != field_ || other.ambient_ != ambient_)
    throw ShapeMismatch("subspaces of different spaces");
  std::vector<SparseVector> all = rows_;
  all.insert(all.end(), other.rows_.begin(), other.rows_.end());
  return span(field_, ambient_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.field_ != field_ || other.ambient_ != ambient_)
    throw ShapeMismatch("subspaces of different spaces");
  // Kernel of [A^T | -B^T] gives coefficient pairs with sum a_i A_i = sum b_j B_j.
  std::vector<SparseVector> cols = rows_;
  for (const auto& r : other.rows_) {
    SparseVector n = r;
    for (auto& e : n) e.second = field_.neg(e.second);
    cols.push_back(std::move(n));
  }
  SparseMatrix m = SparseMatrix::from_columns(field_, ambient_, cols);
  Subspace k = kernel_basis(m);
  std::vector<SparseVector> vecs;
  for (const auto& coeffs : k.basis()) {
    SparseVector acc;
    for (const auto& [i, c] : coeffs)
      if (i < rows_.size()) acc = axpy(acc, c, rows_[i], field_);
    vecs.push_back(std::move(acc));
  }
  return span(field_, ambient_, vecs);
}

// ------------------------------------------------------------ free functions

size_t rank(const SparseMatrix& m) {
  EliminationInput in;
  if (m.cols() <= m.rows()) {
    in.ambient = m.rows();
    in.vectors = m.column_vectors();
  } else {
    in.ambient = m.cols();
    in.vectors = m.row_vectors();
  }
  return eliminate(m.field(), std::move(in)).second;
}

std::pair<size_t, size_t> rank_extension(const SparseMatrix& a, const SparseMatrix& s) {
  if (a.field() != s.field()) throw FieldMismatch("rank_extension across fields");
  if (a.rows() != s.rows()) throw ShapeMismatch("rank_extension row mismatch");
  EliminationInput in;
  if (a.cols() + s.cols() <= a.rows()) {
    in.ambient = a.rows();
    in.vectors = a.column_vectors();
    auto extra = s.column_vectors();
    in.vector_group.assign(in.vectors.size(), 0);
    in.vector_group.resize(in.vectors.size() + extra.size(), 1);
    for (auto& v : extra) in.vectors.push_back(std::move(v));
  } else {
    SparseMatrix both = hstack({a, s}, a.field(), a.rows());
    in.ambient = both.cols();
    in.vectors = both.row_vectors();
    in.index_group.assign(a.cols(), 0);
    in.index_group.resize(both.cols(), 1);
  }
  return eliminate(a.field(), std::move(in));
}

Subspace kernel_basis(const SparseMatrix& m) {
  Field f = m.field();
  Echelon e(f, m.cols());
  for (const auto& r : m.row_vectors()) e.insert(r);
  auto rref = e.rref();
  std::vector<int32_t> pivot_row(m.cols(), -1);
  for (size_t k = 0; k < rref.size(); ++k)
    pivot_row[rref[k].front().first] = static_cast<int32_t>(k);
  // Column-wise view of the non-pivot entries: free column -> (pivot row, value).
  std::vector<std::vector<std::pair<uint32_t, Rational>>> by_free(m.cols());
  for (size_t k = 0; k < rref.size(); ++k)
    for (size_t t = 1; t < rref[k].size(); ++t)
      by_free[rref[k][t].first].emplace_back(rref[k].front().first, rref[k][t].second);
  std::vector<SparseVector> vecs;
  for (uint32_t c = 0; c < m.cols(); ++c) {
    if (pivot_row[c] >= 0) continue;
    SparseVector v;
    for (const auto& [p, x] : by_free[c]) v.emplace_back(p, f.neg(x));
    v.emplace_back(c, Rational(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    vecs.push_back(std::move(v));
  }
  return Subspace::span(f, m.cols(), vecs);
}

Subspace image_basis(const SparseMatrix& m) {
  return Subspace::span(m.field(), m.rows(), m.column_vectors());
}

namespace {
void check_pair(const SparseMatrix& d_in, const SparseMatrix& d_out) {
  if (d_in.field() != d_out.field()) throw FieldMismatch("differentials over different fields");
  if (d_out.cols() != d_in.rows())
    throw ShapeMismatch("d_out has " + std::to_string(d_out.cols()) +
                        " columns but d_in has " + std::to_string(d_in.rows()) + " rows");
  if (!(d_out * d_in).is_zero()) throw NotAComplex("d_out * d_in is nonzero");
}
}  // namespace

size_t cohomology_dimension(const SparseMatrix& d_in, const SparseMatrix& d_out) {
  check_pair(d_in, d_out);
  return d_in.rows() - rank(d_out) - rank(d_in);
}

CohomologyData cohomology_at(const SparseMatrix& d_in, const SparseMatrix& d_out) {
  check_pair(d_in, d_out);
  Subspace z = kernel_basis(d_out);
  Echelon e(d_in.field(), d_in.rows());
  for (const auto& c : d_in.column_vectors()) e.insert(c);
  CohomologyData out;
  for (const auto& v : z.basis())
    if (e.insert(v)) out.representatives.push_back(v);
  out.dimension = out.representatives.size();
  return out;
}

// ---------------------------------------------------- QuotientCoordinates

QuotientCoordinates::QuotientCoordinates(Field field, size_t ambient,
                                         const std::vector<SparseVector>& boundaries,
                                         const std::vector<SparseVector>& representatives)
    : ambient_(ambient),
      count_(representatives.size()),
      echelon_(std::make_unique<Echelon>(field, ambient + representatives.size())) {
  for (const auto& b : boundaries) echelon_->insert(b);
  for (size_t i = 0; i < representatives.size(); ++i) {
    SparseVector v = representatives[i];
    v.emplace_back(static_cast<uint32_t>(ambient + i), Rational(1));
    if (!echelon_->insert(v))
      throw Error("representatives are dependent modulo boundaries");
  }
}

QuotientCoordinates::~QuotientCoordinates() = default;
QuotientCoordinates::QuotientCoordinates(QuotientCoordinates&&) noexcept = default;

std::optional<std::vector<Rational>> QuotientCoordinates::coordinates(
    const SparseVector& z) const {
  SparseVector r = echelon_->reduce(z);
  std::vector<Rational> c(count_);
  Field f = echelon_->field();
  for (const auto& [i, x] : r) {
    if (i < ambient_) return std::nullopt;
    c[i - ambient_] = f.neg(x);
  }
  return c;
}

}  // namespace hochkit
