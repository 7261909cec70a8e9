#include "hochkit/complexes.hpp"

#include <algorithm>

#include "hochkit/error.hpp"

namespace hochkit {

// ------------------------------------------------------------ CochainComplex

CochainComplex::CochainComplex(Field field, int lo, int hi)
    : field_(field), lo_(lo), hi_(std::max(hi, lo - 1)) {
  size_t n = static_cast<size_t>(hi_ - lo_ + 1);
  dims_.assign(n, 0);
  labels_.assign(n, {});
  for (size_t i = 0; i + 1 < n; ++i) diffs_.emplace_back(field, 0, 0);
}

size_t CochainComplex::dim(int n) const {
  if (n < lo_ || n > hi_) return 0;
  return dims_[slot(n)];
}

std::string CochainComplex::label(int n, size_t i) const {
  if (n >= lo_ && n <= hi_ && i < labels_[slot(n)].size()) return labels_[slot(n)][i];
  if (labeler_) return labeler_(n, i);
  return "e" + std::to_string(i);
}

std::vector<std::string> CochainComplex::labels(int n) const {
  std::vector<std::string> out;
  for (size_t i = 0; i < dim(n); ++i) out.push_back(label(n, i));
  return out;
}

SparseMatrix CochainComplex::d(int n) const {
  if (n >= lo_ && n < hi_) return diffs_[slot(n)];
  return SparseMatrix(field_, dim(n + 1), dim(n));
}

void CochainComplex::set_component(int n, size_t dim, std::vector<std::string> labels) {
  if (n < lo_ || n > hi_) throw ShapeMismatch("degree " + std::to_string(n) + " outside window");
  if (!labels.empty() && labels.size() != dim) throw ShapeMismatch("label count differs from dimension");
  dims_[slot(n)] = dim;
  labels_[slot(n)] = std::move(labels);
  if (n > lo_) diffs_[slot(n - 1)] = SparseMatrix(field_, dim, this->dim(n - 1));
  if (n < hi_) diffs_[slot(n)] = SparseMatrix(field_, this->dim(n + 1), dim);
}

void CochainComplex::set_differential(int n, SparseMatrix d) {
  if (d.field() != field_) throw FieldMismatch("differential over a different field");
  if (d.rows() != dim(n + 1) || d.cols() != dim(n))
    throw ShapeMismatch("differential d^" + std::to_string(n) + " has the wrong shape");
  if (n < lo_ || n >= hi_) {
    if (!d.is_zero()) throw ShapeMismatch("nonzero differential outside window");
    return;
  }
  diffs_[slot(n)] = std::move(d);
}

void CochainComplex::require_reliable(int n) const {
  if (!is_reliable(n))
    throw TruncationError("degree " + std::to_string(n) +
                          " lies outside the reliable range of a truncated complex");
}

size_t CochainComplex::total_dimension() const {
  size_t t = 0;
  for (size_t x : dims_) t += x;
  return t;
}

long CochainComplex::euler_characteristic() const {
  long chi = 0;
  for (int n = lo_; n <= hi_; ++n)
    chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(dim(n));
  return chi;
}

// ------------------------------------------------------------- cohomology

std::vector<int> check_complex(const CochainComplex& c) {
  std::vector<int> bad;
  for (int n = c.lo(); n + 1 < c.hi(); ++n)
    if (!(c.d(n + 1) * c.d(n)).is_zero()) bad.push_back(n);
  return bad;
}

CohomologyData cohomology(const CochainComplex& c, int n) {
  c.require_reliable(n);
  if (n < c.lo() || n > c.hi()) return {};
  return cohomology_at(c.d(n - 1), c.d(n));
}

size_t cohomology_dim(const CochainComplex& c, int n) {
  c.require_reliable(n);
  if (n < c.lo() || n > c.hi()) return 0;
  return cohomology_dimension(c.d(n - 1), c.d(n));
}

// ------------------------------------------------------------ constructions

CochainComplex shift(const CochainComplex& c, int k) {
  CochainComplex out(c.field(), c.lo() - k, c.hi() - k);
  for (int n = out.lo(); n <= out.hi(); ++n)
    out.set_component(n, c.dim(n + k), c.labels(n + k));
  for (int n = out.lo(); n < out.hi(); ++n)
    out.set_differential(n, k % 2 == 0 ? c.d(n + k) : c.d(n + k).scaled(Rational(-1)));
  auto lo = c.reliable_lo(), hi = c.reliable_hi();
  out.set_reliable(lo ? std::optional<int>(*lo - k) : std::nullopt,
                   hi ? std::optional<int>(*hi - k) : std::nullopt);
  return out;
}

size_t tensor_block_offset(const CochainComplex& c, const CochainComplex& d, int p, int q) {
  size_t offset = 0;
  for (int pp = c.lo(); pp < p; ++pp) offset += c.dim(pp) * d.dim(p + q - pp);
  return offset;
}

CochainComplex tensor(const CochainComplex& c, const CochainComplex& d) {
  if (c.field() != d.field()) throw FieldMismatch("tensor of complexes over different fields");
  Field f = c.field();
  CochainComplex out(f, c.lo() + d.lo(), c.hi() + d.hi());
  for (int n = out.lo(); n <= out.hi(); ++n) {
    std::vector<std::string> labels;
    for (int p = c.lo(); p <= c.hi(); ++p) {
      int q = n - p;
      for (size_t i = 0; i < c.dim(p); ++i)
        for (size_t j = 0; j < d.dim(q); ++j) labels.push_back(c.label(p, i) + "⊗" + d.label(q, j));
    }
    size_t count = labels.size();
    out.set_component(n, count, std::move(labels));
  }
  for (int n = out.lo(); n < out.hi(); ++n) {
    std::vector<Triplet> t;
    for (int p = c.lo(); p <= c.hi(); ++p) {
      int q = n - p;
      if (!c.dim(p) || !d.dim(q)) continue;
      size_t src = tensor_block_offset(c, d, p, q);
      size_t dst_c = tensor_block_offset(c, d, p + 1, q);
      size_t dst_d = tensor_block_offset(c, d, p, q + 1);
      SparseMatrix dc = c.d(p), dd = d.d(q);
      size_t nq = d.dim(q), nq1 = d.dim(q + 1);
      Rational sign(p % 2 == 0 ? 1 : -1);
      for (size_t i = 0; i < c.dim(p); ++i) {
        for (size_t j = 0; j < nq; ++j) {
          uint32_t col = static_cast<uint32_t>(src + i * nq + j);
          for (const auto& [r, v] : dc.column(i))
            t.push_back({static_cast<uint32_t>(dst_c + r * nq + j), col, v});
          for (const auto& [r, v] : dd.column(j))
            t.push_back({static_cast<uint32_t>(dst_d + i * nq1 + r), col, f.mul(sign, v)});
        }
      }
    }
    out.set_differential(n, SparseMatrix::from_triplets(f, out.dim(n + 1), out.dim(n), std::move(t)));
  }
  // Degree n is built correctly when every pair p + q = n is; cohomology at
  // n needs n + 1 as well.
  std::optional<int> complete_hi, complete_lo;
  auto tighten_hi = [&](int v) { complete_hi = complete_hi ? std::min(*complete_hi, v) : v; };
  auto tighten_lo = [&](int v) { complete_lo = complete_lo ? std::max(*complete_lo, v) : v; };
  if (c.reliable_hi()) tighten_hi(*c.reliable_hi() + 1 + d.lo());
  if (d.reliable_hi()) tighten_hi(c.lo() + *d.reliable_hi() + 1);
  if (c.reliable_lo()) tighten_lo(*c.reliable_lo() - 1 + d.hi());
  if (d.reliable_lo()) tighten_lo(c.hi() + *d.reliable_lo() - 1);
  out.set_reliable(complete_lo ? std::optional<int>(*complete_lo + 1) : std::nullopt,
                   complete_hi ? std::optional<int>(*complete_hi - 1) : std::nullopt);
  return out;
}

CochainComplex hom_complex(const CochainComplex& c, const CochainComplex& d) {
  if (c.field() != d.field()) throw FieldMismatch("hom of complexes over different fields");
  if (c.reliable_lo() || c.reliable_hi() || d.reliable_lo() || d.reliable_hi())
    throw TruncationError("hom_complex needs untruncated complexes");
  Field f = c.field();
  CochainComplex out(f, d.lo() - c.hi(), d.hi() - c.lo());
  auto offset = [&](int n, int i) {
    size_t o = 0;
    for (int ii = c.lo(); ii < i; ++ii) o += c.dim(ii) * d.dim(ii + n);
    return o;
  };
  for (int n = out.lo(); n <= out.hi(); ++n) {
    std::vector<std::string> labels;
    for (int i = c.lo(); i <= c.hi(); ++i)
      for (size_t a = 0; a < c.dim(i); ++a)
        for (size_t b = 0; b < d.dim(i + n); ++b)
          labels.push_back("f[" + c.label(i, a) + "→" + d.label(i + n, b) + "]");
    size_t count = labels.size();
    out.set_component(n, count, std::move(labels));
  }
  for (int n = out.lo(); n < out.hi(); ++n) {
    std::vector<Triplet> t;
    Rational sign((n + 1) % 2 == 0 ? 1 : -1);
    for (int i = c.lo(); i <= c.hi(); ++i) {
      size_t tgt_dim = d.dim(i + n);
      if (!c.dim(i) || !tgt_dim) continue;
      SparseMatrix dd = d.d(i + n);
      auto dc_rows = c.d(i - 1).row_vectors();
      size_t src = offset(n, i);
      size_t dst_post = offset(n + 1, i);
      size_t dst_pre = offset(n + 1, i - 1);
      size_t post_dim = d.dim(i + n + 1);
      for (size_t a = 0; a < c.dim(i); ++a) {
        for (size_t b = 0; b < tgt_dim; ++b) {
          uint32_t col = static_cast<uint32_t>(src + a * tgt_dim + b);
          // d_d o E_{b,a}
          for (const auto& [b2, v] : dd.column(b))
            t.push_back({static_cast<uint32_t>(dst_post + a * post_dim + b2), col, v});
          // E_{b,a} o d_c, landing in Hom(c^{i-1}, d^{i+n})
          if (i - 1 >= c.lo())
            for (const auto& [a2, v] : dc_rows[a])
              t.push_back({static_cast<uint32_t>(dst_pre + a2 * tgt_dim + b), col, f.mul(sign, v)});
        }
      }
    }
    out.set_differential(n, SparseMatrix::from_triplets(f, out.dim(n + 1), out.dim(n), std::move(t)));
  }
  return out;
}

// ------------------------------------------------------------- chain maps

SparseMatrix ChainMap::at(int n) const {
  auto it = maps.find(n);
  if (it != maps.end()) return it->second;
  return SparseMatrix(source->field(), target->dim(n + degree), source->dim(n));
}

ChainMap identity_map(std::shared_ptr<const CochainComplex> c) {
  ChainMap f{c, c, 0, {}};
  for (int n = c->lo(); n <= c->hi(); ++n)
    f.maps[n] = SparseMatrix::identity(c->field(), c->dim(n));
  return f;
}

std::vector<int> check_chain_map(const ChainMap& f) {
  std::vector<int> bad;
  const auto& s = *f.source;
  const auto& t = *f.target;
  for (int n = s.lo() - 1; n <= s.hi(); ++n) {
    SparseMatrix lhs = t.d(n + f.degree) * f.at(n);
    SparseMatrix rhs = f.at(n + 1) * s.d(n);
    if (lhs != rhs) bad.push_back(n);
  }
  return bad;
}

CochainComplex cone(const ChainMap& f) {
  if (f.degree != 0) throw InvalidChainMap("cone needs a degree-zero chain map");
  if (!check_chain_map(f).empty()) throw InvalidChainMap("map does not commute with differentials");
  const auto& s = *f.source;
  const auto& t = *f.target;
  Field fld = s.field();
  CochainComplex out(fld, std::min(s.lo() - 1, t.lo()), std::max(s.hi() - 1, t.hi()));
  for (int n = out.lo(); n <= out.hi(); ++n) {
    std::vector<std::string> labels;
    for (const auto& l : s.labels(n + 1)) labels.push_back("s[" + l + "]");
    for (const auto& l : t.labels(n)) labels.push_back("t[" + l + "]");
    size_t count = labels.size();
    out.set_component(n, count, std::move(labels));
  }
  for (int n = out.lo(); n < out.hi(); ++n) {
    size_t s1 = s.dim(n + 1), s2 = s.dim(n + 2);
    std::vector<Triplet> trip;
    for (const auto& e : s.d(n + 1).triplets()) trip.push_back({e.row, e.col, fld.neg(e.value)});
    for (const auto& e : f.at(n + 1).triplets())
      trip.push_back({static_cast<uint32_t>(s2 + e.row), e.col, e.value});
    for (const auto& e : t.d(n).triplets())
      trip.push_back({static_cast<uint32_t>(s2 + e.row), static_cast<uint32_t>(s1 + e.col), e.value});
    out.set_differential(n, SparseMatrix::from_triplets(fld, out.dim(n + 1), out.dim(n), std::move(trip)));
  }
  std::optional<int> lo, hi;
  if (s.reliable_lo()) lo = *s.reliable_lo() - 1;
  if (t.reliable_lo()) lo = lo ? std::max(*lo, *t.reliable_lo()) : *t.reliable_lo();
  if (s.reliable_hi()) hi = *s.reliable_hi() - 1;
  if (t.reliable_hi()) hi = hi ? std::min(*hi, *t.reliable_hi()) : *t.reliable_hi();
  out.set_reliable(lo, hi);
  return out;
}

SparseMatrix induced_map_on_cohomology(const ChainMap& f, int n) {
  const auto& s = *f.source;
  const auto& t = *f.target;
  Field fld = s.field();
  int m = n + f.degree;
  CohomologyData hs = cohomology(s, n);
  CohomologyData ht = cohomology(t, m);
  SparseMatrix fn = f.at(n);
  SparseMatrix dt = t.d(m);
  QuotientCoordinates qc(fld, t.dim(m), t.d(m - 1).column_vectors(), ht.representatives);
  std::vector<Triplet> trip;
  for (size_t j = 0; j < hs.representatives.size(); ++j) {
    SparseVector img = fn.apply(hs.representatives[j]);
    if (!dt.apply(img).empty()) throw InvalidChainMap("image of a cocycle is not a cocycle");
    auto c = qc.coordinates(img);
    if (!c) throw InvalidChainMap("image of a cocycle has no cohomology coordinates");
    for (size_t i = 0; i < c->size(); ++i)
      if (!(*c)[i].is_zero()) trip.push_back({static_cast<uint32_t>(i), static_cast<uint32_t>(j), (*c)[i]});
  }
  for (const auto& b : s.d(n - 1).column_vectors()) {
    auto c = qc.coordinates(fn.apply(b));
    if (!c || std::any_of(c->begin(), c->end(), [](const Rational& x) { return !x.is_zero(); }))
      throw InvalidChainMap("image of a coboundary is not a coboundary");
  }
  return SparseMatrix::from_triplets(fld, ht.dimension, hs.dimension, std::move(trip));
}

}  // namespace hochkit
