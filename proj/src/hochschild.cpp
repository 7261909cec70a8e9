#include "hochkit/hochschild.hpp"

#include <algorithm>
#include <numeric>

#include "hochkit/error.hpp"
#include "sign.hpp"

namespace hochkit {

namespace {

constexpr uint64_t kMaxCells = 40'000'000;

void check_caps(const DgAlgebra& a, const HochschildOptions& options) {
  if (a.dim() > 16 && !options.allow_large)
    throw CapExceeded("algebra of dimension " + std::to_string(a.dim()) +
                      " exceeds the cap of 16 (use allow_large to override)");
}

// Letters of Ā must have degree <= 0 for each total degree to be finite.
void check_finite(const BarBasis& bar) {
  for (size_t l = 0; l < bar.letters(); ++l)
    if (bar.letter_degree(l) > 0)
      throw TruncationError("bar letters of positive degree make total degrees infinite");
}

// proj(x y) restricted to letters.
std::vector<std::pair<uint32_t, Rational>> letter_product(const BarBasis& bar, uint32_t x, uint32_t y) {
  std::vector<std::pair<uint32_t, Rational>> out;
  for (const auto& [k, c] : bar.algebra().product(bar.letter_index(x), bar.letter_index(y))) {
    int32_t l = bar.letter_of(k);
    if (l >= 0) out.emplace_back(static_cast<uint32_t>(l), c);
  }
  return out;
}

std::vector<std::pair<uint32_t, Rational>> letter_differential(const BarBasis& bar, uint32_t x) {
  std::vector<std::pair<uint32_t, Rational>> out;
  for (const auto& [k, c] : bar.algebra().differential(bar.letter_index(x))) {
    int32_t l = bar.letter_of(k);
    if (l >= 0) out.emplace_back(static_cast<uint32_t>(l), c);
  }
  return out;
}

struct Factorization {
  uint32_t x, y;
  Rational coeff;
};

// For each letter l, all (x, y, c) with proj(x y) = c l + ...
std::vector<std::vector<Factorization>> factorizations(const BarBasis& bar) {
  std::vector<std::vector<Factorization>> out(bar.letters());
  for (uint32_t x = 0; x < bar.letters(); ++x)
    for (uint32_t y = 0; y < bar.letters(); ++y)
      for (const auto& [l, c] : letter_product(bar, x, y)) out[l].push_back({x, y, c});
  return out;
}

// For each letter l, all (x, c) with proj(dx) = c l + ...
std::vector<std::vector<std::pair<uint32_t, Rational>>> differential_preimages(const BarBasis& bar) {
  std::vector<std::vector<std::pair<uint32_t, Rational>>> out(bar.letters());
  for (uint32_t x = 0; x < bar.letters(); ++x)
    for (const auto& [l, c] : letter_differential(bar, x)) out[l].emplace_back(x, c);
  return out;
}

// Enumerates level-n words with their letter degree sums.
template <class F>
void for_each_word(const BarBasis& bar, int n, F&& f) {
  uint64_t count = bar.count(n);
  std::vector<uint32_t> digits(static_cast<size_t>(n), 0);
  int sum = n * (bar.letters() ? bar.letter_degree(0) : 0);
  for (uint64_t w = 0; w < count; ++w) {
    f(w, sum);
    for (int i = n - 1; i >= 0; --i) {
      size_t k = static_cast<size_t>(i);
      sum -= bar.letter_degree(digits[k]);
      if (++digits[k] < bar.letters()) {
        sum += bar.letter_degree(digits[k]);
        break;
      }
      digits[k] = 0;
      sum += bar.letter_degree(0);
    }
  }
}

template <class DegreeOf>
BarLayout build_layout(const BarBasis& bar, int max_level, int lo, int hi, DegreeOf degree_of) {
  const DgAlgebra& a = bar.algebra();
  BarLayout layout(lo, hi);
  uint64_t total = 0;
  for (int n = 0; n <= max_level; ++n) {
    total += bar.count(n) * a.dim();
    if (total > kMaxCells) throw CapExceeded("bar complex exceeds " + std::to_string(kMaxCells) + " cells");
    std::vector<std::vector<uint64_t>> keys(static_cast<size_t>(hi - lo + 1));
    for_each_word(bar, n, [&](uint64_t w, int letter_sum) {
      for (uint32_t e = 0; e < a.dim(); ++e) {
        int t = degree_of(n, letter_sum, a.degree(e));
        if (t < lo || t > hi) continue;
        keys[static_cast<size_t>(t - lo)].push_back(w * a.dim() + e);
      }
    });
    for (int t = lo; t <= hi; ++t) {
      auto& k = keys[static_cast<size_t>(t - lo)];
      if (k.empty()) continue;
      auto& runs = layout.runs(t);
      size_t offset = runs.empty() ? 0 : runs.back().offset + runs.back().keys.size();
      runs.push_back({n, offset, std::move(k)});
    }
  }
  return layout;
}

std::string cochain_label(const BarBasis& bar, const BarCell& c) {
  return "f[" + bar.word_label(c.word, c.level) + "→" + bar.algebra().label(c.element) + "]";
}

std::string chain_label(const BarBasis& bar, const BarCell& c) {
  if (c.level == 0) return bar.algebra().label(c.element);
  return bar.algebra().label(c.element) + "[" + bar.word_label(c.word, c.level) + "]";
}

void require_level(int n_max) {
  if (n_max < 2) throw TruncationError("bar truncation level must be at least 2");
}

}  // namespace

// ------------------------------------------------------------------ BarBasis

BarBasis::BarBasis(std::shared_ptr<const DgAlgebra> algebra, bool reduced)
    : algebra_(std::move(algebra)), reduced_(reduced), index_to_letter_(algebra_->dim(), -1) {
  for (uint32_t i = 0; i < algebra_->dim(); ++i) {
    if (reduced_ && i == algebra_->unit()) continue;
    index_to_letter_[i] = static_cast<int32_t>(letter_to_index_.size());
    letter_to_index_.push_back(i);
  }
}

uint64_t BarBasis::count(int n) const {
  uint64_t c = 1;
  for (int i = 0; i < n; ++i) {
    c *= letters();
    if (c > (uint64_t{1} << 32)) throw CapExceeded("bar level too large");
  }
  return c;
}

std::vector<uint32_t> BarBasis::decode(uint64_t word, int n) const {
  std::vector<uint32_t> out(static_cast<size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    out[static_cast<size_t>(i)] = static_cast<uint32_t>(word % letters());
    word /= letters();
  }
  return out;
}

uint64_t BarBasis::encode(const std::vector<uint32_t>& word) const {
  uint64_t w = 0;
  for (uint32_t l : word) w = w * letters() + l;
  return w;
}

std::string BarBasis::word_label(uint64_t word, int n) const {
  std::string out;
  auto letters = decode(word, n);
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) out += "|";
    out += algebra_->label(letter_to_index_[letters[i]]);
  }
  return out;
}

// ----------------------------------------------------------------- BarLayout

size_t BarLayout::dim(int degree) const {
  if (degree < lo() || degree > hi()) return 0;
  const auto& r = runs(degree);
  return r.empty() ? 0 : r.back().offset + r.back().keys.size();
}

BarCell BarLayout::cell(int degree, size_t index, size_t algebra_dim) const {
  for (const auto& run : runs(degree))
    if (index < run.offset + run.keys.size()) {
      uint64_t key = run.keys[index - run.offset];
      return {run.level, key / algebra_dim, static_cast<uint32_t>(key % algebra_dim)};
    }
  throw ShapeMismatch("cell index out of range");
}

int64_t BarLayout::position(int degree, int level, uint64_t key) const {
  if (degree < lo() || degree > hi()) return -1;
  for (const auto& run : runs(degree)) {
    if (run.level != level) continue;
    const auto& k = run.keys;
    if (key < k.size() && k[key] == key) return static_cast<int64_t>(run.offset + key);
    auto it = std::lower_bound(k.begin(), k.end(), key);
    if (it == k.end() || *it != key) return -1;
    return static_cast<int64_t>(run.offset + static_cast<size_t>(it - k.begin()));
  }
  return -1;
}

// ------------------------------------------------------------------ cochains

int HochschildCochainComplex::internal_degree(const BarCell& c) const {
  int sum = 0;
  for (uint32_t l : bar->decode(c.word, c.level)) sum += bar->letter_degree(l);
  return algebra->degree(c.element) - sum;
}

HochschildCochainComplex hochschild_cochain_complex(const DgAlgebra& a_in, int n_max,
                                                    HochschildOptions options) {
  require_level(n_max);
  check_caps(a_in, options);
  require_valid(a_in);
  auto a = std::make_shared<DgAlgebra>(a_in);
  auto bar = std::make_shared<BarBasis>(a, options.reduced);
  check_finite(*bar);
  Field f = a->field();
  const int min_deg = a->min_degree();
  const int lo = min_deg, hi = n_max + min_deg;
  HochschildCochainComplex out{a, bar, n_max, {}, {}};
  out.layout = build_layout(*bar, n_max, lo, hi,
                            [](int n, int letter_sum, int value_deg) { return n + value_deg - letter_sum; });
  const BarLayout& layout = out.layout;
  const size_t dim_a = a->dim();
  const size_t letters = bar->letters();

  CochainComplex c(f, lo, hi);
  for (int t = lo; t <= hi; ++t) c.set_component(t, layout.dim(t));
  c.set_labeler([bar, lay = std::make_shared<BarLayout>(layout), dim_a](int t, size_t i) {
    return cochain_label(*bar, lay->cell(t, i, dim_a));
  });

  auto factors = factorizations(*bar);
  auto dpre = differential_preimages(*bar);
  // Letter index of each algebra basis element paired with its degree.
  std::vector<int> letter_deg(letters);
  for (size_t l = 0; l < letters; ++l) letter_deg[l] = bar->letter_degree(l);

  for (int t = lo; t < hi; ++t) {
    ColumnBuilder cb(f, layout.dim(t + 1));
    auto put = [&](int level, uint64_t word, uint32_t element, const Rational& v) {
      int64_t pos = layout.position(t + 1, level, word * dim_a + element);
      if (pos < 0) throw Error("cochain differential leaves the constructed layout");
      cb.add(static_cast<uint32_t>(pos), v);
    };
    for (const auto& run : layout.runs(t)) {
      const int n = run.level;
      const uint64_t lift = bar->count(n);  // letters^n, weight of a prefix letter
      for (uint64_t key : run.keys) {
        const uint64_t word = key / dim_a;
        const uint32_t value = static_cast<uint32_t>(key % dim_a);
        std::vector<uint32_t> b = bar->decode(word, n);
        int letter_sum = 0;
        for (uint32_t l : b) letter_sum += letter_deg[l];
        const long total = a->degree(value) - letter_sum + n;
        const Rational raise = koszul_sign(n + 1);
        if (n + 1 <= n_max) {
          for (uint32_t y = 0; y < letters; ++y) {
            uint32_t yi = bar->letter_index(y);
            Rational s = f.neg(f.mul(raise, koszul_sign(total * (letter_deg[y] - 1))));
            for (const auto& [k, v] : a->product(yi, value)) put(n + 1, y * lift + word, k, f.mul(s, v));
            Rational r = f.mul(raise, koszul_sign(total + letter_sum - n));
            for (const auto& [k, v] : a->product(value, yi)) put(n + 1, word * letters + y, k, f.mul(r, v));
          }
          long shifted = 0;
          for (int i = 0; i < n; ++i) {
            size_t pos = static_cast<size_t>(i);
            for (const auto& fac : factors[b[pos]]) {
              std::vector<uint32_t> w(b.begin(), b.begin() + i);
              w.push_back(fac.x);
              w.push_back(fac.y);
              w.insert(w.end(), b.begin() + i + 1, b.end());
              Rational s = f.neg(f.mul(raise, koszul_sign(total + shifted + letter_deg[fac.x] - 1)));
              put(n + 1, bar->encode(w), value, f.mul(s, fac.coeff));
            }
            shifted += letter_deg[b[pos]] - 1;
          }
        }
        for (const auto& [k, v] : a->differential(value)) put(n, word, k, v);
        long shifted = 0;
        for (int i = 0; i < n; ++i) {
          size_t pos = static_cast<size_t>(i);
          Rational s = koszul_sign(total + shifted);
          for (const auto& [x, v] : dpre[b[pos]]) {
            std::vector<uint32_t> w = b;
            w[pos] = x;
            put(n, bar->encode(w), value, f.mul(s, v));
          }
          shifted += letter_deg[b[pos]] - 1;
        }
        cb.finish_column();
      }
    }
    c.set_differential(t, std::move(cb).build());
  }
  c.set_reliable(std::nullopt, hi - 1);
  out.complex = std::move(c);
  return out;
}

// -------------------------------------------------------------------- chains

HochschildChainComplex hochschild_chain_complex(const DgAlgebra& a_in, int n_max, HochschildOptions options) {
  require_level(n_max);
  check_caps(a_in, options);
  require_valid(a_in);
  auto a = std::make_shared<DgAlgebra>(a_in);
  auto bar = std::make_shared<BarBasis>(a, options.reduced);
  check_finite(*bar);
  Field f = a->field();
  const int max_deg = a->max_degree();
  const int lo = max_deg - n_max, hi = max_deg;
  HochschildChainComplex out{a, bar, n_max, {}, {}};
  out.layout = build_layout(*bar, n_max, lo, hi,
                            [](int n, int letter_sum, int a0_deg) { return a0_deg + letter_sum - n; });
  const BarLayout& layout = out.layout;
  const size_t dim_a = a->dim();
  const size_t letters = bar->letters();
  std::vector<int> letter_deg(letters);
  for (size_t l = 0; l < letters; ++l) letter_deg[l] = bar->letter_degree(l);

  CochainComplex c(f, lo, hi);
  for (int t = lo; t <= hi; ++t) c.set_component(t, layout.dim(t));
  c.set_labeler([bar, lay = std::make_shared<BarLayout>(layout), dim_a](int t, size_t i) {
    return chain_label(*bar, lay->cell(t, i, dim_a));
  });

  for (int t = lo; t < hi; ++t) {
    ColumnBuilder cb(f, layout.dim(t + 1));
    auto put = [&](int level, const std::vector<uint32_t>& w, uint32_t element, const Rational& v) {
      int64_t pos = layout.position(t + 1, level, bar->encode(w) * dim_a + element);
      if (pos < 0) throw Error("chain differential leaves the constructed layout");
      cb.add(static_cast<uint32_t>(pos), v);
    };
    for (const auto& run : layout.runs(t)) {
      const int n = run.level;
      for (uint64_t key : run.keys) {
        const uint64_t word = key / dim_a;
        const uint32_t a0 = static_cast<uint32_t>(key % dim_a);
        std::vector<uint32_t> w = bar->decode(word, n);
        const long a0_deg = a->degree(a0);
        if (n >= 1) {
          std::vector<uint32_t> tail(w.begin() + 1, w.end());
          Rational s0 = koszul_sign(a0_deg);
          for (const auto& [k, v] : a->product(a0, bar->letter_index(w[0]))) put(n - 1, tail, k, f.mul(s0, v));
          long shifted = 0;
          for (int i = 0; i + 1 < n; ++i) {
            size_t p = static_cast<size_t>(i);
            Rational s = koszul_sign(a0_deg + shifted + letter_deg[w[p]] - 1);
            for (const auto& [l, v] : letter_product(*bar, w[p], w[p + 1])) {
              std::vector<uint32_t> m(w.begin(), w.begin() + i);
              m.push_back(l);
              m.insert(m.end(), w.begin() + i + 2, w.end());
              put(n - 1, m, a0, f.mul(s, v));
            }
            shifted += letter_deg[w[p]] - 1;
          }
          // a_n moves to the front
          Rational s = f.neg(koszul_sign((letter_deg[w.back()] - 1) * (a0_deg + shifted)));
          std::vector<uint32_t> head(w.begin(), w.end() - 1);
          for (const auto& [k, v] : a->product(bar->letter_index(w.back()), a0)) put(n - 1, head, k, f.mul(s, v));
        }
        for (const auto& [k, v] : a->differential(a0)) put(n, w, k, v);
        long shifted = 0;
        for (int i = 0; i < n; ++i) {
          size_t p = static_cast<size_t>(i);
          Rational s = f.neg(koszul_sign(a0_deg + shifted));
          for (const auto& [l, v] : letter_differential(*bar, w[p])) {
            std::vector<uint32_t> m = w;
            m[p] = l;
            put(n, m, a0, f.mul(s, v));
          }
          shifted += letter_deg[w[p]] - 1;
        }
        cb.finish_column();
      }
    }
    c.set_differential(t, std::move(cb).build());
  }
  c.set_reliable(lo + 1, std::nullopt);
  out.complex = std::move(c);
  return out;
}

std::vector<size_t> hh_cohomology_dims(const DgAlgebra& a, int n_max, HochschildOptions options) {
  if (n_max < 1) return {};
  int level = std::max(2, n_max - a.min_degree());
  auto c = hochschild_cochain_complex(a, level, options);
  std::vector<size_t> out;
  for (int n = 0; n < n_max; ++n) out.push_back(cohomology_dim(c.complex, n));
  return out;
}

std::vector<size_t> hh_homology_dims(const DgAlgebra& a, int n_max, HochschildOptions options) {
  if (n_max < 1) return {};
  int level = std::max(2, n_max + a.max_degree());
  auto c = hochschild_chain_complex(a, level, options);
  std::vector<size_t> out;
  for (int n = 0; n < n_max; ++n) out.push_back(cohomology_dim(c.complex, -n));
  return out;
}

// ----------------------------------------------------------------------- cup

SparseVector cup_product(const HochschildCochainComplex& c, int p, const SparseVector& fv, int q,
                         const SparseVector& gv) {
  const DgAlgebra& a = *c.algebra;
  Field f = a.field();
  const size_t dim_a = a.dim();
  const int t = p + q;
  if (t > c.layout.hi()) throw TruncationError("cup product degree beyond the constructed complex");
  SparseVector out;
  for (const auto& [i, x] : fv) {
    BarCell cf = c.layout.cell(p, i, dim_a);
    auto wf = c.bar->decode(cf.word, cf.level);
    int letter_sum = 0;
    for (uint32_t l : wf) letter_sum += c.bar->letter_degree(l);
    for (const auto& [j, y] : gv) {
      BarCell cg = c.layout.cell(q, j, dim_a);
      int level = cf.level + cg.level;
      if (level > c.level) throw TruncationError("cup product level beyond the constructed complex");
      long gtotal = c.internal_degree(cg) + cg.level;
      auto w = wf;
      auto wg = c.bar->decode(cg.word, cg.level);
      w.insert(w.end(), wg.begin(), wg.end());
      uint64_t word = c.bar->encode(w);
      long sign = static_cast<long>(cf.level) * cg.level + gtotal * (letter_sum - cf.level);
      Rational s = f.mul(koszul_sign(sign), f.mul(x, y));
      for (const auto& [k, v] : a.product(cf.element, cg.element)) {
        int64_t pos = c.layout.position(t, level, word * dim_a + k);
        if (pos < 0) throw TruncationError("cup product leaves the constructed complex");
        out.emplace_back(static_cast<uint32_t>(pos), f.mul(s, v));
      }
    }
  }
  canonicalize(out, f);
  return out;
}

SparseVector unit_cochain(const HochschildCochainComplex& c) {
  int64_t pos = c.layout.position(0, 0, c.algebra->unit());
  if (pos < 0) throw Error("unit cochain missing");
  return {{static_cast<uint32_t>(pos), Rational(1)}};
}

// ------------------------------------------------------------------- shuffle

SparseVector shuffle_cells(const HochschildChainComplex& product, const HochschildChainComplex& left,
                           const HochschildChainComplex& right, const BarCell& x, const BarCell& y) {
  const BarBasis& bar = *product.bar;
  const BarBasis& bar_a = *left.bar;
  const BarBasis& bar_b = *right.bar;
  const DgAlgebra& a = *left.algebra;
  const DgAlgebra& b = *right.algebra;
  Field f = a.field();
  const size_t db = b.dim();
  const size_t dim_ab = product.algebra->dim();
  auto wa = bar_a.decode(x.word, x.level);
  auto wb = bar_b.decode(y.word, y.level);
  // Letters of A⊗B for a_i⊗1 and 1⊗b_j, with shifted parities.
  std::vector<uint32_t> la, lb;
  std::vector<int> pa, pb;
  long a_shifted = 0;
  int letter_sum = 0;
  for (uint32_t l : wa) {
    uint32_t idx = bar_a.letter_index(l);
    la.push_back(static_cast<uint32_t>(bar.letter_of(idx * db + b.unit())));
    pa.push_back((a.degree(idx) + 1) & 1);
    a_shifted += a.degree(idx) + 1;
    letter_sum += a.degree(idx);
  }
  for (uint32_t l : wb) {
    uint32_t idx = bar_b.letter_index(l);
    lb.push_back(static_cast<uint32_t>(bar.letter_of(a.unit() * db + idx)));
    pb.push_back((b.degree(idx) + 1) & 1);
    letter_sum += b.degree(idx);
  }
  const int p = x.level, q = y.level;
  const int level = p + q;
  const int t = product.algebra->degree(x.element * db + y.element) + letter_sum - level;
  // Elementary a0⊗b0 sign: b0 moves past the a letters.
  Rational base = koszul_sign(static_cast<long>(b.degree(y.element)) * a_shifted);
  SparseVector out;
  std::vector<uint32_t> word(static_cast<size_t>(level));
  auto emit = [&](const std::vector<int>& is_a) {
    int sign_exp = 0;
    int ia = 0, ib = 0;
    int b_seen_parity = 0;
    for (int k = 0; k < level; ++k) {
      size_t kk = static_cast<size_t>(k);
      if (is_a[kk]) {
        // a letter jumps over the b letters already placed
        sign_exp += pa[static_cast<size_t>(ia)] * b_seen_parity;
        word[kk] = la[static_cast<size_t>(ia++)];
      } else {
        b_seen_parity = (b_seen_parity + pb[static_cast<size_t>(ib)]) & 1;
        word[kk] = lb[static_cast<size_t>(ib++)];
      }
    }
    int64_t pos = product.layout.position(t, level, bar.encode(word) * dim_ab + x.element * db + y.element);
    if (pos < 0) throw TruncationError("shuffle lands outside the constructed chain complex");
    out.emplace_back(static_cast<uint32_t>(pos), f.mul(base, koszul_sign(sign_exp)));
  };
  // (p,q)-shuffles as the positions of the a letters
  std::vector<int> is_a(static_cast<size_t>(level), 0);
  std::fill(is_a.end() - p, is_a.end(), 1);
  do {
    emit(is_a);
  } while (std::next_permutation(is_a.begin(), is_a.end()));
  canonicalize(out, f);
  return out;
}

ShuffleMap shuffle_map(const DgAlgebra& a, const DgAlgebra& b, int n_max, HochschildOptions options) {
  auto left = std::make_shared<HochschildChainComplex>(hochschild_chain_complex(a, n_max, options));
  auto right = std::make_shared<HochschildChainComplex>(hochschild_chain_complex(b, n_max, options));
  auto product = std::make_shared<HochschildChainComplex>(
      hochschild_chain_complex(tensor_algebras(a, b), n_max, options));
  auto source = std::make_shared<CochainComplex>(tensor(left->complex, right->complex));
  auto target = std::shared_ptr<const CochainComplex>(product, &product->complex);
  ShuffleMap out{left, right, product, ChainMap{source, target, 0, {}}};
  const CochainComplex& lc = left->complex;
  const CochainComplex& rc = right->complex;
  Field f = a.field();
  for (int t = std::max(source->lo(), target->lo()); t <= std::min(source->hi(), target->hi()); ++t) {
    ColumnBuilder cb(f, target->dim(t));
    for (int p = lc.lo(); p <= lc.hi(); ++p) {
      int q = t - p;
      for (size_t i = 0; i < lc.dim(p); ++i) {
        BarCell x = left->layout.cell(p, i, a.dim());
        for (size_t j = 0; j < rc.dim(q); ++j) {
          BarCell y = right->layout.cell(q, j, b.dim());
          for (const auto& [r, v] : shuffle_cells(*product, *left, *right, x, y)) cb.add(r, v);
          cb.finish_column();
        }
      }
    }
    out.map.maps[t] = std::move(cb).build();
  }
  return out;
}

// ------------------------------------------------------------------- reports

bool KunnethReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const DegreeCheck& c) { return c.pass; }) &&
         std::all_of(witnesses.begin(), witnesses.end(), [](const auto& w) { return w.second; });
}

namespace {

std::vector<long> convolve(const std::vector<size_t>& x, const std::vector<size_t>& y, int max_degree) {
  std::vector<long> out(static_cast<size_t>(max_degree + 1), 0);
  for (int n = 0; n <= max_degree; ++n)
    for (int p = 0; p <= n; ++p)
      out[static_cast<size_t>(n)] += static_cast<long>(x[static_cast<size_t>(p)] * y[static_cast<size_t>(n - p)]);
  return out;
}

}  // namespace

KunnethReport kunneth_check_cohomology(const DgAlgebra& a, const DgAlgebra& b, int max_degree,
                                       HochschildOptions options) {
  KunnethReport r{"kunneth-hh", {}, {}};
  auto ha = hh_cohomology_dims(a, max_degree + 1, options);
  auto hb = hh_cohomology_dims(b, max_degree + 1, options);
  auto hab = hh_cohomology_dims(tensor_algebras(a, b), max_degree + 1, options);
  auto conv = convolve(ha, hb, max_degree);
  for (int n = 0; n <= max_degree; ++n) {
    long actual = static_cast<long>(hab[static_cast<size_t>(n)]);
    long expected = conv[static_cast<size_t>(n)];
    r.checks.push_back({n, expected, actual, expected == actual});
  }
  return r;
}

KunnethReport kunneth_check_homology(const DgAlgebra& a, const DgAlgebra& b, int max_degree,
                                     HochschildOptions options) {
  KunnethReport r{"kunneth-hh-homology", {}, {}};
  const int level = max_degree + 1 + std::max(a.max_degree() + b.max_degree(), 0);
  ShuffleMap sh = shuffle_map(a, b, level, options);
  const CochainComplex& lc = sh.left->complex;
  const CochainComplex& rc = sh.right->complex;
  const CochainComplex& pc = sh.product->complex;
  Field f = a.field();

  // Chain-map identity in the range where both sides are complete.
  bool commutes = true;
  for (int t = -max_degree - 1; t < 0; ++t) {
    if (pc.d(t) * sh.map.at(t) != sh.map.at(t + 1) * sh.map.source->d(t)) commutes = false;
  }
  r.witnesses.emplace_back("shuffle is a chain map", commutes);

  bool cycles = true, injective = true;
  for (int n = 0; n <= max_degree; ++n) {
    const int t = -n;
    long expected = 0;
    std::vector<SparseVector> images;
    for (int p = 0; p <= n; ++p) {
      int q = n - p;
      CohomologyData hp = cohomology(lc, -p);
      CohomologyData hq = cohomology(rc, -q);
      expected += static_cast<long>(hp.dimension * hq.dimension);
      size_t offset = tensor_block_offset(lc, rc, -p, -q);
      size_t dq = rc.dim(-q);
      for (const auto& x : hp.representatives)
        for (const auto& y : hq.representatives) {
          SparseVector xy;
          for (const auto& [i, u] : x)
            for (const auto& [j, v] : y) xy.emplace_back(static_cast<uint32_t>(offset + i * dq + j), f.mul(u, v));
          canonicalize(xy, f);
          images.push_back(sh.map.at(t).apply(xy));
        }
    }
    for (const auto& img : images)
      if (!pc.d(t).apply(img).empty()) cycles = false;
    SparseMatrix boundaries = pc.d(t - 1);
    SparseMatrix s = SparseMatrix::from_columns(f, pc.dim(t), images);
    auto [rb, rbs] = rank_extension(boundaries, s);
    long actual = static_cast<long>(pc.dim(t)) - static_cast<long>(rank(pc.d(t))) - static_cast<long>(rb);
    r.checks.push_back({n, expected, actual, expected == actual});
    if (rbs - rb != images.size()) injective = false;
  }
  r.witnesses.emplace_back("shuffle images are cycles", cycles);
  r.witnesses.emplace_back("shuffle induces injective maps on homology", injective);
  return r;
}

KunnethReport morita_check(const DgAlgebra& a, int n, int max_degree, HochschildOptions options) {
  if (n > 3) throw CapExceeded("morita_check supports n <= 3");
  if (a.dim() * static_cast<size_t>(n * n) > 36) throw CapExceeded("morita_check needs dim(a) n^2 <= 36");
  KunnethReport r{"morita", {}, {}};
  HochschildOptions big = options;
  big.allow_large = true;
  auto ha = hh_cohomology_dims(a, max_degree + 1, options);
  auto hm = hh_cohomology_dims(matrix_algebra(a, n), max_degree + 1, big);
  for (int k = 0; k <= max_degree; ++k) {
    long e = static_cast<long>(ha[static_cast<size_t>(k)]);
    long v = static_cast<long>(hm[static_cast<size_t>(k)]);
    r.checks.push_back({k, e, v, e == v});
  }
  return r;
}

}  // namespace hochkit
