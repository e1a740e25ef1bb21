#pragma once

// Integer-coded involutive sets, simplex matrices, index maps and the
// pointed automorphism group Aut(I) = (C2 wr S_a) x S_b.
//
// Elements of an involutive set with `free` = a and `fixed` = b are the
// integers -a..a+b.  0 is the identity, x -> -x is the involution on
// [-a, a], and a+1..a+b are fixed points.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "pgenum/error.hpp"

namespace pgenum {

using Element = int;

// Largest supported order.  Bounded by the 4-bit letter packing below.
inline constexpr int kMaxOrder = 15;

class InvolutiveSet {
 public:
  InvolutiveSet() = default;

  InvolutiveSet(int free, int fixed) : free_(free), fixed_(fixed) {
    if (free < 0 || fixed < 0) {
      throw PreconditionError("involutive set counts must be nonnegative");
    }
    if (order() > kMaxOrder) {
      throw PreconditionError("involutive sets of order above " +
                              std::to_string(kMaxOrder) + " are unsupported");
    }
  }

  int free() const noexcept { return free_; }
  int fixed() const noexcept { return fixed_; }
  int order() const noexcept { return 2 * free_ + fixed_ + 1; }

  Element min_element() const noexcept { return -free_; }
  Element max_element() const noexcept { return free_ + fixed_; }

  bool contains(Element x) const noexcept {
    return x >= min_element() && x <= max_element();
  }

  Element dagger(Element x) const noexcept { return x <= free_ ? -x : x; }

  bool is_free(Element x) const noexcept {
    return x != 0 && x >= -free_ && x <= free_;
  }

  // Position of x in 0..order-1.  The identity sits at index free().
  int index(Element x) const noexcept { return x + free_; }
  Element element(int index) const noexcept { return index - free_; }

  std::vector<Element> elements() const {
    std::vector<Element> out(static_cast<std::size_t>(order()));
    std::iota(out.begin(), out.end(), min_element());
    return out;
  }

  std::vector<Element> nonidentity() const {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(order() - 1));
    for (Element x = min_element(); x <= max_element(); ++x) {
      if (x != 0) out.push_back(x);
    }
    return out;
  }

  friend auto operator<=>(const InvolutiveSet&, const InvolutiveSet&) = default;

 private:
  int free_ = 0;
  int fixed_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const InvolutiveSet& s) {
  return os << '(' << s.free() << ',' << s.fixed() << ')';
}

// A map alpha: [m] -> [n] in the category of finite nonempty sets.
class IndexMap {
 public:
  IndexMap(int target_size, std::vector<int> values)
      : target_size_(target_size), values_(std::move(values)) {
    if (values_.empty() || target_size_ <= 0) {
      throw DimensionError("index maps need nonempty source and target");
    }
    for (int v : values_) {
      if (v < 0 || v >= target_size_) {
        throw DimensionError("index map value out of range");
      }
    }
  }

  static IndexMap identity(int size) {
    std::vector<int> v(static_cast<std::size_t>(size));
    std::iota(v.begin(), v.end(), 0);
    return IndexMap(size, std::move(v));
  }

  int source_size() const noexcept { return static_cast<int>(values_.size()); }
  int target_size() const noexcept { return target_size_; }
  int operator()(int i) const { return values_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& values() const noexcept { return values_; }

  bool is_injective() const {
    std::vector<bool> seen(static_cast<std::size_t>(target_size_), false);
    for (int v : values_) {
      if (seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
  }

  bool is_bijective() const {
    return source_size() == target_size_ && is_injective();
  }

  friend bool operator==(const IndexMap&, const IndexMap&) = default;

 private:
  int target_size_;
  std::vector<int> values_;
};

// f o g: apply g first.
inline IndexMap compose(const IndexMap& f, const IndexMap& g) {
  if (g.target_size() != f.source_size()) {
    throw DimensionError("index maps are not composable");
  }
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(g.source_size()));
  for (int i = 0; i < g.source_size(); ++i) v.push_back(f(g(i)));
  return IndexMap(f.target_size(), std::move(v));
}

// An (n+1)x(n+1) matrix over an involutive set: skew-symmetric with zero
// diagonal.  Stored dense, row-major, both triangles.
class SimplexMatrix {
 public:
  SimplexMatrix(InvolutiveSet set, int dim, std::vector<Element> row_major)
      : set_(set), dim_(dim), e_(std::move(row_major)) {
    const auto n = static_cast<std::size_t>(dim_ + 1);
    if (dim_ < 0 || e_.size() != n * n) {
      throw DimensionError("matrix entry count does not match dimension");
    }
    for (int i = 0; i <= dim_; ++i) {
      if ((*this)(i, i) != 0) {
        throw PreconditionError("matrix diagonal must be the identity");
      }
      for (int j = 0; j <= dim_; ++j) {
        if (!set_.contains((*this)(i, j))) {
          throw PreconditionError("matrix entry outside the involutive set");
        }
        if ((*this)(j, i) != set_.dagger((*this)(i, j))) {
          throw PreconditionError("matrix is not skew-symmetric");
        }
      }
    }
  }

  static SimplexMatrix from_rows(InvolutiveSet set,
                                 const std::vector<std::vector<Element>>& rows) {
    std::vector<Element> flat;
    for (const auto& r : rows) {
      if (r.size() != rows.size()) throw DimensionError("matrix is not square");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return SimplexMatrix(set, static_cast<int>(rows.size()) - 1, std::move(flat));
  }

  // The 1-simplex [[0,x],[x^dagger,0]].
  static SimplexMatrix edge(InvolutiveSet set, Element x) {
    return SimplexMatrix(set, 1, {0, x, set.dagger(x), 0});
  }

  const InvolutiveSet& set() const noexcept { return set_; }
  int dim() const noexcept { return dim_; }
  int size() const noexcept { return dim_ + 1; }

  Element operator()(int i, int j) const noexcept {
    return e_[static_cast<std::size_t>(i * (dim_ + 1) + j)];
  }

  std::span<const Element> row_major() const noexcept { return e_; }

  std::vector<std::vector<Element>> rows() const {
    std::vector<std::vector<Element>> out(static_cast<std::size_t>(size()));
    for (int i = 0; i < size(); ++i) {
      for (int j = 0; j < size(); ++j) out[static_cast<std::size_t>(i)].push_back((*this)(i, j));
    }
    return out;
  }

  friend bool operator==(const SimplexMatrix&, const SimplexMatrix&) = default;

  // Dimension first, then column-major entry comparison.
  friend std::strong_ordering operator<=>(const SimplexMatrix& a,
                                          const SimplexMatrix& b) {
    if (auto c = a.set_ <=> b.set_; c != 0) return c;
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    for (int j = 0; j < a.size(); ++j) {
      for (int i = 0; i < a.size(); ++i) {
        if (auto c = a(i, j) <=> b(i, j); c != 0) return c;
      }
    }
    return std::strong_ordering::equal;
  }

 private:
  InvolutiveSet set_;
  int dim_ = 0;
  std::vector<Element> e_;
};

inline std::ostream& operator<<(std::ostream& os, const SimplexMatrix& m) {
  os << '[';
  for (int i = 0; i < m.size(); ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < m.size(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

struct Word {
  InvolutiveSet set;
  std::vector<Element> letters;

  friend auto operator<=>(const Word&, const Word&) = default;
};

// A multiplication fact a * b = c.
struct Triple {
  Element a = 0;
  Element b = 0;
  Element c = 0;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Triple& t) {
  return os << '[' << t.a << ',' << t.b << ',' << t.c << ']';
}

// The 2-simplex of the fact a*b = c: [[0,b,c],[b^,0,a],[c^,a^,0]].
inline SimplexMatrix triple_matrix(InvolutiveSet set, const Triple& t) {
  return SimplexMatrix(set, 2,
                       {0, t.b, t.c, set.dagger(t.b), 0, t.a, set.dagger(t.c),
                        set.dagger(t.a), 0});
}

// Reads the fact back off a 3x3 matrix: entry(1,2) * entry(0,1) = entry(0,2).
inline Triple matrix_triple(const SimplexMatrix& m) {
  if (m.dim() != 2) throw DimensionError("facts are read from 3x3 matrices");
  return Triple{m(1, 2), m(0, 1), m(0, 2)};
}

// ---------------------------------------------------------------------------
// Packed words.  Letter indices (0..order-1) are stored as index+1 in 4-bit
// nibbles with the first letter most significant, so numeric order on
// same-length words is lexicographic order on letters.

using PackedWord = std::uint64_t;

inline PackedWord pack_indices(std::span<const std::int8_t> idx) {
  PackedWord w = 0;
  for (auto i : idx) w = (w << 4) | static_cast<PackedWord>(i + 1);
  return w;
}

inline int packed_length(PackedWord w) {
  int n = 0;
  for (; w != 0; w >>= 4) ++n;
  return n;
}

inline void unpack_indices(PackedWord w, int len, std::int8_t* out) {
  for (int i = len - 1; i >= 0; --i) {
    out[i] = static_cast<std::int8_t>((w & 0xF) - 1);
    w >>= 4;
  }
}

inline PackedWord pack_word(InvolutiveSet set, std::span<const Element> letters) {
  PackedWord w = 0;
  for (Element x : letters) {
    w = (w << 4) | static_cast<PackedWord>(set.index(x) + 1);
  }
  return w;
}

inline std::vector<Element> unpack_word(InvolutiveSet set, PackedWord w) {
  const int len = packed_length(w);
  std::vector<Element> out(static_cast<std::size_t>(len));
  for (int i = len - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = set.element(static_cast<int>(w & 0xF) - 1);
    w >>= 4;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pointed automorphisms of an involutive set.

class PointedAut {
 public:
  PointedAut() = default;

  static PointedAut identity(InvolutiveSet set) {
    PointedAut g;
    g.set_ = set;
    for (int i = 0; i < set.order(); ++i) g.image_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(i);
    return g;
  }

  // `positive_images[k]` is the image of element k+1, for k+1 in 1..a+b.
  static PointedAut from_images(InvolutiveSet set,
                                std::span<const Element> positive_images) {
    const int a = set.free();
    const int top = set.max_element();
    if (static_cast<int>(positive_images.size()) != top) {
      throw DimensionError("need one image per positive element");
    }
    PointedAut g = identity(set);
    std::vector<bool> hit(static_cast<std::size_t>(set.order()), false);
    for (Element x = 1; x <= top; ++x) {
      const Element y = positive_images[static_cast<std::size_t>(x - 1)];
      const bool ok = x <= a ? (y != 0 && y >= -a && y <= a)
                             : (y > a && y <= top);
      if (!ok) throw PreconditionError("image does not preserve orbit type");
      g.set_image(x, y);
      g.set_image(set.dagger(x), set.dagger(y));
    }
    for (int i = 0; i < set.order(); ++i) {
      auto h = hit[static_cast<std::size_t>(g.image_[static_cast<std::size_t>(i)])];
      if (h) throw PreconditionError("images do not form a bijection");
      h = true;
    }
    return g;
  }

  const InvolutiveSet& set() const noexcept { return set_; }

  Element operator()(Element x) const noexcept {
    return set_.element(image_[static_cast<std::size_t>(set_.index(x))]);
  }

  // Image on element indices; the hot loops work with these.
  std::int8_t index_image(int index) const noexcept {
    return image_[static_cast<std::size_t>(index)];
  }

  std::vector<Element> positive_images() const {
    std::vector<Element> out;
    for (Element x = 1; x <= set_.max_element(); ++x) out.push_back((*this)(x));
    return out;
  }

  bool is_identity() const noexcept {
    for (int i = 0; i < set_.order(); ++i) {
      if (image_[static_cast<std::size_t>(i)] != i) return false;
    }
    return true;
  }

  friend bool operator==(const PointedAut&, const PointedAut&) = default;
  friend auto operator<=>(const PointedAut&, const PointedAut&) = default;

  // g o h
  friend PointedAut compose(const PointedAut& g, const PointedAut& h) {
    PointedAut r = h;
    for (int i = 0; i < h.set_.order(); ++i) {
      r.image_[static_cast<std::size_t>(i)] = g.image_[static_cast<std::size_t>(h.image_[static_cast<std::size_t>(i)])];
    }
    return r;
  }

  PointedAut inverse() const {
    PointedAut r = *this;
    for (int i = 0; i < set_.order(); ++i) {
      r.image_[static_cast<std::size_t>(image_[static_cast<std::size_t>(i)])] = static_cast<std::int8_t>(i);
    }
    return r;
  }

 private:
  void set_image(Element x, Element y) {
    image_[static_cast<std::size_t>(set_.index(x))] = static_cast<std::int8_t>(set_.index(y));
  }

  InvolutiveSet set_;
  std::array<std::int8_t, kMaxOrder> image_{};
};

inline std::uint64_t aut_group_order(InvolutiveSet set) {
  std::uint64_t n = 1;
  for (int i = 1; i <= set.free(); ++i) n *= 2 * static_cast<std::uint64_t>(i);
  for (int i = 1; i <= set.fixed(); ++i) n *= static_cast<std::uint64_t>(i);
  return n;
}

// Every element of Aut(I), identity first, in a fixed deterministic order.
inline std::vector<PointedAut> aut_group(InvolutiveSet set) {
  const int a = set.free();
  const int b = set.fixed();
  std::vector<PointedAut> out;
  out.reserve(static_cast<std::size_t>(aut_group_order(set)));

  std::vector<int> free_perm(static_cast<std::size_t>(a));
  std::iota(free_perm.begin(), free_perm.end(), 1);
  std::vector<Element> images(static_cast<std::size_t>(a + b));
  do {
    for (unsigned signs = 0; signs < (1u << a); ++signs) {
      std::vector<int> fixed_perm(static_cast<std::size_t>(b));
      std::iota(fixed_perm.begin(), fixed_perm.end(), a + 1);
      do {
        for (int i = 0; i < a; ++i) {
          const int v = free_perm[static_cast<std::size_t>(i)];
          images[static_cast<std::size_t>(i)] = (signs >> i) & 1u ? -v : v;
        }
        for (int i = 0; i < b; ++i) {
          images[static_cast<std::size_t>(a + i)] = fixed_perm[static_cast<std::size_t>(i)];
        }
        out.push_back(PointedAut::from_images(set, images));
      } while (std::next_permutation(fixed_perm.begin(), fixed_perm.end()));
    }
  } while (std::next_permutation(free_perm.begin(), free_perm.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Actions.

inline Element act(const PointedAut& g, Element x) { return g(x); }

inline Triple act(const PointedAut& g, const Triple& t) {
  return Triple{g(t.a), g(t.b), g(t.c)};
}

inline Word act(const PointedAut& g, const Word& w) {
  Word r{w.set, {}};
  r.letters.reserve(w.letters.size());
  for (Element x : w.letters) r.letters.push_back(g(x));
  return r;
}

inline SimplexMatrix act(const PointedAut& g, const SimplexMatrix& m) {
  std::vector<Element> e;
  e.reserve(m.row_major().size());
  for (Element x : m.row_major()) e.push_back(g(x));
  return SimplexMatrix(m.set(), m.dim(), std::move(e));
}

// ---------------------------------------------------------------------------
// Operations on matrices.

// alpha^* M: entry(p,q) = M(alpha(p), alpha(q)).
inline SimplexMatrix restrict(const SimplexMatrix& m, const IndexMap& alpha) {
  if (alpha.target_size() != m.size()) {
    throw DimensionError("index map target does not match matrix size");
  }
  const int s = alpha.source_size();
  std::vector<Element> e;
  e.reserve(static_cast<std::size_t>(s * s));
  for (int p = 0; p < s; ++p) {
    for (int q = 0; q < s; ++q) e.push_back(m(alpha(p), alpha(q)));
  }
  return SimplexMatrix(m.set(), s - 1, std::move(e));
}

// No row contains a repeated element.
inline bool is_nondegenerate(const SimplexMatrix& m) {
  std::array<bool, kMaxOrder> seen{};
  for (int i = 0; i < m.size(); ++i) {
    seen.fill(false);
    for (int j = 0; j < m.size(); ++j) {
      auto& s = seen[static_cast<std::size_t>(m.set().index(m(i, j)))];
      if (s) return false;
      s = true;
    }
  }
  return true;
}

namespace detail {

// Accumulates the forced-value relation (entry(i,j), entry(i,k)) -> entry(j,k)
// and reports whether it stays a function.
class ForcedTable {
 public:
  explicit ForcedTable(InvolutiveSet set)
      : set_(set),
        order_(set.order()),
        table_(static_cast<std::size_t>(order_ * order_), kUnset) {}

  bool add(const SimplexMatrix& m) {
    const int s = m.size();
    for (int i = 0; i < s; ++i) {
      for (int j = 0; j < s; ++j) {
        const int x = set_.index(m(i, j));
        for (int k = 0; k < s; ++k) {
          const int y = set_.index(m(i, k));
          const auto z = static_cast<std::int8_t>(set_.index(m(j, k)));
          auto& slot = table_[static_cast<std::size_t>(x * order_ + y)];
          if (slot == kUnset) {
            slot = z;
          } else if (slot != z) {
            return false;
          }
        }
      }
    }
    return true;
  }

 private:
  static constexpr std::int8_t kUnset = -1;
  InvolutiveSet set_;
  int order_;
  std::vector<std::int8_t> table_;
};

}  // namespace detail

// Suitability over a one-vertex graph: the matrix invariants plus the
// condition that a matching pair (entry(i,j), entry(i,k)) always forces the
// same entry(j,k).  Checked through a value-pair table.
inline bool is_suitable(const SimplexMatrix& m) {
  detail::ForcedTable t(m.set());
  return t.add(m);
}

inline bool compatible(const SimplexMatrix& m, const SimplexMatrix& n) {
  if (m.set() != n.set()) {
    throw PreconditionError("compatible() needs matrices over one set");
  }
  detail::ForcedTable t(m.set());
  return t.add(m) && t.add(n);
}

inline Word segal_word(const SimplexMatrix& m) {
  Word w{m.set(), {}};
  for (int i = 0; i + 1 < m.size(); ++i) w.letters.push_back(m(i, i + 1));
  return w;
}

inline Word bousfield_word(const SimplexMatrix& m) {
  Word w{m.set(), {}};
  for (int j = 1; j < m.size(); ++j) w.letters.push_back(m(0, j));
  return w;
}

// Calls f(values) for every injective map [k] -> [n] (values has k+1 entries).
template <typename F>
void for_each_injection(int k, int n, F&& f) {
  if (k > n) return;
  std::vector<int> vals(static_cast<std::size_t>(k + 1));
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == k + 1) {
      f(static_cast<const std::vector<int>&>(vals));
      return;
    }
    for (int v = 0; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      vals[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec(rec, 0);
}

// The nondegenerate simplices of the symmetric subset generated by a suitable
// matrix, by dimension (k >= 2).
inline std::map<int, std::set<SimplexMatrix>> generated(const SimplexMatrix& m) {
  if (!is_suitable(m)) throw PreconditionError("generated() needs a suitable matrix");
  std::map<int, std::set<SimplexMatrix>> out;
  for (int k = 2; k <= m.dim(); ++k) {
    for_each_injection(k, m.dim(), [&](const std::vector<int>& vals) {
      auto face = restrict(m, IndexMap(m.size(), vals));
      if (is_nondegenerate(face)) out[k].insert(std::move(face));
    });
  }
  return out;
}

}  // namespace pgenum
