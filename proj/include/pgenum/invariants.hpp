#pragma once

// Structural invariants of partial groups: dimension, higher Segal degree,
// 2-coskeletality, indecomposability, generators, subgroups, isomorphism,
// and wedge sums.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <span>
#include <vector>

#include "pgenum/bpgkit.hpp"
#include "pgenum/error.hpp"
#include "pgenum/extender.hpp"
#include "pgenum/symcore.hpp"
#include "pgenum/wordset.hpp"

namespace pgenum {

inline int dimension(const PartialGroup& x) { return x.top_level(); }

inline bool is_indecomposable(const PartialGroup& x) { return is_indecomposable(x.bpg()); }

inline bool is_coskeletal2(const PartialGroup& x) { return x == build_bp(x.bpg()); }

namespace detail {

// Bousfield words (top row tails) of the nondegenerate k-simplices, k >= 1,
// as packed index words.
inline std::vector<PackedWord> bousfield_words(const PartialGroup& x, int k) {
  const auto& s = x.set();
  const Bpg& p = x.bpg();
  std::vector<PackedWord> out;
  if (k < 1) return out;
  std::int8_t w[kMaxOrder];
  for (PackedWord seg : x.segal_words(k)) {
    unpack_indices(seg, k, w);
    for (int j = 1; j < k; ++j) w[j] = p.raw(w[j], w[j - 1]);
    out.push_back(pack_indices(std::span<const std::int8_t>(w, static_cast<std::size_t>(k))));
  }
  std::sort(out.begin(), out.end());
  (void)s;
  return out;
}

inline bool ascending(const std::int8_t* w, int from, int to) {
  for (int i = from + 1; i < to; ++i) {
    if (w[i - 1] > w[i]) return false;
  }
  return true;
}

}  // namespace detail

// Whether X has degree at most k.  For each n in [k+1, dim+1], every
// nondegenerate Bousfield word x of X_{n-1} is extended by each a_n not in
// x and not the identity; when d_{n-k}w..d_{n-1}w are Bousfield words of
// X_{n-1}, w must be one of X_n.  With `sorted_only`, base words whose first
// n-k-1 letters and last k letters are not each ascending are skipped; the
// test is invariant under permuting those blocks.
inline bool has_degree_at_most(const PartialGroup& x, int k, bool sorted_only = true) {
  if (k < 1) throw PreconditionError("degree bounds start at 1");
  const int dim = dimension(x);
  const auto& s = x.set();
  std::vector<std::vector<PackedWord>> words(static_cast<std::size_t>(dim + 2));
  std::vector<WordSet> sets(static_cast<std::size_t>(dim + 2));
  for (int m = 1; m <= dim; ++m) {
    words[static_cast<std::size_t>(m)] = detail::bousfield_words(x, m);
    sets[static_cast<std::size_t>(m)] = WordSet(words[static_cast<std::size_t>(m)]);
  }
  std::vector<std::int8_t> letters;
  for (Element e : s.nonidentity()) letters.push_back(static_cast<std::int8_t>(s.index(e)));

  std::int8_t w[kMaxOrder + 1];
  std::int8_t face[kMaxOrder];
  for (int n = k + 1; n <= dim + 1; ++n) {
    const auto& below = sets[static_cast<std::size_t>(n - 1)];
    const auto& here = sets[static_cast<std::size_t>(n)];
    for (PackedWord base : words[static_cast<std::size_t>(n - 1)]) {
      unpack_indices(base, n - 1, w);
      if (sorted_only && (!detail::ascending(w, 0, n - k - 1) ||
                          !detail::ascending(w, n - k - 1, n - 1))) {
        continue;
      }
      for (std::int8_t a : letters) {
        if (std::find(w, w + n - 1, a) != w + n - 1) continue;
        w[n - 1] = a;
        bool faces_in = true;
        for (int i = n - k; faces_in && i <= n - 1; ++i) {
          int m = 0;
          for (int j = 0; j < n; ++j) {
            if (j != i - 1) face[m++] = w[j];
          }
          faces_in = below.contains(pack_indices(std::span<const std::int8_t>(face, static_cast<std::size_t>(n - 1))));
        }
        if (faces_in &&
            !here.contains(pack_indices(std::span<const std::int8_t>(w, static_cast<std::size_t>(n))))) {
          return false;
        }
      }
    }
  }
  return true;
}

// Least k >= 1 with degree at most k; never exceeds dim+1.  The trivial group
// has degree 1.
inline int degree(const PartialGroup& x, bool sorted_only = true) {
  const int dim = dimension(x);
  for (int k = 1; k <= dim; ++k) {
    if (has_degree_at_most(x, k, sorted_only)) return k;
  }
  return std::max(dim + 1, 1);
}

// Sigma-orbit representatives (column-major least) of the simplices that are
// not faces of a simplex one level up, ordered by dimension descending.
inline std::vector<SimplexMatrix> minimal_generators(const PartialGroup& x) {
  const auto& s = x.set();
  const Bpg& p = x.bpg();
  const int dim = dimension(x);
  std::vector<SimplexMatrix> out;
  if (dim < 1) return out;

  std::vector<PackedWord> faces;  // faces of level k+1, for the current k
  std::int8_t w[kMaxOrder];
  std::int8_t f[kMaxOrder];
  for (int k = dim; k >= 1; --k) {
    const WordSet covered(faces);
    std::vector<PackedWord> maximal;
    for (PackedWord word : x.segal_words(k)) {
      if (!covered.contains(word)) maximal.push_back(word);
    }
    WordMap orbit_of;
    std::vector<SimplexMatrix> reps;
    for (PackedWord word : maximal) {
      if (orbit_of.find(word) != WordMap::npos) continue;
      SimplexMatrix best = word_to_matrix(s, word, p);
      if (k == 1) {
        const Element e = best(0, 1);
        orbit_of.insert(word, 0);
        const Element d[] = {s.dagger(e)};
        orbit_of.insert(pack_word(s, d), 0);
        best = std::min(best, SimplexMatrix::edge(s, s.dagger(e)));
      } else {
        std::vector<std::int8_t> m(static_cast<std::size_t>((k + 1) * (k + 1)));
        unpack_indices(word, k, w);
        detail::segal_matrix(p, detail::dagger_indices(s), w, k, m.data());
        for (PackedWord member : detail::sigma_orbit(m.data(), k, 0, orbit_of)) {
          best = std::min(best, word_to_matrix(s, member, p));
        }
      }
      reps.push_back(std::move(best));
    }
    std::sort(reps.begin(), reps.end());
    out.insert(out.end(), reps.begin(), reps.end());

    // Faces of level k, for level k-1.
    faces.clear();
    if (k >= 2) {
      for (PackedWord word : x.segal_words(k)) {
        unpack_indices(word, k, w);
        faces.push_back(pack_indices(std::span<const std::int8_t>(w + 1, static_cast<std::size_t>(k - 1))));
        faces.push_back(pack_indices(std::span<const std::int8_t>(w, static_cast<std::size_t>(k - 1))));
        for (int i = 1; i < k; ++i) {
          int n = 0;
          for (int j = 0; j < i - 1; ++j) f[n++] = w[j];
          f[n++] = p.raw(w[i], w[i - 1]);
          for (int j = i + 1; j < k; ++j) f[n++] = w[j];
          faces.push_back(pack_indices(std::span<const std::int8_t>(f, static_cast<std::size_t>(k - 1))));
        }
      }
    }
  }
  return out;
}

// Maximal subgroups, as sorted element lists.  S is a subgroup when some
// nondegenerate (|S|-1)-simplex has all of its entries in S.
inline std::vector<std::vector<Element>> maximal_subgroups(const PartialGroup& x) {
  const auto& s = x.set();
  const Bpg& p = x.bpg();
  auto supports = detail::low_subgroup_supports(p);
  const auto dag = detail::dagger_indices(s);
  std::int8_t w[kMaxOrder];
  std::int8_t m[kMaxOrder * kMaxOrder];
  for (int k = 3; k <= dimension(x); ++k) {
    for (PackedWord word : x.level(k)) {
      unpack_indices(word, k, w);
      detail::segal_matrix(p, dag, w, k, m);
      ElementMask mask = 0;
      for (int i = 0; i < (k + 1) * (k + 1); ++i) mask |= ElementMask{1} << m[i];
      if (std::popcount(mask) == k + 1) supports.push_back(mask);
    }
  }
  std::vector<std::vector<Element>> out;
  for (auto mask : maximal_masks(std::move(supports))) out.push_back(mask_elements(s, mask));
  return out;
}

// Image of X under an injective relabeling into `target`; the relabeling
// must commute with dagger.
inline PartialGroup transport(const PartialGroup& x, InvolutiveSet target,
                              const std::function<Element(Element)>& f) {
  const auto& s = x.set();
  std::vector<Triple> facts;
  for (const auto& t : x.bpg().facts()) facts.push_back(Triple{f(t.a), f(t.b), f(t.c)});
  std::vector<std::int8_t> idx(static_cast<std::size_t>(s.order()));
  for (int i = 0; i < s.order(); ++i) {
    idx[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(target.index(f(s.element(i))));
  }
  std::vector<std::vector<PackedWord>> higher;
  std::int8_t w[kMaxOrder];
  for (std::size_t l = 0; l < x.higher().size(); ++l) {
    const int len = static_cast<int>(l) + 3;
    std::vector<PackedWord> level;
    for (PackedWord word : x.higher()[l]) {
      unpack_indices(word, len, w);
      for (int i = 0; i < len; ++i) w[i] = idx[static_cast<std::size_t>(w[i])];
      level.push_back(pack_indices(std::span<const std::int8_t>(w, static_cast<std::size_t>(len))));
    }
    higher.push_back(std::move(level));
  }
  return PartialGroup(Bpg::from_facts(target, facts), std::move(higher));
}

namespace detail {

inline PartialGroup merge(const PartialGroup& x, const PartialGroup& y) {
  if (x.set() != y.set()) throw PreconditionError("merge needs a common involutive set");
  auto facts = x.bpg().facts();
  auto more = y.bpg().facts();
  facts.insert(facts.end(), more.begin(), more.end());
  std::vector<std::vector<PackedWord>> higher(std::max(x.higher().size(), y.higher().size()));
  for (std::size_t l = 0; l < higher.size(); ++l) {
    if (l < x.higher().size()) higher[l] = x.higher()[l];
    if (l < y.higher().size()) {
      higher[l].insert(higher[l].end(), y.higher()[l].begin(), y.higher()[l].end());
    }
  }
  return PartialGroup(Bpg::from_facts(x.set(), facts), std::move(higher));
}

}  // namespace detail

// X v Y on the set of type (fx+fy, bx+by): free elements of X, then of Y,
// then fixed elements of X, then of Y.
inline PartialGroup wedge(const PartialGroup& x, const PartialGroup& y) {
  const auto& sx = x.set();
  const auto& sy = y.set();
  const InvolutiveSet t(sx.free() + sy.free(), sx.fixed() + sy.fixed());
  auto fx = [&](Element e) -> Element {
    if (e == 0 || sx.is_free(e)) return e;
    return e + sy.free();
  };
  auto fy = [&](Element e) -> Element {
    if (e == 0) return 0;
    if (sy.is_free(e)) return e > 0 ? e + sx.free() : e - sx.free();
    return e + sx.free() + sx.fixed();
  };
  return detail::merge(transport(x, t, fx), transport(y, t, fy));
}

// Wedge summands of X, each relabeled onto its own involutive set, ordered by
// their least positive element in X.  Empty for the trivial group.
inline std::vector<PartialGroup> components(const PartialGroup& x) {
  const auto& s = x.set();
  const int o = s.order();
  std::vector<int> parent(static_cast<std::size_t>(o));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int i) {
    return parent[static_cast<std::size_t>(i)] == i
               ? i
               : parent[static_cast<std::size_t>(i)] = find(parent[static_cast<std::size_t>(i)]);
  };
  auto unite = [&](Element a, Element b) {
    parent[static_cast<std::size_t>(find(s.index(a)))] = find(s.index(b));
  };
  for (Element e : s.nonidentity()) unite(e, s.dagger(e));
  for (const auto& f : x.bpg().facts()) {
    unite(f.a, f.b);
    unite(f.a, f.c);
  }
  std::map<int, std::vector<Element>> groups;  // root -> positive elements
  std::vector<int> order_seen;
  for (Element e = 1; e <= s.max_element(); ++e) {
    const int r = find(s.index(e));
    if (!groups.count(r)) order_seen.push_back(r);
    groups[r].push_back(e);
  }
  std::vector<PartialGroup> out;
  for (int r : order_seen) {
    const auto& pos = groups[r];
    int nf = 0, nb = 0;
    for (Element e : pos) (s.is_free(e) ? nf : nb)++;
    const InvolutiveSet t(nf, nb);
    std::vector<Element> image(static_cast<std::size_t>(o), 0);
    int next_free = 1, next_fixed = nf + 1;
    for (Element e : pos) {
      if (s.is_free(e)) {
        image[static_cast<std::size_t>(s.index(e))] = next_free;
        image[static_cast<std::size_t>(s.index(-e))] = -next_free;
        ++next_free;
      } else {
        image[static_cast<std::size_t>(s.index(e))] = next_fixed++;
      }
    }
    // Restrict X to the component: keep facts and words inside it.
    std::vector<Triple> facts;
    for (const auto& f : x.bpg().facts()) {
      if (find(s.index(f.a)) == r) {
        facts.push_back(Triple{image[static_cast<std::size_t>(s.index(f.a))],
                               image[static_cast<std::size_t>(s.index(f.b))],
                               image[static_cast<std::size_t>(s.index(f.c))]});
      }
    }
    std::vector<std::vector<PackedWord>> higher;
    std::int8_t w[kMaxOrder];
    for (std::size_t l = 0; l < x.higher().size(); ++l) {
      const int len = static_cast<int>(l) + 3;
      std::vector<PackedWord> level;
      for (PackedWord word : x.higher()[l]) {
        unpack_indices(word, len, w);
        if (find(w[0]) != r) continue;
        for (int i = 0; i < len; ++i) {
          w[i] = static_cast<std::int8_t>(t.index(image[static_cast<std::size_t>(w[i])]));
        }
        level.push_back(pack_indices(std::span<const std::int8_t>(w, static_cast<std::size_t>(len))));
      }
      if (level.empty()) break;
      higher.push_back(std::move(level));
    }
    out.emplace_back(Bpg::from_facts(t, facts), std::move(higher));
  }
  return out;
}

// Some automorphism of the common involutive set carries X onto Y.
inline bool are_isomorphic(const PartialGroup& x, const PartialGroup& y) {
  if (x.set() != y.set()) return false;
  if (x.bpg().fact_count() != y.bpg().fact_count()) return false;
  if (x.higher().size() != y.higher().size()) return false;
  for (std::size_t l = 0; l < x.higher().size(); ++l) {
    if (x.higher()[l].size() != y.higher()[l].size()) return false;
  }
  for (const auto& g : aut_group(x.set())) {
    if (act(g, x.bpg()) == y.bpg() && act(g, x) == y) return true;
  }
  return false;
}

inline bool are_isomorphic(const Bpg& x, const Bpg& y) {
  return are_isomorphic(PartialGroup(x), PartialGroup(y));
}

}  // namespace pgenum
