#pragma once

// Binary partial groups on a fixed involutive set: partial Cayley tables,
// atomic BPGs, the compatibility graph and Aut(I)-orbit representatives of
// its cliques.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "pgenum/bitset.hpp"
#include "pgenum/error.hpp"
#include "pgenum/symcore.hpp"

namespace pgenum {

// Order used for canonical multiplication representatives:
// 1 < -1 < 2 < -2 < 3 < ...
inline int element_key(Element x) noexcept { return 2 * std::abs(x) + (x < 0); }

inline bool key_less(const Triple& s, const Triple& t) noexcept {
  if (s.a != t.a) return element_key(s.a) < element_key(t.a);
  if (s.b != t.b) return element_key(s.b) < element_key(t.b);
  return element_key(s.c) < element_key(t.c);
}

// The facts generated by a*b = c under the relations a^(ab) = b and
// (ab)b^ = a: the pullbacks of its 3x3 matrix along the six permutations.
inline std::vector<Triple> sigma3_closure(InvolutiveSet set, const Triple& t) {
  const Element m[3][3] = {{0, t.b, t.c},
                           {set.dagger(t.b), 0, t.a},
                           {set.dagger(t.c), set.dagger(t.a), 0}};
  std::array<int, 3> p{0, 1, 2};
  std::set<Triple> out;
  do {
    out.insert(Triple{m[p[1]][p[2]], m[p[0]][p[1]], m[p[0]][p[2]]});
  } while (std::next_permutation(p.begin(), p.end()));
  return {out.begin(), out.end()};
}

// Canonical representative of the Sigma_3-orbit of a fact.
inline Triple canonical_mult(InvolutiveSet set, const Triple& t) {
  auto orbit = sigma3_closure(set, t);
  return *std::min_element(orbit.begin(), orbit.end(), key_less);
}

// A nondegenerate fact: the matrix of a*b = c has no repeated row entries.
inline bool is_nontrivial_fact(InvolutiveSet set, const Triple& t) {
  if (t.a == 0 || t.b == 0 || t.c == 0) return false;
  return t.b != t.c && t.a != t.c && t.a != set.dagger(t.b);
}

class Bpg {
 public:
  static constexpr std::int8_t kUndefined = -1;

  Bpg() : Bpg(InvolutiveSet{}) {}

  // The trivial BPG on `set`: no nontrivial multiplications.
  explicit Bpg(InvolutiveSet set)
      : set_(set),
        table_(static_cast<std::size_t>(set.order() * set.order()), kUndefined) {}

  // Union of the Sigma_3-closures of `mults`.  Throws IntegrityError if the
  // result is not a partial function or a generator is degenerate.
  static Bpg from_generators(InvolutiveSet set, std::span<const Triple> mults) {
    Bpg p(set);
    for (const auto& m : mults) {
      if (!set.contains(m.a) || !set.contains(m.b) || !set.contains(m.c)) {
        throw IntegrityError("multiplication uses elements outside the set");
      }
      if (!is_nontrivial_fact(set, m)) {
        throw IntegrityError("multiplication is trivial or degenerate");
      }
      for (const auto& f : sigma3_closure(set, m)) {
        if (!p.add_fact(f)) {
          throw IntegrityError("multiplications do not form a partial function");
        }
      }
    }
    return p;
  }

  // Builds from an explicit fact list that must already be Sigma_3-closed.
  static Bpg from_facts(InvolutiveSet set, std::span<const Triple> facts) {
    Bpg p = from_generators(set, facts);
    if (p.fact_count() != std::set<Triple>(facts.begin(), facts.end()).size()) {
      throw IntegrityError("fact list is not closed under the Sigma_3 action");
    }
    return p;
  }

  const InvolutiveSet& set() const noexcept { return set_; }

  // Recorded nontrivial product, if any.
  std::optional<Element> product(Element a, Element b) const {
    const auto r = raw(set_.index(a), set_.index(b));
    if (r == kUndefined) return std::nullopt;
    return set_.element(r);
  }

  // a*b including the identity and inverse laws.
  std::optional<Element> multiply(Element a, Element b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    if (b == set_.dagger(a)) return 0;
    return product(a, b);
  }

  // Index-level lookup of the nontrivial table.
  std::int8_t raw(int a_index, int b_index) const noexcept {
    return table_[static_cast<std::size_t>(a_index * set_.order() + b_index)];
  }

  std::size_t fact_count() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  std::vector<Triple> facts() const {
    std::vector<Triple> out;
    out.reserve(count_);
    for (Element a = set_.min_element(); a <= set_.max_element(); ++a) {
      for (Element b = set_.min_element(); b <= set_.max_element(); ++b) {
        if (auto c = product(a, b)) out.push_back(Triple{a, b, *c});
      }
    }
    return out;
  }

  // One canonical representative per Sigma_3-orbit, sorted by key_less.
  std::vector<Triple> generating_mults() const {
    std::set<Triple> seen;
    std::vector<Triple> out;
    for (const auto& f : facts()) {
      if (seen.count(f)) continue;
      auto orbit = sigma3_closure(set_, f);
      seen.insert(orbit.begin(), orbit.end());
      out.push_back(*std::min_element(orbit.begin(), orbit.end(), key_less));
    }
    std::sort(out.begin(), out.end(), key_less);
    return out;
  }

  friend bool operator==(const Bpg&, const Bpg&) = default;

 private:
  bool add_fact(const Triple& t) {
    auto& slot = table_[static_cast<std::size_t>(set_.index(t.a) * set_.order() +
                                                 set_.index(t.b))];
    const auto c = static_cast<std::int8_t>(set_.index(t.c));
    if (slot == kUndefined) {
      slot = c;
      ++count_;
      return true;
    }
    return slot == c;
  }

  InvolutiveSet set_;
  std::vector<std::int8_t> table_;
  std::size_t count_ = 0;
};

inline Bpg act(const PointedAut& g, const Bpg& p) {
  std::vector<Triple> facts;
  for (const auto& f : p.facts()) facts.push_back(act(g, f));
  return Bpg::from_facts(p.set(), facts);
}

// ---------------------------------------------------------------------------
// Atomic BPGs and the compatibility graph.

struct AtomicBpg {
  Triple generator;            // canonical representative
  std::vector<Triple> facts;   // its Sigma_3-closure, sorted

  friend bool operator==(const AtomicBpg&, const AtomicBpg&) = default;
};

// One atomic BPG per Sigma_3-orbit of nondegenerate suitable 3x3 matrices,
// ordered by generator.
inline std::vector<AtomicBpg> atomic_bpgs(InvolutiveSet set) {
  std::vector<AtomicBpg> out;
  std::set<Triple> seen;
  const auto elems = set.nonidentity();
  for (Element a : elems) {
    for (Element b : elems) {
      for (Element c : elems) {
        const Triple t{a, b, c};
        if (seen.count(t) || !is_nontrivial_fact(set, t)) continue;
        const auto m = triple_matrix(set, t);
        if (!is_nondegenerate(m) || !is_suitable(m)) continue;
        auto orbit = sigma3_closure(set, t);
        seen.insert(orbit.begin(), orbit.end());
        const Triple gen = *std::min_element(orbit.begin(), orbit.end(), key_less);
        out.push_back(AtomicBpg{gen, std::move(orbit)});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const AtomicBpg& x, const AtomicBpg& y) {
    return key_less(x.generator, y.generator);
  });
  return out;
}

// Products defined in both fact sets agree.
inline bool facts_compatible(InvolutiveSet set, std::span<const Triple> x,
                             std::span<const Triple> y) {
  const int o = set.order();
  std::vector<std::int8_t> t(static_cast<std::size_t>(o * o), -1);
  for (const auto& f : x) {
    t[static_cast<std::size_t>(set.index(f.a) * o + set.index(f.b))] =
        static_cast<std::int8_t>(set.index(f.c));
  }
  for (const auto& f : y) {
    const auto c = t[static_cast<std::size_t>(set.index(f.a) * o + set.index(f.b))];
    if (c != -1 && c != set.index(f.c)) return false;
  }
  return true;
}

struct CompatGraph {
  InvolutiveSet set;
  std::vector<AtomicBpg> nodes;
  std::vector<Bitset> adjacency;  // no self loops

  std::size_t node_count() const noexcept { return nodes.size(); }

  bool edge(std::size_t i, std::size_t j) const { return adjacency[i].test(j); }

  std::size_t edge_count() const {
    std::size_t n = 0;
    for (const auto& a : adjacency) n += a.count();
    return n / 2;
  }

  // Node holding a given fact.
  std::optional<std::size_t> node_of(const Triple& t) const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (std::binary_search(nodes[i].facts.begin(), nodes[i].facts.end(), t)) {
        return i;
      }
    }
    return std::nullopt;
  }
};

inline CompatGraph compat_graph(InvolutiveSet set) {
  CompatGraph g{set, atomic_bpgs(set), {}};
  const auto n = g.nodes.size();
  g.adjacency.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (facts_compatible(set, g.nodes[i].facts, g.nodes[j].facts)) {
        g.adjacency[i].set(j);
        g.adjacency[j].set(i);
      }
    }
  }
  return g;
}

// Number of cliques, the empty clique included.
inline std::uint64_t count_cliques(const CompatGraph& g) {
  const auto n = g.node_count();
  std::uint64_t total = 1;
  auto rec = [&](auto&& self, const Bitset& cand) -> void {
    for (auto v = cand.next(0); v != Bitset::npos; v = cand.next(v + 1)) {
      ++total;
      Bitset next = cand;
      next &= g.adjacency[v];
      next.clear_through(v);
      self(self, next);
    }
  };
  Bitset all(n);
  for (std::size_t i = 0; i < n; ++i) all.set(i);
  rec(rec, all);
  return total;
}

// A BPG on I chosen as the canonical member of its Aut(I)-orbit, with the
// clique it comes from and its stabilizer Aut(P) <= Aut(I).
struct BpgOrbitRep {
  Bpg bpg;
  std::vector<std::size_t> clique;
  std::vector<PointedAut> stabilizer;
};

namespace detail {

// Node permutation induced by each automorphism.
inline std::vector<std::vector<std::uint16_t>> node_actions(
    const CompatGraph& g, std::span<const PointedAut> auts) {
  const InvolutiveSet set = g.set;
  const int o = set.order();
  std::vector<int> fact_node(static_cast<std::size_t>(o * o * o), -1);
  auto code = [&](const Triple& t) {
    return static_cast<std::size_t>((set.index(t.a) * o + set.index(t.b)) * o +
                                    set.index(t.c));
  };
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    for (const auto& f : g.nodes[v].facts) fact_node[code(f)] = static_cast<int>(v);
  }
  std::vector<std::vector<std::uint16_t>> out;
  out.reserve(auts.size());
  for (const auto& a : auts) {
    std::vector<std::uint16_t> perm(g.nodes.size());
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
      perm[v] = static_cast<std::uint16_t>(fact_node[code(act(a, g.nodes[v].generator))]);
    }
    out.push_back(std::move(perm));
  }
  return out;
}

// Lex-min test of a sorted index set under a list of permutations (each a
// vector indexable by element).  On success returns the indices of the
// permutations fixing the set.
template <typename Perm>
std::optional<std::vector<std::size_t>> canonical_stabilizer(
    const Bitset& members, std::span<const std::size_t> elems,
    std::span<const Perm> perms, std::size_t universe) {
  std::vector<std::size_t> stab;
  Bitset image(universe);
  for (std::size_t p = 0; p < perms.size(); ++p) {
    image.clear();
    const auto& perm = perms[p];
    for (auto e : elems) image.set(static_cast<std::size_t>(perm[e]));
    const int c = compare_sorted(image, members);
    if (c < 0) return std::nullopt;
    if (c == 0) stab.push_back(p);
  }
  return stab;
}

}  // namespace detail

// Orbit representatives of the BPGs on `set` (empty table included), via
// canonical-minimum clique search in the compatibility graph.  A clique is
// kept iff it is lexicographically least in its orbit; minimality is
// inherited by prefixes, which prunes the search.
inline std::vector<BpgOrbitRep> bpgs_on(InvolutiveSet set) {
  const auto g = compat_graph(set);
  const auto auts = aut_group(set);
  const auto perms = detail::node_actions(g, auts);
  const auto n = g.node_count();

  std::vector<BpgOrbitRep> out;
  std::vector<std::size_t> clique;
  Bitset members(n);

  auto emit = [&](const std::vector<std::size_t>& stab_idx) {
    std::vector<Triple> mults;
    for (auto v : clique) mults.push_back(g.nodes[v].generator);
    BpgOrbitRep rep{Bpg::from_generators(set, mults), clique, {}};
    rep.stabilizer.reserve(stab_idx.size());
    for (auto i : stab_idx) rep.stabilizer.push_back(auts[i]);
    out.push_back(std::move(rep));
  };

  auto rec = [&](auto&& self, const Bitset& cand) -> void {
    for (auto v = cand.next(0); v != Bitset::npos; v = cand.next(v + 1)) {
      clique.push_back(v);
      members.set(v);
      auto stab = detail::canonical_stabilizer<std::vector<std::uint16_t>>(
          members, clique, perms, n);
      if (stab) {
        emit(*stab);
        Bitset next = cand;
        next &= g.adjacency[v];
        next.clear_through(v);
        self(self, next);
      }
      members.reset(v);
      clique.pop_back();
    }
  };

  std::vector<std::size_t> all_idx(auts.size());
  std::iota(all_idx.begin(), all_idx.end(), 0);
  emit(all_idx);
  Bitset all(n);
  for (std::size_t i = 0; i < n; ++i) all.set(i);
  rec(rec, all);
  return out;
}

// Multiplication defined on every pair of elements.
inline bool is_ip_loop(const Bpg& p) {
  const auto& s = p.set();
  for (Element a = s.min_element(); a <= s.max_element(); ++a) {
    for (Element b = s.min_element(); b <= s.max_element(); ++b) {
      if (!p.multiply(a, b)) return false;
    }
  }
  return true;
}

inline bool is_group(const Bpg& p) {
  if (!is_ip_loop(p)) return false;
  const auto& s = p.set();
  for (Element a = s.min_element(); a <= s.max_element(); ++a) {
    for (Element b = s.min_element(); b <= s.max_element(); ++b) {
      const Element ab = *p.multiply(a, b);
      for (Element c = s.min_element(); c <= s.max_element(); ++c) {
        if (*p.multiply(ab, c) != *p.multiply(a, *p.multiply(b, c))) return false;
      }
    }
  }
  return true;
}

// Nontrivial, and the graph on I linking x to x^ and the three elements of
// every fact is connected.  A wedge splits I into parts with no cross facts.
inline bool is_indecomposable(const Bpg& p) {
  const auto& s = p.set();
  const int o = s.order();
  if (o < 2) return false;
  std::vector<int> parent(static_cast<std::size_t>(o));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  };
  auto unite = [&](Element x, Element y) {
    parent[static_cast<std::size_t>(find(s.index(x)))] = find(s.index(y));
  };
  for (Element x : s.nonidentity()) unite(x, s.dagger(x));
  for (const auto& f : p.facts()) {
    unite(f.a, f.b);
    unite(f.a, f.c);
  }
  const int root = find(s.index(s.nonidentity().front()));
  for (Element x : s.nonidentity()) {
    if (find(s.index(x)) != root) return false;
  }
  return true;
}

// Subsets of elements as bitmasks over element indices.
using ElementMask = std::uint32_t;

inline ElementMask mask_of(InvolutiveSet set, std::span<const Element> xs) {
  ElementMask m = 0;
  for (Element x : xs) m |= ElementMask{1} << set.index(x);
  return m;
}

inline std::vector<Element> mask_elements(InvolutiveSet set, ElementMask m) {
  std::vector<Element> out;
  for (int i = 0; i < set.order(); ++i) {
    if ((m >> i) & 1u) out.push_back(set.element(i));
  }
  return out;
}

// Inclusion-maximal members of a family, sorted by (size desc, mask).
inline std::vector<ElementMask> maximal_masks(std::vector<ElementMask> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<ElementMask> out;
  for (auto m : family) {
    bool dominated = false;
    for (auto o : family) {
      if (o != m && (o & m) == m) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](ElementMask x, ElementMask y) {
    const int px = std::popcount(x), py = std::popcount(y);
    return px != py ? px > py : x < y;
  });
  return out;
}

namespace detail {

// Supports of subgroups witnessed by simplices of dimension <= 2: the trivial
// group, each fixed point, and each free x with x*x = x^.
inline std::vector<ElementMask> low_subgroup_supports(const Bpg& p) {
  const auto& s = p.set();
  std::vector<ElementMask> out{ElementMask{1} << s.index(0)};
  for (Element x : s.nonidentity()) {
    if (s.dagger(x) == x) {
      const Element xs[] = {0, x};
      out.push_back(mask_of(s, xs));
    }
  }
  for (const auto& f : p.facts()) {
    const Element xs[] = {0, f.a, f.b, f.c, s.dagger(f.a), s.dagger(f.b), s.dagger(f.c)};
    const auto m = mask_of(s, xs);
    if (std::popcount(m) == 3) out.push_back(m);
  }
  return out;
}

}  // namespace detail

// Maximal subgroups of P regarded as a 2-skeletal partial group.  A subset S
// is a subgroup when some nondegenerate (|S|-1)-simplex has all entries in S,
// so only groups of order <= 3 occur here.
inline std::vector<std::vector<Element>> maximal_subgroups(const Bpg& p) {
  std::vector<std::vector<Element>> out;
  for (auto m : maximal_masks(detail::low_subgroup_supports(p))) {
    out.push_back(mask_elements(p.set(), m));
  }
  return out;
}

}  // namespace pgenum
