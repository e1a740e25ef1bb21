#pragma once

// Dimension-raising enumeration.  A partial group is stored as its BPG plus,
// for each k >= 3, the Segal words of its nondegenerate k-simplices.  An
// (n-1)-dimensional node is extended by choosing a nonempty set of
// Sigma_{n+1}-orbits of admissible n-words, one set per Aut-orbit.

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <thread>
#include <utility>
#include <vector>

#include "pgenum/bitset.hpp"
#include "pgenum/bpgkit.hpp"
#include "pgenum/error.hpp"
#include "pgenum/symcore.hpp"
#include "pgenum/wordset.hpp"

namespace pgenum {

class PartialGroup {
 public:
  PartialGroup() = default;

  // sk_2 BP, or the 1-skeleton when P has no nontrivial products.
  explicit PartialGroup(Bpg bpg) : bpg_(std::move(bpg)) {}

  // `higher[k-3]` holds the Segal words of the nondegenerate k-simplices.
  PartialGroup(Bpg bpg, std::vector<std::vector<PackedWord>> higher)
      : bpg_(std::move(bpg)), higher_(std::move(higher)) {
    for (auto& l : higher_) std::sort(l.begin(), l.end());
    while (!higher_.empty() && higher_.back().empty()) higher_.pop_back();
    for (const auto& l : higher_) {
      if (l.empty()) throw IntegrityError("a level below the top is empty");
    }
  }

  const Bpg& bpg() const noexcept { return bpg_; }
  const InvolutiveSet& set() const noexcept { return bpg_.set(); }
  int order() const noexcept { return set().order(); }

  // Highest level holding a nondegenerate simplex.
  int top_level() const noexcept {
    if (!higher_.empty()) return 2 + static_cast<int>(higher_.size());
    if (!bpg_.empty()) return 2;
    return order() >= 2 ? 1 : 0;
  }

  // Sorted Segal words of level k >= 3 (empty above the top).
  std::span<const PackedWord> level(int k) const {
    if (k < 3) throw PreconditionError("stored levels start at dimension 3");
    const auto i = static_cast<std::size_t>(k - 3);
    if (i >= higher_.size()) return {};
    return higher_[i];
  }

  const std::vector<std::vector<PackedWord>>& higher() const noexcept {
    return higher_;
  }

  // Sorted Segal words of every nondegenerate k-simplex, any k >= 1.
  std::vector<PackedWord> segal_words(int k) const {
    const auto& s = set();
    std::vector<PackedWord> out;
    if (k == 1) {
      for (Element x : s.nonidentity()) {
        const Element w[] = {x};
        out.push_back(pack_word(s, w));
      }
    } else if (k == 2) {
      for (const auto& f : bpg_.facts()) {
        const Element w[] = {f.b, f.a};
        out.push_back(pack_word(s, w));
      }
      std::sort(out.begin(), out.end());
    } else if (k >= 3) {
      auto l = level(k);
      out.assign(l.begin(), l.end());
    }
    return out;
  }

  bool contains(const Word& segal) const {
    const int k = static_cast<int>(segal.letters.size());
    if (k < 1 || segal.set != set()) return false;
    for (Element x : segal.letters) {
      if (x == 0 || !set().contains(x)) return false;
    }
    if (k == 1) return true;
    if (k == 2) {
      return bpg_.product(segal.letters[1], segal.letters[0]).has_value();
    }
    auto l = level(k);
    return std::binary_search(l.begin(), l.end(), pack_word(set(), segal.letters));
  }

  void push_level(std::vector<PackedWord> words) {
    if (words.empty()) throw PreconditionError("cannot push an empty level");
    if (bpg_.empty()) throw PreconditionError("1-dimensional groups have no higher levels");
    std::sort(words.begin(), words.end());
    higher_.push_back(std::move(words));
  }

  void truncate(int k) {
    if (k < 2) throw PreconditionError("skeleta below dimension 2 are not partial groups here");
    if (static_cast<std::size_t>(k - 2) < higher_.size()) {
      higher_.resize(static_cast<std::size_t>(k - 2));
    }
  }

  friend bool operator==(const PartialGroup&, const PartialGroup&) = default;

 private:
  Bpg bpg_;
  std::vector<std::vector<PackedWord>> higher_;
};

namespace detail {

inline std::vector<std::int8_t> dagger_indices(InvolutiveSet s) {
  std::vector<std::int8_t> d(static_cast<std::size_t>(s.order()));
  for (int i = 0; i < s.order(); ++i) {
    d[static_cast<std::size_t>(i)] =
        static_cast<std::int8_t>(s.index(s.dagger(s.element(i))));
  }
  return d;
}

// Fills the (n+1)x(n+1) index matrix of a Segal word using the nontrivial
// table: entry(i,j) = a_j * entry(i,j-1).  False if a product is missing.
inline bool segal_matrix(const Bpg& p, std::span<const std::int8_t> dag,
                         const std::int8_t* w, int n, std::int8_t* m) {
  const int s = n + 1;
  const auto zero = static_cast<std::int8_t>(p.set().index(0));
  for (int i = 0; i < s; ++i) {
    m[i * s + i] = zero;
    for (int j = i + 1; j < s; ++j) {
      std::int8_t v = w[j - 1];
      if (j > i + 1) {
        v = p.raw(w[j - 1], m[i * s + j - 1]);
        if (v == Bpg::kUndefined) return false;
      }
      m[i * s + j] = v;
      m[j * s + i] = dag[static_cast<std::size_t>(v)];
    }
  }
  return true;
}

}  // namespace detail

// Matrix of a Segal word (a_1..a_n): entry(i,j) = a_j(a_{j-1}(...a_{i+1})).
inline SimplexMatrix word_to_matrix(const Word& w, const Bpg& p) {
  const auto& s = p.set();
  if (w.set != s) throw PreconditionError("word and BPG use different sets");
  const int n = static_cast<int>(w.letters.size());
  std::vector<Element> e(static_cast<std::size_t>((n + 1) * (n + 1)), 0);
  auto at = [&](int i, int j) -> Element& {
    return e[static_cast<std::size_t>(i * (n + 1) + j)];
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Element v = w.letters[static_cast<std::size_t>(j - 1)];
      if (j > i + 1) {
        auto prod = p.multiply(v, at(i, j - 1));
        if (!prod) throw AdmissibilityError("undefined product in word");
        v = *prod;
      }
      at(i, j) = v;
      at(j, i) = s.dagger(v);
    }
  }
  return SimplexMatrix(s, n, std::move(e));
}

inline SimplexMatrix word_to_matrix(InvolutiveSet s, PackedWord w, const Bpg& p) {
  return word_to_matrix(Word{s, unpack_word(s, w)}, p);
}

// Admissible n-words of a node, one per Sigma_{n+1}-orbit, together with the
// full orbits (the `blocked` words) indexed by orbit id.
struct AdmissibleLevel {
  int n = 0;
  std::vector<PackedWord> reps;
  std::vector<std::vector<PackedWord>> orbits;  // each sorted
  WordMap orbit_of;
};

namespace detail {

// Adds the Sigma_{n+1}-orbit of the simplex with index matrix m to `blocked`
// under id `orbit`, returning its Segal words.  Breadth-first over adjacent
// transpositions, deduplicated by Segal word.
inline std::vector<PackedWord> sigma_orbit(const std::int8_t* m, int n,
                                           std::uint32_t orbit, WordMap& blocked) {
  const int s = n + 1;
  std::vector<std::int8_t> queue;  // permutations, s bytes each
  std::vector<PackedWord> words;
  std::int8_t perm[kMaxOrder];
  std::int8_t letters[kMaxOrder];
  auto key_of = [&](const std::int8_t* p) {
    for (int i = 0; i < n; ++i) letters[i] = m[p[i] * s + p[i + 1]];
    return pack_indices(std::span<const std::int8_t>(letters, static_cast<std::size_t>(n)));
  };
  for (int i = 0; i < s; ++i) perm[i] = static_cast<std::int8_t>(i);
  const PackedWord k0 = key_of(perm);
  blocked.insert(k0, orbit);
  words.push_back(k0);
  queue.insert(queue.end(), perm, perm + s);
  for (std::size_t head = 0; head < queue.size(); head += static_cast<std::size_t>(s)) {
    for (int t = 0; t < n; ++t) {
      std::copy(queue.begin() + static_cast<std::ptrdiff_t>(head),
                queue.begin() + static_cast<std::ptrdiff_t>(head) + s, perm);
      std::swap(perm[t], perm[t + 1]);
      const PackedWord k = key_of(perm);
      if (blocked.insert(k, orbit)) {
        words.push_back(k);
        queue.insert(queue.end(), perm, perm + s);
      }
    }
  }
  std::sort(words.begin(), words.end());
  return words;
}

}  // namespace detail

// Scans every nondegenerate (n-1)-simplex (a_1..a_{n-1}) of `pg` and every
// a_n in I.  A word is admissible when it is not yet blocked, all faces d_i
// are nondegenerate (n-1)-simplices of pg, and for n = 3 the two bracketings
// of a_3 a_2 a_1 agree.
inline AdmissibleLevel admissible_level(const PartialGroup& pg, int n) {
  if (n < 3) throw PreconditionError("admissible words start at dimension 3");
  AdmissibleLevel out;
  out.n = n;
  if (pg.top_level() != n - 1) return out;

  const Bpg& p = pg.bpg();
  const auto& s = p.set();
  const auto dag = detail::dagger_indices(s);
  std::vector<std::int8_t> letters;
  for (Element x : s.nonidentity()) letters.push_back(static_cast<std::int8_t>(s.index(x)));

  const auto base = pg.segal_words(n - 1);
  const WordSet below(n - 1 >= 3 ? std::span<const PackedWord>(base)
                                 : std::span<const PackedWord>());

  std::int8_t w[kMaxOrder];
  std::int8_t face[kMaxOrder];
  std::int8_t mat[kMaxOrder * kMaxOrder];
  const auto face_in = [&](int len) {
    return below.contains(pack_indices(std::span<const std::int8_t>(face, static_cast<std::size_t>(len))));
  };

  for (PackedWord x : base) {
    unpack_indices(x, n - 1, w);
    for (std::int8_t last : letters) {
      w[n - 1] = last;
      const PackedWord key = pack_indices(std::span<const std::int8_t>(w, static_cast<std::size_t>(n)));
      if (out.orbit_of.find(key) != WordMap::npos) continue;

      bool ok = true;
      if (n == 3) {
        const auto q = p.raw(w[2], w[1]);  // d_0 = (a2, a3)
        const auto ab = p.raw(w[1], w[0]);
        if (q == Bpg::kUndefined || ab == Bpg::kUndefined) continue;
        const auto r1 = p.raw(w[2], ab);   // d_1 = (a2 a1, a3)
        const auto r2 = p.raw(q, w[0]);    // d_2 = (a1, a3 a2)
        ok = r1 != Bpg::kUndefined && r1 == r2;
      } else {
        std::copy(w + 1, w + n, face);  // d_0
        ok = face_in(n - 1);
        for (int i = 1; ok && i < n; ++i) {
          const auto prod = p.raw(w[i], w[i - 1]);
          if (prod == Bpg::kUndefined) {
            ok = false;
            break;
          }
          int k = 0;
          for (int j = 0; j < i - 1; ++j) face[k++] = w[j];
          face[k++] = prod;
          for (int j = i + 1; j < n; ++j) face[k++] = w[j];
          ok = face_in(n - 1);
        }
      }
      if (!ok) continue;
      if (!detail::segal_matrix(p, dag, w, n, mat)) {
        throw AdmissibilityError("admissible word has an undefined entry");
      }
      const auto id = static_cast<std::uint32_t>(out.reps.size());
      out.reps.push_back(key);
      out.orbits.push_back(detail::sigma_orbit(mat, n, id, out.orbit_of));
    }
  }
  return out;
}

struct ExtensionNode {
  PartialGroup pg;
  std::vector<PointedAut> aut;  // stabilizer of pg in Aut(I)
};

inline std::vector<Word> admissible_words(const ExtensionNode& node, int n) {
  const auto level = admissible_level(node.pg, n);
  std::vector<Word> out;
  for (auto w : level.reps) out.push_back(Word{node.pg.set(), unpack_word(node.pg.set(), w)});
  return out;
}

inline PartialGroup act(const PointedAut& g, const PartialGroup& x) {
  const auto& s = x.set();
  std::vector<std::vector<PackedWord>> higher;
  std::int8_t w[kMaxOrder];
  for (std::size_t l = 0; l < x.higher().size(); ++l) {
    const int len = static_cast<int>(l) + 3;
    std::vector<PackedWord> level;
    level.reserve(x.higher()[l].size());
    for (auto word : x.higher()[l]) {
      unpack_indices(word, len, w);
      for (int i = 0; i < len; ++i) w[i] = g.index_image(w[i]);
      level.push_back(pack_indices(std::span<const std::int8_t>(w, static_cast<std::size_t>(len))));
    }
    higher.push_back(std::move(level));
  }
  (void)s;
  return PartialGroup(act(g, x.bpg()), std::move(higher));
}

namespace detail {

inline std::vector<std::vector<std::uint32_t>> orbit_actions(
    const PartialGroup& pg, const AdmissibleLevel& adm, std::span<const PointedAut> auts) {
  const int n = adm.n;
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(auts.size());
  std::int8_t w[kMaxOrder];
  for (const auto& g : auts) {
    std::vector<std::uint32_t> perm(adm.reps.size());
    for (std::size_t j = 0; j < adm.reps.size(); ++j) {
      unpack_indices(adm.reps[j], n, w);
      for (int i = 0; i < n; ++i) w[i] = g.index_image(w[i]);
      const auto id = adm.orbit_of.find(pack_indices(std::span<const std::int8_t>(w, static_cast<std::size_t>(n))));
      if (id == WordMap::npos) {
        throw IntegrityError("automorphism does not preserve the admissible words");
      }
      perm[j] = id;
    }
    out.push_back(std::move(perm));
  }
  (void)pg;
  return out;
}

}  // namespace detail

// Calls f(child) for one representative of each Aut(node)-orbit of nonempty
// subsets of admissible orbits.  Subsets are visited depth-first in
// increasing index order and only lexicographically least members of their
// orbit are kept; the property is inherited by prefixes.
template <typename F>
void for_each_extension(const ExtensionNode& node, const AdmissibleLevel& adm, F&& f) {
  const std::size_t m = adm.reps.size();
  if (m == 0) return;
  const auto perms = detail::orbit_actions(node.pg, adm, node.aut);

  std::vector<std::size_t> chosen;
  Bitset members(m);

  auto make_child = [&](const std::vector<std::size_t>& stab) {
    std::size_t total = 0;
    for (auto j : chosen) total += adm.orbits[j].size();
    std::vector<PackedWord> level;
    level.reserve(total);
    for (auto j : chosen) level.insert(level.end(), adm.orbits[j].begin(), adm.orbits[j].end());
    ExtensionNode child{node.pg, {}};
    child.pg.push_level(std::move(level));
    child.aut.reserve(stab.size());
    for (auto i : stab) child.aut.push_back(node.aut[i]);
    return child;
  };

  auto rec = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t v = from; v < m; ++v) {
      chosen.push_back(v);
      members.set(v);
      auto stab = detail::canonical_stabilizer<std::vector<std::uint32_t>>(
          members, chosen, perms, m);
      if (stab) {
        f(make_child(*stab));
        self(self, v + 1);
      }
      members.reset(v);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

// All extensions of a node at dimension n = dim + 1.
template <typename F>
void extensions(const ExtensionNode& node, int n, F&& f) {
  const auto adm = admissible_level(node.pg, n);
  for_each_extension(node, adm, std::forward<F>(f));
}

// Depth-first traversal below a node; visit(node) is called on the node and
// every descendant, parents before children.  Only the current path is held.
template <typename F>
void extend_depth_first(const ExtensionNode& node, int max_dim, F&& visit) {
  visit(node);
  const int dim = node.pg.top_level();
  if (dim < 2 || dim >= max_dim) return;
  const auto adm = admissible_level(node.pg, dim + 1);
  for_each_extension(node, adm, [&](const ExtensionNode& child) {
    extend_depth_first(child, max_dim, visit);
  });
}

// Drops all levels above k (k >= 2).
inline PartialGroup skeleton(const PartialGroup& x, int k) {
  PartialGroup out = x;
  out.truncate(k);
  return out;
}

// The 2-coskeletal hull BP: every admissible word accepted at each level.
inline PartialGroup build_bp(const Bpg& p) {
  PartialGroup pg(p);
  for (int n = 3; n <= p.set().order() - 1; ++n) {
    const auto adm = admissible_level(pg, n);
    if (adm.reps.empty()) break;
    std::vector<PackedWord> level;
    for (const auto& o : adm.orbits) level.insert(level.end(), o.begin(), o.end());
    pg.push_level(std::move(level));
  }
  return pg;
}

// The partial group whose nondegenerate simplices are the injective
// restrictions of the given matrices.  Throws IntegrityError when a matrix is
// degenerate or unsuitable, or the matrices disagree on a product.
inline PartialGroup generate(InvolutiveSet set, std::span<const SimplexMatrix> gens) {
  std::vector<Triple> facts;
  std::vector<std::vector<PackedWord>> higher;
  std::int8_t w[kMaxOrder];
  for (const auto& m : gens) {
    if (m.set() != set) throw IntegrityError("generator over a different involutive set");
    if (m.dim() < 1 || !is_nondegenerate(m) || !is_suitable(m)) {
      throw IntegrityError("generator is degenerate or not suitable");
    }
    for (int k = 2; k <= m.dim(); ++k) {
      for_each_injection(k, m.dim(), [&](const std::vector<int>& v) {
        if (k == 2) {
          facts.push_back(Triple{m(v[1], v[2]), m(v[0], v[1]), m(v[0], v[2])});
          return;
        }
        for (int i = 0; i < k; ++i) {
          w[i] = static_cast<std::int8_t>(set.index(m(v[static_cast<std::size_t>(i)],
                                                       v[static_cast<std::size_t>(i + 1)])));
        }
        if (higher.size() < static_cast<std::size_t>(k - 2)) higher.resize(static_cast<std::size_t>(k - 2));
        higher[static_cast<std::size_t>(k - 3)].push_back(
            pack_indices(std::span<const std::int8_t>(w, static_cast<std::size_t>(k))));
      });
    }
  }
  std::sort(facts.begin(), facts.end());
  facts.erase(std::unique(facts.begin(), facts.end()), facts.end());
  for (auto& l : higher) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  PartialGroup pg(Bpg::from_facts(set, facts), std::move(higher));
  // Segal words are injective: each stored word must rebuild from the table.
  const auto dag = detail::dagger_indices(set);
  std::int8_t mat[kMaxOrder * kMaxOrder];
  for (std::size_t l = 0; l < pg.higher().size(); ++l) {
    const int n = static_cast<int>(l) + 3;
    for (PackedWord word : pg.higher()[l]) {
      unpack_indices(word, n, w);
      if (!detail::segal_matrix(pg.bpg(), dag, w, n, mat)) {
        throw IntegrityError("generators disagree on a product");
      }
    }
  }
  return pg;
}

// ---------------------------------------------------------------------------
// Whole-order driver.

struct EnumerateOptions {
  std::optional<int> max_dim;
  bool bpg_only = false;
  bool indecomposable_only = false;
  unsigned threads = 1;
  // Called on the calling thread after each root BPG is fully processed.
  std::function<void(std::size_t done, std::size_t total)> progress;
};

struct Root {
  InvolutiveSet set;
  BpgOrbitRep rep;
};

// (free, fixed) pairs of a given order, free ascending.
inline std::vector<InvolutiveSet> involutive_types(int order) {
  std::vector<InvolutiveSet> out;
  for (int f = 0; 2 * f <= order - 1; ++f) out.emplace_back(f, order - 1 - 2 * f);
  return out;
}

// One root per Aut(I)-orbit of BPGs on each involutive set of the order.
inline std::vector<Root> roots_of_order(int order, bool indecomposable_only = false) {
  std::vector<Root> out;
  for (auto set : involutive_types(order)) {
    for (auto& rep : bpgs_on(set)) {
      if (indecomposable_only && !is_indecomposable(rep.bpg)) continue;
      out.push_back(Root{set, std::move(rep)});
    }
  }
  return out;
}

inline int dimension_cap(int order, const EnumerateOptions& opt) {
  int cap = order - 1;
  if (opt.bpg_only) cap = std::min(cap, 2);
  if (opt.max_dim) cap = std::min(cap, *opt.max_dim);
  return cap;
}

// Every partial group descending from one root, in canonical order.
template <typename F>
void enumerate_root(const Root& root, const EnumerateOptions& opt, F&& sink) {
  const int cap = dimension_cap(root.set.order(), opt);
  ExtensionNode node{PartialGroup(root.rep.bpg), root.rep.stabilizer};
  if (node.pg.top_level() > cap) return;
  extend_depth_first(node, cap, [&](const ExtensionNode& n) { sink(n.pg); });
}

namespace detail {

// Runs work(i, emit) for each root index on `threads` workers and hands the
// emitted values to sink in root order.
template <typename T, typename Work, typename Sink>
void ordered_parallel(std::size_t count, unsigned threads, Work&& work, Sink&& sink,
                      const std::function<void(std::size_t, std::size_t)>& progress) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      work(i, [&](T v) { sink(std::move(v)); });
      if (progress) progress(i + 1, count);
    }
    return;
  }
  std::vector<std::vector<T>> buffers(count);
  std::vector<char> done(count, 0);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      std::vector<T> local;
      try {
        work(i, [&](T v) { local.push_back(std::move(v)); });
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
      }
      std::lock_guard<std::mutex> lock(mu);
      buffers[i] = std::move(local);
      done[i] = 1;
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<T> batch;
    {
      std::unique_lock<std::mutex> lock(mu);
      cv.wait(lock, [&] { return done[i] != 0; });
      batch = std::move(buffers[i]);
    }
    if (!failure) {
      for (auto& v : batch) sink(std::move(v));
      if (progress) progress(i + 1, count);
    }
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

// One representative per isomorphism class of partial groups of `order`
// (order 1 yields the trivial group), delivered to sink on the calling
// thread in a schedule-independent order.
template <typename F>
void enumerate_order(int order, const EnumerateOptions& opt, F&& sink) {
  if (order < 1) throw PreconditionError("order must be at least 1");
  if (order == 1) {
    sink(PartialGroup(Bpg(InvolutiveSet(0, 0))));
    return;
  }
  const auto roots = roots_of_order(order, opt.indecomposable_only);
  detail::ordered_parallel<PartialGroup>(
      roots.size(), opt.threads,
      [&](std::size_t i, auto&& emit) {
        enumerate_root(roots[i], opt, [&](const PartialGroup& pg) { emit(pg); });
      },
      sink, opt.progress);
}

// Counts by (free, dimension) without materializing the corpus.
struct CountTable {
  int order = 0;
  std::map<std::pair<int, int>, std::uint64_t> cells;  // (free, dim) -> count

  std::uint64_t at(int free, int dim) const {
    auto it = cells.find({free, dim});
    return it == cells.end() ? 0 : it->second;
  }

  std::uint64_t row_total(int free) const {
    std::uint64_t n = 0;
    for (const auto& [k, v] : cells) {
      if (k.first == free) n += v;
    }
    return n;
  }

  std::uint64_t total() const {
    std::uint64_t n = 0;
    for (const auto& [k, v] : cells) n += v;
    return n;
  }
};

inline CountTable count_order(int order, const EnumerateOptions& opt) {
  CountTable table{order, {}};
  if (order < 2) return table;  // the trivial group is not counted
  const auto roots = roots_of_order(order, opt.indecomposable_only);
  using Tally = std::map<std::pair<int, int>, std::uint64_t>;
  detail::ordered_parallel<Tally>(
      roots.size(), opt.threads,
      [&](std::size_t i, auto&& emit) {
        Tally t;
        enumerate_root(roots[i], opt, [&](const PartialGroup& pg) {
          ++t[{pg.set().free(), pg.top_level()}];
        });
        emit(std::move(t));
      },
      [&](Tally t) {
        for (const auto& [k, v] : t) table.cells[k] += v;
      },
      opt.progress);
  return table;
}

}  // namespace pgenum
