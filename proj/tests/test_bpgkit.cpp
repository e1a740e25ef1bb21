#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "pgenum/bpgkit.hpp"
#include "pgenum/extender.hpp"

using namespace pgenum;

namespace {

// The order-6 BPG on (2,1) whose BP is its own 2-skeleton, from its full
// partial Cayley table (row * column).
Bpg counterexample() {
  const InvolutiveSet s(2, 1);
  const std::vector<Triple> facts{
      {-2, -2, -1}, {-2, -1, 3}, {-2, 1, 2}, {-1, 2, -2}, {-1, 3, 2}, {1, -2, 2},
      {1, 2, 3},   {2, -1, -2}, {2, 2, 1},  {2, 3, -1},  {3, -2, 1}, {3, 1, -2}};
  return Bpg::from_facts(s, facts);
}

// Isomorphism of BPGs by brute force over bijections of the nonidentity
// elements that commute with dagger (allowing different set types to fail).
bool bpg_isomorphic(const Bpg& x, const Bpg& y) {
  if (x.set() != y.set()) return false;
  for (const auto& g : aut_group(x.set())) {
    if (act(g, x) == y) return true;
  }
  return false;
}

}  // namespace

TEST(Sigma3, Closure) {
  const InvolutiveSet s(2, 0);
  const auto c = sigma3_closure(s, {1, 1, -2});
  EXPECT_EQ(c.size(), 6u);
  for (Triple t : {Triple{-1, -2, 1}, Triple{-2, -1, 1}, Triple{-1, -1, 2}, Triple{1, 2, -1},
                   Triple{2, 1, -1}, Triple{1, 1, -2}}) {
    EXPECT_TRUE(std::binary_search(c.begin(), c.end(), t)) << t;
  }
  const auto c3 = sigma3_closure(InvolutiveSet(1, 0), {1, 1, -1});
  EXPECT_EQ(c3, (std::vector<Triple>{{-1, -1, 1}, {1, 1, -1}}));
  for (const auto& t : c) EXPECT_EQ(sigma3_closure(s, t), c);
}

TEST(Sigma3, CanonicalRepresentative) {
  EXPECT_EQ(canonical_mult(InvolutiveSet(1, 0), {-1, -1, 1}), (Triple{1, 1, -1}));
  EXPECT_EQ(canonical_mult(InvolutiveSet(1, 2), {2, 1, 3}), (Triple{1, 3, 2}));
}

TEST(Bpg, Multiply) {
  const auto p = counterexample();
  EXPECT_EQ(p.multiply(-2, -1), 3);
  EXPECT_EQ(p.multiply(2, 1), std::nullopt);
  EXPECT_EQ(p.multiply(2, 2), 1);
  EXPECT_EQ(p.multiply(1, 2), 3);
  for (Element x : p.set().elements()) {
    EXPECT_EQ(p.multiply(0, x), x);
    EXPECT_EQ(p.multiply(x, 0), x);
    EXPECT_EQ(p.multiply(x, p.set().dagger(x)), 0);
  }
}

TEST(Bpg, RejectsInconsistentTables) {
  const InvolutiveSet s(2, 0);
  const std::vector<Triple> clash{{1, 1, -2}, {1, 1, 2}};
  EXPECT_THROW(Bpg::from_generators(s, clash), IntegrityError);
  const std::vector<Triple> open{{1, 1, -2}};
  EXPECT_THROW(Bpg::from_facts(s, open), IntegrityError);
  const std::vector<Triple> trivial{{1, -1, 0}};
  EXPECT_THROW(Bpg::from_generators(s, trivial), IntegrityError);
}

TEST(Bpg, GeneratingMults) {
  const InvolutiveSet s(1, 2);
  const std::vector<Triple> g{{1, 3, 2}, {1, 1, -1}};
  const auto p = Bpg::from_generators(s, g);
  EXPECT_EQ(p.generating_mults(), (std::vector<Triple>{{1, 1, -1}, {1, 3, 2}}));
  EXPECT_EQ(Bpg::from_generators(s, p.generating_mults()), p);
}

TEST(Atomics, Counts) {
  EXPECT_EQ(atomic_bpgs(InvolutiveSet(2, 0)).size(), 6u);
  EXPECT_EQ(atomic_bpgs(InvolutiveSet(1, 3)).size(), 11u);
  EXPECT_TRUE(atomic_bpgs(InvolutiveSet(0, 1)).empty());
  for (const auto& a : atomic_bpgs(InvolutiveSet(2, 2))) {
    EXPECT_GE(a.facts.size(), 1u);
    EXPECT_LE(a.facts.size(), 6u);
    EXPECT_TRUE(is_nondegenerate(triple_matrix(InvolutiveSet(2, 2), a.generator)));
  }
}

// Seven isomorphism types, told apart by the involutive subset their
// elements span: (free, fixed) in {(3,0),(2,1),(1,2),(0,3),(2,0),(1,1),(1,0)}.
TEST(Atomics, SevenClassesOverUniversalSet) {
  const InvolutiveSet s(3, 3);
  const auto atoms = atomic_bpgs(s);
  std::vector<Bpg> reps;
  std::set<std::pair<int, int>> types;
  for (const auto& a : atoms) {
    const auto p = Bpg::from_generators(s, std::vector<Triple>{a.generator});
    if (std::none_of(reps.begin(), reps.end(), [&](const Bpg& r) { return bpg_isomorphic(r, p); })) {
      reps.push_back(p);
      std::set<Element> support;
      for (Element x : {a.generator.a, a.generator.b, a.generator.c}) support.insert(std::abs(x));
      int f = 0, b = 0;
      for (Element x : support) (s.is_free(x) ? f : b)++;
      types.insert({f, b});
    }
  }
  EXPECT_EQ(reps.size(), 7u);
  EXPECT_EQ(types, (std::set<std::pair<int, int>>{{3, 0}, {2, 1}, {1, 2}, {0, 3}, {2, 0}, {1, 1}, {1, 0}}));
}

TEST(CompatGraph, TwoZero) {
  const auto g = compat_graph(InvolutiveSet(2, 0));
  EXPECT_EQ(g.node_count(), 6u);
  EXPECT_EQ(g.edge_count(), 7u);
  EXPECT_EQ(count_cliques(g), 14u);
  EXPECT_EQ(aut_group(InvolutiveSet(2, 0)).size(), 8u);
  EXPECT_EQ(bpgs_on(InvolutiveSet(2, 0)).size(), 6u);
  const auto a = *g.node_of({1, 1, -2});
  const auto b = *g.node_of({2, 2, 1});
  const auto c = *g.node_of({1, 1, -1});
  EXPECT_TRUE(g.edge(a, b));
  EXPECT_FALSE(g.edge(a, c));
}

TEST(CompatGraph, MaximalCliquesOneThree) {
  const auto g = compat_graph(InvolutiveSet(1, 3));
  std::size_t largest = 0;
  auto rec = [&](auto&& self, std::vector<std::size_t>& clique, std::size_t from) -> void {
    largest = std::max(largest, clique.size());
    for (std::size_t v = from; v < g.node_count(); ++v) {
      if (std::all_of(clique.begin(), clique.end(), [&](std::size_t u) { return g.edge(u, v); })) {
        clique.push_back(v);
        self(self, clique, v + 1);
        clique.pop_back();
      }
    }
  };
  std::vector<std::size_t> c;
  rec(rec, c, 0);
  EXPECT_EQ(largest, 4u);
  EXPECT_EQ(compat_graph(InvolutiveSet(0, 1)).node_count(), 0u);
}

TEST(CompatGraph, FactLevelMatchesMatrixLevel) {
  for (auto s : {InvolutiveSet(2, 0), InvolutiveSet(1, 2), InvolutiveSet(2, 1)}) {
    const auto g = compat_graph(s);
    for (std::size_t i = 0; i < g.node_count(); ++i) {
      for (std::size_t j = i + 1; j < g.node_count(); ++j) {
        bool all = true;
        for (const auto& f : g.nodes[i].facts)
          for (const auto& h : g.nodes[j].facts)
            all = all && compatible(triple_matrix(s, f), triple_matrix(s, h));
        EXPECT_EQ(g.edge(i, j), all);
      }
    }
  }
}

TEST(CompatGraph, AutomorphismsPreserveAdjacency) {
  const InvolutiveSet s(2, 1);
  const auto g = compat_graph(s);
  for (const auto& a : aut_group(s)) {
    for (std::size_t i = 0; i < g.node_count(); ++i) {
      for (std::size_t j = 0; j < g.node_count(); ++j) {
        if (i == j) continue;
        const auto gi = *g.node_of(act(a, g.nodes[i].generator));
        const auto gj = *g.node_of(act(a, g.nodes[j].generator));
        EXPECT_EQ(g.edge(i, j), g.edge(gi, gj));
      }
    }
  }
}

TEST(BpgsOn, Basics) {
  const auto trivial = bpgs_on(InvolutiveSet(0, 0));
  ASSERT_EQ(trivial.size(), 1u);
  EXPECT_TRUE(trivial[0].bpg.empty());
  std::size_t order5 = 0;
  for (auto s : {InvolutiveSet(0, 4), InvolutiveSet(1, 2), InvolutiveSet(2, 0)}) order5 += bpgs_on(s).size();
  EXPECT_EQ(order5, 13u);
}

// Orbit representatives are pairwise non-isomorphic, cover every clique, and
// carry their exact stabilizers.
TEST(BpgsOn, RepresentativesAndStabilizers) {
  for (auto s : {InvolutiveSet(2, 0), InvolutiveSet(1, 2), InvolutiveSet(0, 4), InvolutiveSet(2, 1)}) {
    const auto reps = bpgs_on(s);
    const auto auts = aut_group(s);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      std::set<PointedAut> stab;
      for (const auto& g : auts) {
        if (act(g, reps[i].bpg) == reps[i].bpg) stab.insert(g);
      }
      EXPECT_EQ(stab, std::set<PointedAut>(reps[i].stabilizer.begin(), reps[i].stabilizer.end()));
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        EXPECT_FALSE(bpg_isomorphic(reps[i].bpg, reps[j].bpg));
      }
    }
    // Orbit sizes add up to the clique count.
    std::uint64_t total = 0;
    for (const auto& r : reps) total += auts.size() / r.stabilizer.size();
    EXPECT_EQ(total, count_cliques(compat_graph(s)));
  }
}

TEST(Groups, Predicates) {
  const auto c3 = Bpg::from_generators(InvolutiveSet(1, 0), std::vector<Triple>{{1, 1, -1}});
  EXPECT_TRUE(is_group(c3));
  EXPECT_TRUE(is_ip_loop(c3));
  const Bpg free1(InvolutiveSet(1, 0));
  EXPECT_FALSE(is_group(free1));
  EXPECT_FALSE(is_ip_loop(free1));
  EXPECT_FALSE(is_group(counterexample()));
}

TEST(Subgroups, Examples) {
  const auto v4 = Bpg::from_generators(InvolutiveSet(0, 3), std::vector<Triple>{{1, 2, 3}});
  EXPECT_EQ(maximal_subgroups(v4), (std::vector<std::vector<Element>>{{0, 1}, {0, 2}, {0, 3}}));
  const auto c4 = Bpg::from_generators(InvolutiveSet(1, 1), std::vector<Triple>{{1, 1, 2}});
  EXPECT_EQ(maximal_subgroups(c4), (std::vector<std::vector<Element>>{{0, 2}}));
  const auto p2 = Bpg::from_generators(InvolutiveSet(1, 2), std::vector<Triple>{{1, 1, -1}, {1, 3, 2}});
  EXPECT_EQ(maximal_subgroups(p2), (std::vector<std::vector<Element>>{{-1, 0, 1}, {0, 2}, {0, 3}}));
}

TEST(BuildBp, Examples) {
  const auto v4 = Bpg::from_generators(InvolutiveSet(0, 3), std::vector<Triple>{{1, 2, 3}});
  const auto bv4 = build_bp(v4);
  EXPECT_EQ(bv4.top_level(), 3);
  // One orbit: all 3! Segal words of the single Sigma_4 orbit.
  EXPECT_EQ(bv4.level(3).size(), 6u);
  const auto free1 = build_bp(Bpg(InvolutiveSet(1, 0)));
  EXPECT_EQ(free1.top_level(), 1);
  EXPECT_EQ(build_bp(counterexample()).top_level(), 2);
}

TEST(BuildBp, SkeletonRecoversTable) {
  for (auto s : {InvolutiveSet(2, 0), InvolutiveSet(1, 2)}) {
    for (const auto& r : bpgs_on(s)) {
      const auto bp = build_bp(r.bpg);
      EXPECT_EQ(bp.bpg(), r.bpg);
      EXPECT_EQ(skeleton(bp, 2), PartialGroup(r.bpg));
    }
  }
}

TEST(Indecomposable, Bpg) {
  const auto c3 = Bpg::from_generators(InvolutiveSet(1, 1), std::vector<Triple>{{1, 1, -1}});
  EXPECT_FALSE(is_indecomposable(c3));
  EXPECT_TRUE(is_indecomposable(counterexample()));
  EXPECT_FALSE(is_indecomposable(Bpg(InvolutiveSet(0, 0))));
  EXPECT_TRUE(is_indecomposable(Bpg(InvolutiveSet(0, 1))));
}
