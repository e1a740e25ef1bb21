#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "pgenum/extender.hpp"
#include "pgenum/invariants.hpp"
#include "pgenum/reference_tables.hpp"

using namespace pgenum;

namespace {

// The cyclic group Z/n as a BPG, with `label` sending each element of the
// involutive set to its residue.
template <typename Label>
Bpg cyclic(InvolutiveSet s, int n, Label label) {
  std::map<int, Element> back;
  for (Element x : s.elements()) back[label(x)] = x;
  std::vector<Triple> facts;
  for (Element a : s.nonidentity()) {
    for (Element b : s.nonidentity()) {
      const int c = (label(a) + label(b)) % n;
      if (c != 0) facts.push_back({a, b, back.at(c)});
    }
  }
  return Bpg::from_facts(s, facts);
}

Bpg c5() {
  return cyclic(InvolutiveSet(2, 0), 5, [](Element x) { return (x + 5) % 5; });
}

Bpg c4() {
  // 1 -> 1, -1 -> 3, 2 -> 2
  return cyclic(InvolutiveSet(1, 1), 4, [](Element x) { return (x + 4) % 4; });
}

Bpg v4() { return Bpg::from_generators(InvolutiveSet(0, 3), std::vector<Triple>{{1, 2, 3}}); }

std::vector<PartialGroup> all_of_order(int order, unsigned threads = 1) {
  std::vector<PartialGroup> out;
  EnumerateOptions opt;
  opt.threads = threads;
  enumerate_order(order, opt, [&](PartialGroup pg) { out.push_back(std::move(pg)); });
  return out;
}

std::vector<SimplexMatrix> simplices(const PartialGroup& x, int k) {
  std::vector<SimplexMatrix> out;
  for (PackedWord w : x.segal_words(k)) out.push_back(word_to_matrix(x.set(), w, x.bpg()));
  return out;
}

}  // namespace

TEST(WordToMatrix, KleinFour) {
  const auto m = word_to_matrix(Word{InvolutiveSet(0, 3), {1, 3, 1}}, v4());
  EXPECT_EQ(m, SimplexMatrix::from_rows(InvolutiveSet(0, 3),
                                        {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}));
}

TEST(WordToMatrix, CyclicFive) {
  const InvolutiveSet s(2, 0);
  const auto m = word_to_matrix(Word{s, {2, 2, 2}}, c5());
  EXPECT_EQ(m, SimplexMatrix::from_rows(s, {{0, 2, -1, 1}, {-2, 0, 2, -1}, {1, -2, 0, 2}, {-1, 1, -2, 0}}));
  EXPECT_EQ(segal_word(m).letters, (std::vector<Element>{2, 2, 2}));
}

TEST(WordToMatrix, UndefinedProductThrows) {
  const Bpg free2(InvolutiveSet(2, 0));
  EXPECT_THROW(word_to_matrix(Word{free2.set(), {1, 2}}, free2), AdmissibilityError);
}

TEST(Admissible, Counts) {
  const auto c3 = Bpg::from_generators(InvolutiveSet(1, 0), std::vector<Triple>{{1, 1, -1}});
  EXPECT_TRUE(admissible_level(PartialGroup(c3), 3).reps.empty());
  const auto v = admissible_level(PartialGroup(v4()), 3);
  EXPECT_EQ(v.reps.size(), 1u);
  ASSERT_EQ(v.orbits.size(), 1u);
  EXPECT_EQ(v.orbits[0].size(), 6u);
  EXPECT_EQ(admissible_level(PartialGroup(c4()), 3).reps.size(), 1u);
}

// Every admissible word yields a simplex whose faces all lie one level down.
TEST(Admissible, FacesBelong) {
  for (auto p : {v4(), c4(), c5()}) {
    const PartialGroup pg(p);
    for (const auto& w : admissible_words(ExtensionNode{pg, aut_group(p.set())}, 3)) {
      const auto m = word_to_matrix(w, p);
      EXPECT_TRUE(is_nondegenerate(m));
      EXPECT_TRUE(is_suitable(m));
      for_each_injection(2, 3, [&](const std::vector<int>& v) {
        EXPECT_TRUE(pg.contains(segal_word(restrict(m, IndexMap(4, v)))));
      });
    }
  }
}

TEST(Extensions, KleinFour) {
  const auto p = v4();
  std::vector<ExtensionNode> kids;
  extensions(ExtensionNode{PartialGroup(p), aut_group(p.set())}, 3,
             [&](const ExtensionNode& c) { kids.push_back(c); });
  ASSERT_EQ(kids.size(), 1u);
  EXPECT_EQ(kids[0].pg, build_bp(p));
  EXPECT_EQ(kids[0].aut.size(), 6u);
}

TEST(Extensions, CyclicFive) {
  // One admissible orbit, hence one extension: BC5 itself at dimension 3.
  const auto p = c5();
  std::vector<PointedAut> stab;
  for (const auto& g : aut_group(p.set())) {
    if (act(g, p) == p) stab.push_back(g);
  }
  EXPECT_EQ(stab.size(), 4u);
  EXPECT_EQ(admissible_level(PartialGroup(p), 3).reps.size(), 1u);
  std::vector<ExtensionNode> kids;
  extensions(ExtensionNode{PartialGroup(p), stab}, 3, [&](const ExtensionNode& c) { kids.push_back(c); });
  ASSERT_EQ(kids.size(), 1u);
  EXPECT_EQ(kids[0].pg, skeleton(build_bp(p), 3));
  EXPECT_EQ(kids[0].aut.size(), 4u);
}

// Children sit one dimension up, restrict to the parent, and carry their
// exact stabilizers.
TEST(Extensions, ChildrenOfOrderSixRoots) {
  for (const auto& root : roots_of_order(6)) {
    const ExtensionNode node{PartialGroup(root.rep.bpg), root.rep.stabilizer};
    if (node.pg.top_level() < 2) continue;
    extensions(node, 3, [&](const ExtensionNode& c) {
      EXPECT_EQ(c.pg.top_level(), 3);
      EXPECT_EQ(skeleton(c.pg, 2), node.pg);
      std::size_t stab = 0;
      for (const auto& g : aut_group(root.set)) stab += act(g, c.pg) == c.pg;
      EXPECT_EQ(stab, c.aut.size());
      for (const auto& g : c.aut) EXPECT_EQ(act(g, c.pg), c.pg);
    });
  }
}

TEST(Skeleton, Examples) {
  const auto bv4 = build_bp(v4());
  EXPECT_EQ(skeleton(bv4, 2), PartialGroup(v4()));
  EXPECT_EQ(skeleton(bv4, 3), bv4);
  EXPECT_EQ(skeleton(bv4, 7), bv4);
  const auto bc5 = build_bp(c5());
  EXPECT_EQ(bc5.top_level(), 4);
  EXPECT_EQ(skeleton(bc5, 3).top_level(), 3);
}

TEST(Generate, RebuildsFromTopSimplex) {
  const auto bc5 = build_bp(c5());
  const std::vector<SimplexMatrix> top = simplices(bc5, 4);
  EXPECT_EQ(generate(bc5.set(), top), bc5);
  const std::vector<SimplexMatrix> one{top.front()};
  EXPECT_EQ(generate(bc5.set(), one).top_level(), 4);
}

TEST(Enumerate, SmallOrders) {
  EXPECT_EQ(all_of_order(1).size(), 1u);
  EXPECT_EQ(all_of_order(2).size(), 1u);
  EXPECT_EQ(all_of_order(3).size(), 3u);
  EXPECT_EQ(all_of_order(4).size(), 7u);
  EXPECT_THROW(all_of_order(0), PreconditionError);
}

TEST(Enumerate, PartialGroupCountsThroughOrderEight) {
  const auto want = reference::cells(reference::partial_groups());
  for (int order = 2; order <= 8; ++order) {
    const auto t = count_order(order, EnumerateOptions{});
    std::map<std::tuple<int, int, int>, std::uint64_t> got;
    for (const auto& [k, v] : t.cells) got[{order, k.first, k.second}] = v;
    std::map<std::tuple<int, int, int>, std::uint64_t> expect;
    for (const auto& [k, v] : want) {
      if (std::get<0>(k) == order) expect[k] = v;
    }
    EXPECT_EQ(got, expect) << "order " << order;
  }
}

TEST(Enumerate, IndecomposableCountsThroughOrderEight) {
  const auto want = reference::cells(reference::indecomposable_partial_groups());
  EnumerateOptions opt;
  opt.indecomposable_only = true;
  for (int order = 2; order <= 8; ++order) {
    const auto t = count_order(order, opt);
    std::map<std::tuple<int, int, int>, std::uint64_t> got;
    for (const auto& [k, v] : t.cells) got[{order, k.first, k.second}] = v;
    std::map<std::tuple<int, int, int>, std::uint64_t> expect;
    for (const auto& [k, v] : want) {
      if (std::get<0>(k) == order) expect[k] = v;
    }
    EXPECT_EQ(got, expect) << "order " << order;
  }
}

TEST(Enumerate, BpgOnlyAndMaxDim) {
  EnumerateOptions opt;
  opt.bpg_only = true;
  const auto t = count_order(7, opt);
  for (const auto& [k, v] : t.cells) EXPECT_LE(k.second, 2);
  EXPECT_EQ(t.total(), 1u + 5 + 1 + 27 + 1 + 78 + 1 + 60);
  EnumerateOptions three;
  three.max_dim = 3;
  const auto u = count_order(7, three);
  EXPECT_EQ(u.at(3, 3), 39u);
  EXPECT_EQ(u.at(3, 4), 0u);
}

TEST(Enumerate, PairwiseNonIsomorphic) {
  for (int order = 2; order <= 6; ++order) {
    const auto all = all_of_order(order);
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        EXPECT_FALSE(are_isomorphic(all[i], all[j])) << "order " << order << " #" << i << " #" << j;
      }
    }
  }
}

// Every level is closed under Sigma_{k+1} and under faces, and its matrices
// are nondegenerate and suitable.
TEST(Enumerate, SimplicialClosure) {
  for (int order = 2; order <= 7; ++order) {
    for (const auto& pg : all_of_order(order)) {
      ASSERT_LE(pg.top_level(), order - 1);
      for (int k = 2; k <= pg.top_level(); ++k) {
        for (const auto& m : simplices(pg, k)) {
          ASSERT_TRUE(is_nondegenerate(m));
          ASSERT_TRUE(is_suitable(m));
          for_each_injection(k, k, [&](const std::vector<int>& v) {
            EXPECT_TRUE(pg.contains(segal_word(restrict(m, IndexMap(k + 1, v)))));
          });
          for_each_injection(k - 1, k, [&](const std::vector<int>& v) {
            EXPECT_TRUE(pg.contains(segal_word(restrict(m, IndexMap(k + 1, v)))));
          });
        }
      }
    }
  }
}

TEST(Enumerate, ThreadCountDoesNotChangeOutput) {
  const auto one = all_of_order(7, 1);
  const auto four = all_of_order(7, 4);
  EXPECT_EQ(one, four);
  EnumerateOptions opt;
  opt.threads = 3;
  EXPECT_EQ(count_order(8, opt).cells, count_order(8, EnumerateOptions{}).cells);
}

TEST(Enumerate, ProgressReportsEveryRoot) {
  EnumerateOptions opt;
  std::size_t last = 0, total = 0;
  opt.progress = [&](std::size_t done, std::size_t of) {
    EXPECT_EQ(done, last + 1);
    last = done;
    total = of;
  };
  count_order(6, opt);
  EXPECT_EQ(last, total);
  EXPECT_EQ(total, roots_of_order(6).size());
}
