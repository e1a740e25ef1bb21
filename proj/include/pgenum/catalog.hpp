#pragma once

// The indecomposable partial groups of order at most 5, rebuilt from their
// generating matrices.

#include <string>
#include <vector>

#include "pgenum/extender.hpp"
#include "pgenum/symcore.hpp"

namespace pgenum {

struct CatalogEntry {
  std::string name;
  PartialGroup pg;
  // Published columns.
  int dim = 0;
  int gens = 0;
  int degree = 0;
  std::vector<std::vector<Element>> maximal_subgroups;
};

namespace detail {

using Rows = std::vector<std::vector<Element>>;

inline PartialGroup from_rows(InvolutiveSet s, const std::vector<Rows>& gens) {
  std::vector<SimplexMatrix> ms;
  for (const auto& r : gens) ms.push_back(SimplexMatrix::from_rows(s, r));
  return generate(s, ms);
}

}  // namespace detail

inline std::vector<CatalogEntry> catalog() {
  using detail::from_rows;
  using detail::Rows;
  const InvolutiveSet c2(0, 1), c3(1, 0), v4(0, 3), c4(1, 1), p12(1, 2), c5(2, 0);

  const Rows bc3{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
  const Rows bv4_2{{0, 1, 2}, {1, 0, 3}, {2, 3, 0}};
  const Rows bv4{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const Rows bc4_2{{0, 1, -1}, {-1, 0, 2}, {1, 2, 0}};
  const Rows bc4{{0, 1, -1, 2}, {-1, 0, 2, 1}, {1, 2, 0, -1}, {2, -1, 1, 0}};
  const Rows p1{{0, 1, 3}, {-1, 0, 2}, {3, 2, 0}};
  const Rows c5a{{0, 2, 1}, {-2, 0, 2}, {-1, -2, 0}};
  const Rows c5b{{0, 2, -1}, {-2, 0, 1}, {1, -1, 0}};
  const Rows c5_3{{0, 2, 1, -1}, {-2, 0, 2, 1}, {-1, -2, 0, 2}, {1, -1, -2, 0}};

  const auto sk2_bc5 = from_rows(c5, {c5a, c5b});

  std::vector<CatalogEntry> out;
  out.push_back({"BC2", from_rows(c2, {{{0, 1}, {1, 0}}}), 1, 1, 1, {{0, 1}}});
  out.push_back({"sk1(BC3)", from_rows(c3, {{{0, 1}, {-1, 0}}}), 1, 1, 2, {{0}}});
  out.push_back({"BC3", from_rows(c3, {bc3}), 2, 1, 1, {{-1, 0, 1}}});
  out.push_back({"sk2(BV4)", from_rows(v4, {bv4_2}), 2, 1, 3, {{0, 1}, {0, 2}, {0, 3}}});
  out.push_back({"BV4", from_rows(v4, {bv4}), 3, 1, 1, {{0, 1, 2, 3}}});
  out.push_back({"sk2(BC4)", from_rows(c4, {bc4_2}), 2, 1, 3, {{0, 2}}});
  out.push_back({"BC4", from_rows(c4, {bc4}), 3, 1, 1, {{-1, 0, 1, 2}}});
  out.push_back({"BP1", from_rows(p12, {p1}), 2, 1, 2, {{0, 2}, {0, 3}}});
  out.push_back({"BP2", from_rows(p12, {bc3, p1}), 2, 2, 2, {{-1, 0, 1}, {0, 2}, {0, 3}}});
  out.push_back({"sk2(BC5)", sk2_bc5, 2, 2, 3, {{0}}});
  out.push_back({"sk3(BC5)", from_rows(c5, {c5_3}), 3, 1, 4, {{0}}});
  out.push_back({"BC5", build_bp(sk2_bc5.bpg()), 4, 1, 1, {{-2, -1, 0, 1, 2}}});
  out.push_back({"BP3", from_rows(c5, {c5a}), 2, 1, 2, {{0}}});
  out.push_back({"BP4", from_rows(c5, {c5a, bc3}), 2, 2, 2, {{-1, 0, 1}}});
  return out;
}

}  // namespace pgenum
