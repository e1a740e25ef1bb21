#pragma once

// Published counts used by `verify --expect`.  Cells absent from a table are
// zero.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "pgenum/dataio.hpp"

namespace pgenum::reference {

struct Row {
  int order;
  int free;
  std::vector<std::uint64_t> by_dim;  // dimensions 1, 2, ...
};

// Nontrivial partial groups by (order, free, dimension).
inline const std::vector<Row>& partial_groups() {
  static const std::vector<Row> rows{
      {2, 0, {1}},
      {3, 0, {1}},
      {3, 1, {1, 1}},
      {4, 0, {1, 1, 1}},
      {4, 1, {1, 2, 1}},
      {5, 0, {1, 1, 1}},
      {5, 1, {1, 4, 1}},
      {5, 2, {1, 5, 1, 1}},
      {6, 0, {1, 2, 3}},
      {6, 1, {1, 12, 19, 1, 1}},
      {6, 2, {1, 19, 19, 2, 1}},
      {7, 0, {1, 5, 17}},
      {7, 1, {1, 27, 72, 1, 1}},
      {7, 2, {1, 78, 92, 3, 1}},
      {7, 3, {1, 60, 39, 7, 1, 1}},
      {8, 0, {1, 13, 396, 116, 37, 1, 1}},
      {8, 1, {1, 95, 2328, 586, 113, 1, 1}},
      {8, 2, {1, 437, 2390, 440, 90, 1, 1}},
      {8, 3, {1, 638, 1505, 419, 60, 3, 2}},
      {9, 0, {1, 31, 1169, 116, 37, 1, 1}},
      {9, 1, {1, 446, 12891, 697, 149, 1, 1}},
      {9, 2, {1, 3610, 24021, 1092, 192, 1, 1}},
      {9, 3, {1, 10477, 22102, 1424, 148, 4, 2}},
      {9, 4, {1, 4581, 11875, 12937, 5389, 47, 2, 2}},
  };
  return rows;
}

// Indecomposable partial groups by (order, free, dimension).
inline const std::vector<Row>& indecomposable_partial_groups() {
  static const std::vector<Row> rows{
      {2, 0, {1}},
      {3, 1, {1, 1}},
      {4, 0, {0, 1, 1}},
      {4, 1, {0, 1, 1}},
      {5, 1, {0, 2}},
      {5, 2, {0, 3, 1, 1}},
      {6, 0, {0, 1, 2}},
      {6, 1, {0, 6, 16, 1, 1}},
      {6, 2, {0, 12, 16, 1, 1}},
      {7, 0, {0, 2, 12}},
      {7, 1, {0, 14, 50}},
      {7, 2, {0, 54, 71, 1}},
      {7, 3, {0, 51, 37, 5, 1, 1}},
      {8, 0, {0, 8, 379, 116, 37, 1, 1}},
      {8, 1, {0, 64, 2250, 585, 112, 1, 1}},
      {8, 2, {0, 339, 2256, 433, 87, 1, 1}},
      {8, 3, {0, 548, 1426, 408, 57, 2, 2}},
      {9, 0, {0, 17, 768}},
      {9, 1, {0, 338, 10492, 109, 34}},
      {9, 2, {0, 3122, 21443, 648, 98}},
      {9, 3, {0, 9705, 20405, 999, 86, 1}},
      {9, 4, {0, 4460, 11794, 12919, 5387, 45, 2, 2}},
  };
  return rows;
}

// Indecomposable BPGs by (order, free).
inline const std::map<std::pair<int, int>, std::uint64_t>& indecomposable_bpgs() {
  static const std::map<std::pair<int, int>, std::uint64_t> t{
      {{2, 0}, 1},
      {{3, 1}, 2},
      {{4, 0}, 1}, {{4, 1}, 1},
      {{5, 1}, 2}, {{5, 2}, 3},
      {{6, 0}, 1}, {{6, 1}, 6}, {{6, 2}, 12},
      {{7, 0}, 2}, {{7, 1}, 14}, {{7, 2}, 54}, {{7, 3}, 51},
      {{8, 0}, 8}, {{8, 1}, 64}, {{8, 2}, 339}, {{8, 3}, 548},
      {{9, 0}, 17}, {{9, 1}, 338}, {{9, 2}, 3122}, {{9, 3}, 9705}, {{9, 4}, 4460},
      {{10, 0}, 128}, {{10, 1}, 3823}, {{10, 2}, 54508}, {{10, 3}, 280245}, {{10, 4}, 337011},
  };
  return t;
}

// All BPGs of order 10 (only the total is published at that order).
inline constexpr std::uint64_t kOrder10Bpgs = 697209;

inline int max_order(const std::vector<Row>& rows) {
  int m = 0;
  for (const auto& r : rows) m = r.order > m ? r.order : m;
  return m;
}

// Flattened (order, free, dim) -> count.
inline std::map<std::tuple<int, int, int>, std::uint64_t> cells(const std::vector<Row>& rows) {
  std::map<std::tuple<int, int, int>, std::uint64_t> out;
  for (const auto& r : rows) {
    for (std::size_t d = 0; d < r.by_dim.size(); ++d) {
      if (r.by_dim[d]) out[{r.order, r.free, static_cast<int>(d) + 1}] = r.by_dim[d];
    }
  }
  return out;
}

// BPGs by (order, free): the dimension 1 and 2 cells of partial_groups().
inline std::map<std::pair<int, int>, std::uint64_t> bpgs() {
  std::map<std::pair<int, int>, std::uint64_t> out;
  for (const auto& r : partial_groups()) {
    std::uint64_t n = 0;
    for (std::size_t d = 0; d < r.by_dim.size() && d < 2; ++d) n += r.by_dim[d];
    out[{r.order, r.free}] = n;
  }
  return out;
}

namespace detail {

template <typename Key>
void compare_counts(const std::map<Key, std::uint64_t>& want,
                    const std::map<Key, std::uint64_t>& got, const std::set<int>& orders,
                    const std::string& what, std::vector<Discrepancy>& out) {
  auto describe = [](const Key& k) {
    std::string s = "order " + std::to_string(std::get<0>(k)) + " free " + std::to_string(std::get<1>(k));
    if constexpr (std::tuple_size_v<Key> == 3) s += " dim " + std::to_string(std::get<2>(k));
    return s;
  };
  std::set<Key> keys;
  for (const auto& [k, v] : want) {
    if (orders.count(std::get<0>(k))) keys.insert(k);
  }
  for (const auto& [k, v] : got) keys.insert(k);
  for (const auto& k : keys) {
    const auto w = want.count(k) ? want.at(k) : 0;
    const auto g = got.count(k) ? got.at(k) : 0;
    if (w != g) {
      out.push_back({"", 0, what + " " + describe(k) + ": expected " + std::to_string(w) +
                                ", found " + std::to_string(g)});
    }
  }
}

}  // namespace detail

// Differences between a verified corpus and a published table, restricted to
// the orders the corpus contains.  `key` is partial-groups, indecomposable, indecomposable-bpgs or bpgs.
inline std::vector<Discrepancy> compare(const VerifyReport& rep, std::string_view key) {
  std::vector<Discrepancy> out;
  std::set<int> orders;
  auto note_orders = [&](const auto& m) {
    for (const auto& [k, v] : m) {
      if (std::get<0>(k) > 1) orders.insert(std::get<0>(k));
    }
  };
  auto check_known = [&](int top) {
    for (int o : orders) {
      if (o > top) out.push_back({"", 0, "no reference counts for order " + std::to_string(o)});
    }
  };
  auto drop_trivial = [](auto m) {
    for (auto it = m.begin(); it != m.end();) {
      it = std::get<0>(it->first) <= 1 ? m.erase(it) : std::next(it);
    }
    return m;
  };
  if (key == "partial-groups" || key == "indecomposable") {
    const bool all = key == "partial-groups";
    const auto& got = all ? rep.pgs : rep.indecomposable_pgs;
    note_orders(rep.pgs);
    const auto& rows = all ? partial_groups() : indecomposable_partial_groups();
    check_known(max_order(rows));
    detail::compare_counts(cells(rows), drop_trivial(got), orders,
                           all ? "partial groups" : "indecomposable partial groups", out);
  } else if (key == "indecomposable-bpgs") {
    note_orders(rep.bpgs);
    check_known(10);
    detail::compare_counts(indecomposable_bpgs(), drop_trivial(rep.indecomposable_bpgs), orders,
                           "indecomposable BPGs", out);
  } else if (key == "bpgs") {
    note_orders(rep.bpgs);
    auto want = bpgs();
    if (orders.count(10)) {
      std::uint64_t n = 0;
      for (const auto& [k, v] : rep.bpgs) {
        if (k.first == 10) n += v;
      }
      if (n != kOrder10Bpgs) {
        out.push_back({"", 0, "BPGs order 10: expected " + std::to_string(kOrder10Bpgs) +
                                  ", found " + std::to_string(n)});
      }
      orders.erase(10);
    }
    check_known(max_order(partial_groups()));
    auto got = drop_trivial(rep.bpgs);
    for (auto it = got.begin(); it != got.end();) {
      it = it->first.first == 10 ? got.erase(it) : std::next(it);
    }
    detail::compare_counts(want, got, orders, "BPGs", out);
  } else {
    throw PreconditionError("unknown table key: " + std::string(key));
  }
  return out;
}

}  // namespace pgenum::reference
