#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "gencat/dyck.hpp"

namespace gencat {

/// Partition of {1, ..., 2n} into two-element blocks, with outer/inner flags.
struct PairPartition {
  struct Block {
    int first;   // smaller element, 1-based
    int second;  // larger element
    bool outer;
  };

  std::vector<Block> blocks;  // sorted by `first`

  std::size_t order() const noexcept { return blocks.size(); }

  int outer_count() const {
    return static_cast<int>(std::count_if(blocks.begin(), blocks.end(), [](const Block& b) { return b.outer; }));
  }
  int inner_count() const { return static_cast<int>(blocks.size()) - outer_count(); }

  /// Blocks are disjoint and cover {1..2n}.
  bool covers() const {
    std::vector<int> seen(2 * blocks.size() + 1, 0);
    for (const auto& b : blocks) {
      if (b.first < 1 || b.second > static_cast<int>(2 * blocks.size()) || b.first >= b.second) return false;
      if (seen[static_cast<std::size_t>(b.first)]++ || seen[static_cast<std::size_t>(b.second)]++) return false;
    }
    return true;
  }

  /// No two blocks {a,b}, {c,e} with a < c < b < e.
  bool non_crossing() const {
    for (const auto& x : blocks)
      for (const auto& y : blocks)
        if (x.first < y.first && y.first < x.second && x.second < y.second) return false;
    return true;
  }

  /// Outer flag straight from the definition: no block strictly encloses this one.
  static bool encloses_none(const std::vector<Block>& blocks, const Block& b) {
    return std::none_of(blocks.begin(), blocks.end(),
                        [&](const Block& o) { return o.first < b.first && b.second < o.second; });
  }
};

namespace detail {

struct Segment {
  int lo;  // half-open [lo, hi), 1-based positions
  int hi;
  int depth;
};

template <class Visitor>
void nc_pairings(std::vector<Segment>& todo, std::vector<int>& partner, std::vector<int>& depth,
                 PairPartition& scratch, Visitor& visit) {
  if (todo.empty()) {
    scratch.blocks.clear();
    for (int p = 1; p < static_cast<int>(partner.size()); ++p)
      if (partner[static_cast<std::size_t>(p)] > p)
        scratch.blocks.push_back({p, partner[static_cast<std::size_t>(p)], depth[static_cast<std::size_t>(p)] == 0});
    visit(static_cast<const PairPartition&>(scratch));
    return;
  }
  const Segment seg = todo.back();
  todo.pop_back();
  if (seg.lo == seg.hi) {
    nc_pairings(todo, partner, depth, scratch, visit);
  } else {
    for (int j = seg.lo + 1; j < seg.hi; j += 2) {
      partner[static_cast<std::size_t>(seg.lo)] = j;
      partner[static_cast<std::size_t>(j)] = seg.lo;
      depth[static_cast<std::size_t>(seg.lo)] = seg.depth;
      todo.push_back({j + 1, seg.hi, seg.depth});
      todo.push_back({seg.lo + 1, j, seg.depth + 1});
      nc_pairings(todo, partner, depth, scratch, visit);
      todo.pop_back();
      todo.pop_back();
    }
  }
  todo.push_back(seg);
}

}  // namespace detail

/// Calls `visit(const PairPartition&)` once for every non-crossing pair
/// partition of {1..2n}. The referenced partition is reused between calls.
///
/// Generation pairs the smallest free point of a segment with each admissible
/// partner and recurses on the enclosed and trailing segments; it does not go
/// through Dyck paths.
template <class Visitor>
void enumerate_nc_pair_partitions(int n, Visitor&& visit, int cap = kEnumerationCap) {
  check_enumeration_cap("enumerate_nc_pair_partitions", n, cap);
  std::vector<int> partner(static_cast<std::size_t>(2 * n + 1), 0);
  std::vector<int> depth(static_cast<std::size_t>(2 * n + 1), 0);
  std::vector<detail::Segment> todo{{1, 2 * n + 1, 0}};
  PairPartition scratch;
  detail::nc_pairings(todo, partner, depth, scratch, visit);
}

}  // namespace gencat
