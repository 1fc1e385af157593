#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "gencat/errors.hpp"

namespace gencat {

/// Exhaustive enumerations refuse orders above this by default (c_16 ~ 3.5e7).
inline constexpr int kEnumerationCap = 16;

inline void check_enumeration_cap(const char* what, int n, int cap) {
  if (n < 0) throw DomainError(std::string(what) + ": negative order");
  if (n > cap) throw CapExceeded(std::string(what) + ": order " + std::to_string(n), cap);
}

/// Up/down step sequence of even length whose prefix sums never go negative
/// and whose total is zero.
class DyckPath {
public:
  DyckPath() = default;

  /// Throws DomainError unless `steps` is a valid Dyck word over {+1, -1}.
  explicit DyckPath(std::vector<std::int8_t> steps) : steps_(std::move(steps)) {
    int h = 0;
    for (auto s : steps_) {
      if (s != 1 && s != -1) throw DomainError("DyckPath: steps must be +1 or -1");
      h += s;
      if (h < 0) throw DomainError("DyckPath: prefix sum below zero");
    }
    if (h != 0) throw DomainError("DyckPath: path does not return to the axis");
  }

  /// Parses a word over {'+','-'}.
  static DyckPath parse(const std::string& word) {
    std::vector<std::int8_t> steps;
    steps.reserve(word.size());
    for (char c : word) {
      if (c == '+') steps.push_back(1);
      else if (c == '-') steps.push_back(-1);
      else throw DomainError("DyckPath: unexpected character in word");
    }
    return DyckPath(std::move(steps));
  }

  std::size_t order() const noexcept { return steps_.size() / 2; }
  bool empty() const noexcept { return steps_.empty(); }
  const std::vector<std::int8_t>& steps() const noexcept { return steps_; }

  std::string to_string() const {
    std::string s;
    s.reserve(steps_.size());
    for (auto x : steps_) s.push_back(x > 0 ? '+' : '-');
    return s;
  }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;

private:
  friend class DyckPathStream;
  std::vector<std::int8_t> steps_;
};

/// Number of meetings with the axis, counting the start and excluding the
/// endpoint (2n, 0): the number of indices i < 2n whose prefix height is 0.
/// Equals the number of level-0 arches.
inline int touch_count(const DyckPath& w) {
  if (w.empty()) throw DomainError("touch_count: empty path");
  int h = 0;
  int touches = 0;
  for (auto s : w.steps()) {
    if (h == 0) ++touches;
    h += s;
  }
  return touches;
}

/// Lexicographic stream (up before down) over all Dyck paths of order n.
///
///   for (const DyckPath& w : DyckPathStream(n)) ...
class DyckPathStream {
public:
  explicit DyckPathStream(int n, int cap = kEnumerationCap) : n_(n) {
    check_enumeration_cap("enumerate_dyck_paths", n, cap);
    auto& s = current_.steps_;
    s.assign(static_cast<std::size_t>(2 * n), -1);
    std::fill(s.begin(), s.begin() + n, std::int8_t{1});
  }

  /// Advances to the next path; false once the stream is exhausted.
  /// The first call yields the first path.
  bool next() {
    if (done_) return false;
    if (!started_) {
      started_ = true;
      return true;
    }
    auto& s = current_.steps_;
    const int len = 2 * n_;
    // Rightmost up-step that can be flipped to a down-step without going negative.
    int height_before = 0;
    int ups_before = 0;
    int pivot = -1;
    int pivot_ups = 0;
    for (int i = 0; i < len; ++i) {
      if (s[static_cast<std::size_t>(i)] > 0 && height_before >= 1) {
        pivot = i;
        pivot_ups = ups_before;
      }
      height_before += s[static_cast<std::size_t>(i)];
      if (s[static_cast<std::size_t>(i)] > 0) ++ups_before;
    }
    if (pivot < 0) {
      done_ = true;
      return false;
    }
    s[static_cast<std::size_t>(pivot)] = -1;
    int ups_left = n_ - pivot_ups;
    for (int i = pivot + 1; i < len; ++i) s[static_cast<std::size_t>(i)] = (ups_left-- > 0) ? 1 : -1;
    return true;
  }

  const DyckPath& current() const noexcept { return current_; }

  class iterator {
  public:
    using value_type = DyckPath;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(DyckPathStream* s) : s_(s) { advance(); }
    const DyckPath& operator*() const { return s_->current(); }
    const DyckPath* operator->() const { return &s_->current(); }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.s_ == nullptr; }

  private:
    void advance() {
      if (s_ && !s_->next()) s_ = nullptr;
    }
    DyckPathStream* s_ = nullptr;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() const noexcept { return {}; }

private:
  int n_;
  DyckPath current_;
  bool started_ = false;
  bool done_ = false;
};

inline DyckPathStream enumerate_dyck_paths(int n, int cap = kEnumerationCap) { return DyckPathStream(n, cap); }

}  // namespace gencat
