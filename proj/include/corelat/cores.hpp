#pragma once

// Core partitions and the abacus bijection with the type A coroot lattice.
//
// Boxes are (row, col), 1-based, English notation.  The content of a box is
// col - row, read mod a.  Row r of the partition puts a bead at position
// lambda_r - r on the a-runner abacus (runner = position mod a); the coroot
// coordinate of runner j is one more than the row of its last bead.  With
// this normalization (5,3,1,1) <-> (0,2,-2) for a = 3.

#include "corelat/exact.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace corelat {

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw Error("negative part in partition");
      if (i && parts_[i] > parts_[i - 1]) throw Error("parts must be weakly decreasing");
    }
  }
  Partition(std::initializer_list<std::int64_t> parts) : Partition(std::vector<std::int64_t>(parts)) {}

  const std::vector<std::int64_t>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  std::int64_t part(std::size_t r) const { return r < parts_.size() ? parts_[r] : 0; }  // 0-based

  std::int64_t size() const { return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0}); }

  Partition conjugate() const {
    std::vector<std::int64_t> c(parts_.empty() ? 0 : parts_.front(), 0);
    for (auto p : parts_)
      for (std::int64_t j = 0; j < p; ++j) c[j]++;
    return Partition(std::move(c));
  }

  /// Side of the Durfee square = number of boxes on the main diagonal.
  std::int64_t durfee() const {
    std::int64_t d = 0;
    while (d < static_cast<std::int64_t>(parts_.size()) && parts_[d] > d) ++d;
    return d;
  }

  std::string str() const { return vec_to_string(parts_); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<std::int64_t> parts_;
};

/// All hook lengths, row by row.
inline std::vector<std::int64_t> hook_lengths(const Partition& p) {
  const Partition c = p.conjugate();
  std::vector<std::int64_t> out;
  for (std::size_t r = 0; r < p.length(); ++r)
    for (std::int64_t col = 0; col < p.part(r); ++col)
      out.push_back(p.part(r) - col + c.part(col) - static_cast<std::int64_t>(r) - 1);
  return out;
}

/// True iff p has no hook of length a.
inline bool is_core(const Partition& p, std::int64_t a) {
  for (auto h : hook_lengths(p))
    if (h == a) return false;
  return true;
}

struct BoundaryWord {
  std::string window;  // '1' = up step (bullet), '0' = right step (circle)
  std::size_t split = 0;  // balance point inside the window

  /// Renders with the bullet/circle glyphs and `pad` extra steps on each side.
  std::string render(std::size_t pad = 0) const {
    std::string s;
    for (std::size_t i = 0; i < pad; ++i) s += "•";
    for (char c : window) s += c == '1' ? "•" : "○";
    for (std::size_t i = 0; i < pad; ++i) s += "○";
    return s;
  }
};

/// Minimal window of the bi-infinite boundary word: starts at the first right
/// step and ends at the last up step.  Steps before it are all up steps, after
/// it all right steps.
inline BoundaryWord boundary_word(const Partition& p) {
  BoundaryWord w;
  if (p.empty()) return w;
  const auto k = static_cast<std::int64_t>(p.length());
  // Walk from the bottom-left corner: right to the last row's length, then
  // alternate up steps and right runs.
  std::int64_t x = 0;
  for (std::int64_t r = k - 1; r >= 0; --r) {
    for (; x < p.part(r); ++x) w.window += '0';
    w.window += '1';
  }
  // The first step is a right step since the last part is positive.
  std::int64_t before = 0;
  std::int64_t after = std::count(w.window.begin(), w.window.end(), '1');
  for (std::size_t s = 0; s <= w.window.size(); ++s) {
    if (before == after) {
      w.split = s;
      break;
    }
    if (s == w.window.size()) throw ConsistencyError("boundary word has no balance point");
    if (w.window[s] == '0') ++before;
    else --after;
  }
  return w;
}

namespace detail {
inline std::int64_t floor_div(std::int64_t x, std::int64_t a) {
  std::int64_t q = x / a;
  if ((x % a != 0) && ((x < 0) != (a < 0))) --q;
  return q;
}
inline std::int64_t mod(std::int64_t x, std::int64_t a) { return x - a * floor_div(x, a); }
}  // namespace detail

/// Runner levels of the balanced flush abacus.  Requires p to be an a-core.
inline IntVec to_coroot(const Partition& p, std::int64_t a) {
  if (a < 1) throw Error("modulus must be positive");
  for (auto h : hook_lengths(p))
    if (h == a)
      throw Error("partition " + p.str() + " is not an " + std::to_string(a) +
                  "-core: it has a hook of length " + std::to_string(a));
  const auto k = static_cast<std::int64_t>(p.length());
  IntVec level(a, 0);
  std::vector<bool> seen(a, false);
  // Bead positions lambda_r - r, descending; rows beyond k give -r.
  for (std::int64_t r = 1; r <= k + a; ++r) {
    const std::int64_t pos = p.part(r - 1) - r;
    const auto j = detail::mod(pos, a);
    if (!seen[j]) {
      seen[j] = true;
      level[j] = detail::floor_div(pos, a) + 1;
    }
  }
  return level;
}

/// Inverse of to_coroot.
inline Partition from_coroot(const IntVec& q) {
  const auto a = static_cast<std::int64_t>(q.size());
  if (a < 1) throw Error("empty coroot");
  if (std::accumulate(q.begin(), q.end(), std::int64_t{0}) != 0)
    throw Error("coroot " + vec_to_string(q) + " does not sum to 0");
  // Runner j holds beads at j + a*row for row < q_j; every position below m is a bead.
  std::int64_t m = std::numeric_limits<std::int64_t>::max();
  std::int64_t top = std::numeric_limits<std::int64_t>::min();
  for (std::int64_t j = 0; j < a; ++j) {
    m = std::min(m, j + a * q[j]);
    top = std::max(top, j + a * (q[j] - 1));
  }
  std::vector<std::int64_t> parts;
  std::int64_t r = 0;
  for (std::int64_t pos = top; pos >= m - 1; --pos) {
    const auto j = detail::mod(pos, a);
    if (detail::floor_div(pos, a) < q[j]) {
      ++r;
      parts.push_back(pos + r);
    }
  }
  if (!parts.empty() && parts.back() != 0) throw ConsistencyError("abacus is not balanced");
  return Partition(std::move(parts));
}

/// Entry i = number of boxes with content (col - row) = i mod a.
inline IntVec content_counts(const Partition& p, std::int64_t a) {
  IntVec out(a, 0);
  for (std::size_t r = 0; r < p.length(); ++r)
    for (std::int64_t c = 0; c < p.part(r); ++c)
      out[detail::mod(c - static_cast<std::int64_t>(r), a)]++;
  return out;
}

struct CorePartition {
  Partition partition;
  std::int64_t a = 1;
  IntVec contents;
  IntVec coroot;

  static CorePartition make(const Partition& p, std::int64_t a) {
    CorePartition c{p, a, content_counts(p, a), to_coroot(p, a)};
    return c;
  }
  static CorePartition from_coroot(const IntVec& q) {
    Partition p = corelat::from_coroot(q);
    return {p, static_cast<std::int64_t>(q.size()), content_counts(p, q.size()), q};
  }
};

/// Adds every addable box of content i, or removes every removable one.
inline Partition toggle_action(const Partition& p, std::int64_t a, std::int64_t i) {
  if (i < 0 || i >= a) throw Error("content index out of range");
  const auto k = static_cast<std::int64_t>(p.length());
  std::vector<std::int64_t> parts(p.parts());
  parts.push_back(0);
  bool added = false;
  // Addable box in row r (0-based) sits at column parts[r] (0-based).
  for (std::int64_t r = 0; r <= k; ++r) {
    const bool addable = r == 0 || parts[r - 1] > parts[r];
    if (addable && detail::mod(parts[r] - r, a) == i) {
      parts[r] += 1;
      added = true;
    }
  }
  if (!added) {
    parts.assign(p.parts().begin(), p.parts().end());
    for (std::int64_t r = 0; r < k; ++r) {
      const bool removable = r + 1 == k || parts[r + 1] < parts[r];
      if (removable && detail::mod(parts[r] - 1 - r, a) == i) parts[r] -= 1;
    }
  }
  return Partition(std::move(parts));
}

inline CorePartition toggle_action(const CorePartition& c, std::int64_t i) {
  return CorePartition::make(toggle_action(c.partition, c.a, i), c.a);
}

/// s_i on a-tuples: adjacent swap for i > 0, (q_a + 1, q_2, ..., q_1 - 1) for i = 0.
inline IntVec type_a_reflect(const IntVec& q, std::int64_t i) {
  IntVec out(q);
  const auto a = static_cast<std::int64_t>(q.size());
  if (i == 0) {
    out.front() = q.back() + 1;
    out.back() = q.front() - 1;
    if (a == 1) out.front() = q.front();
  } else {
    std::swap(out[i - 1], out[i]);
  }
  return out;
}

/// (-q_a, ..., -q_1).
inline IntVec conjugate_coroot(const IntVec& q) {
  IntVec out(q.rbegin(), q.rend());
  for (auto& v : out) v = -v;
  return out;
}

inline CorePartition conjugate(const CorePartition& c) { return CorePartition::make(c.partition.conjugate(), c.a); }

/// All a-cores with at most max_boxes boxes, by toggling outward from the
/// empty partition.  Sorted by (size, parts).
inline std::vector<Partition> enumerate_cores_bfs(std::int64_t a, std::int64_t max_boxes) {
  std::set<Partition> seen{Partition()};
  std::deque<Partition> todo{Partition()};
  while (!todo.empty()) {
    Partition p = todo.front();
    todo.pop_front();
    for (std::int64_t i = 0; i < a; ++i) {
      Partition n = toggle_action(p, a, i);
      if (n.size() <= max_boxes && seen.insert(n).second) todo.push_back(n);
    }
  }
  std::vector<Partition> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const Partition& x, const Partition& y) { return x.size() < y.size(); });
  return out;
}

}  // namespace corelat
