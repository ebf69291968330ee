#pragma once

// Sommers regions, lattice points of dilated alcoves, and the statistic
// size^(b).
//
// Points of b*A are enumerated by their dominant tuple m_i = <x, alpha_i> >= 0
// with sum c_i m_i <= b, i.e. by coordinates over the fundamental coweights.

#include "corelat/affine.hpp"
#include "corelat/models.hpp"

#include <cstdlib>
#include <functional>

namespace corelat {

/// Enumeration cap: CORELAT_CAP if set, else 10^6.
inline std::uint64_t default_cap() {
  if (const char* env = std::getenv("CORELAT_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1000000;
}

inline bool coprime_to_h(const RootSystemData& rs, std::int64_t b) {
  return b >= 1 && std::gcd(b, static_cast<std::int64_t>(rs.coxeter_number)) == 1;
}

inline void require_coprime(const RootSystemData& rs, std::int64_t b) {
  if (!coprime_to_h(rs, b))
    throw Error("b = " + std::to_string(b) + " is not a positive integer coprime to h = " +
                std::to_string(rs.coxeter_number) + " for " + rs.name());
}

/// (1/|W|) prod (b + e_j).
inline Rational haiman_count(const RootSystemData& rs, std::int64_t b) {
  BigInt p = 1;
  for (auto e : rs.exponents) p *= b + e;
  return Rational(p, BigInt(rs.weyl_group_order()));
}

struct SommersRegion {
  std::int64_t b = 1;
  std::int64_t t_b = 0;
  std::int64_t r_b = 1;
  std::vector<Root> height_low_roots;   // Phi_{r_b}: <q, alpha> >= -t_b
  std::vector<Root> height_high_roots;  // Phi_{h - r_b}: <q, alpha> <= t_b + 1
  std::vector<IntVec> low_rows, high_rows;

  SommersRegion(const RootSystemData& rs, std::int64_t b_) : b(b_) {
    require_coprime(rs, b);
    const int h = rs.coxeter_number;
    t_b = b / h;
    r_b = b % h;
    height_low_roots = roots_of_height(rs, static_cast<int>(r_b));
    height_high_roots = roots_of_height(rs, static_cast<int>(h - r_b));
    for (const auto& r : height_low_roots) low_rows.push_back(pairing_row(rs, r.coeffs));
    for (const auto& r : height_high_roots) high_rows.push_back(pairing_row(rs, r.coeffs));
  }

  bool contains(const IntVec& q) const {
    auto dot = [&](const IntVec& row) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < q.size(); ++i) s += row[i] * q[i];
      return s;
    };
    for (const auto& row : low_rows)
      if (dot(row) < -t_b) return false;
    for (const auto& row : high_rows)
      if (dot(row) > t_b + 1) return false;
    return true;
  }
};

inline bool contains(const SommersRegion& sr, const IntVec& q) { return sr.contains(q); }

enum class Lattice { coroot, coweight };

/// Calls f(m) for every dominant tuple m >= 0 with sum c_i m_i <= b.
template <class F>
void for_each_dominant(const RootSystemData& rs, std::int64_t b, F&& f) {
  const int n = rs.rank;
  IntVec m(n, 0);
  std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t budget) {
    if (i == n) {
      f(static_cast<const IntVec&>(m));
      return;
    }
    const std::int64_t c = rs.highest_root[i];
    for (std::int64_t v = 0; v * c <= budget; ++v) {
      m[i] = v;
      rec(i + 1, budget - v * c);
    }
    m[i] = 0;
  };
  rec(0, b);
}

/// Number of dominant tuples, without visiting them.
inline BigInt count_dominant(const RootSystemData& rs, std::int64_t b) {
  // coefficients of prod_i 1/(1 - x^{c_i}), summed up to x^b
  std::vector<BigInt> ways(b + 1, 0);
  ways[0] = 1;
  for (auto c : rs.highest_root)
    for (std::int64_t s = c; s <= b; ++s) ways[s] += ways[s - c];
  BigInt total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

/// True iff the coweight with coordinates m lies in the coroot lattice.
inline bool in_coroot_lattice(const RootSystemData& rs, const IntVec& m) {
  const int n = rs.rank;
  for (int i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < n; ++j) s += rs.cartan_adjugate(i, j) * m[j];
    if (s % rs.index_of_connection != 0) return false;
  }
  return true;
}

/// Simple-coroot coordinates of sum m_i omega_i^vee (integral on the coroot lattice).
inline RatVec coweight_to_coroot(const RootSystemData& rs, const IntVec& m) {
  const int n = rs.rank;
  RatVec k(n);
  for (int i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < n; ++j) s += rs.cartan_adjugate(i, j) * m[j];
    k[i] = make_rational(s, rs.index_of_connection);
  }
  return k;
}

/// Lattice points of b*A as dominant tuples (coweight coordinates), in
/// lexicographic order.  For Lattice::coroot only coroot-lattice points are kept.
inline std::vector<IntVec> enumerate_alcove(const RootSystemData& rs, std::int64_t b, Lattice lattice,
                                            std::uint64_t cap = default_cap()) {
  if (b < 0) throw Error("b must be non-negative");
  if (count_dominant(rs, b) > cap)
    throw FeasibilityError("b*A for " + rs.name() + ", b = " + std::to_string(b) + " has more than " +
                           std::to_string(cap) + " coweight points");
  std::vector<IntVec> out;
  for_each_dominant(rs, b, [&](const IntVec& m) {
    if (lattice == Lattice::coweight || in_coroot_lattice(rs, m)) out.push_back(m);
  });
  return out;
}

/// Points of b*A in the coroot lattice, in simple-coroot coordinates.
inline std::vector<IntVec> alcove_coroots(const RootSystemData& rs, std::int64_t b,
                                          std::uint64_t cap = default_cap()) {
  std::vector<IntVec> out;
  for (const auto& m : enumerate_alcove(rs, b, Lattice::coroot, cap)) out.push_back(to_integer(coweight_to_coroot(rs, m)));
  return out;
}

/// (h/2)(|x - b rho/h|^2 - |rho/h|^2).
inline Rational size_b(const RootSystemData& rs, std::int64_t b, const RatVec& x) {
  const RatVec rh = rho_over_h(rs);
  const RatVec d = subtracted(x, scaled(rh, Rational(b)));
  return Rational(rs.coxeter_number) / 2 * (norm2(rs, d) - norm2(rs, rh));
}

inline Rational size_b(const RootSystemData& rs, std::int64_t b, const IntVec& q) {
  return size_b(rs, b, to_rational(q));
}

/// Vertices of b*A: 0 and b omega_i^vee / c_i.
inline std::vector<RatVec> alcove_vertices(const RootSystemData& rs, std::int64_t b) {
  std::vector<RatVec> v{RatVec(rs.rank, Rational(0))};
  for (int i = 0; i < rs.rank; ++i) v.push_back(scaled(rs.coweights[i], make_rational(b, rs.highest_root[i])));
  return v;
}

/// True iff x lies in the closed simplex with the given n+1 vertices.
inline bool in_simplex(const std::vector<RatVec>& verts, const RatVec& x) {
  const std::size_t n = x.size();
  RatMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = verts[j + 1][i] - verts[0][i];
  const RatVec lam = inverse(m) * subtracted(x, verts[0]);
  Rational s = 0;
  for (const auto& l : lam) {
    if (l < 0) return false;
    s += l;
  }
  return s <= 1;
}

struct CoreSet {
  std::string type;
  std::int64_t b = 1;
  std::vector<IntVec> points;  // lexicographic in simple-coroot coordinates
  std::vector<Rational> sizes;
  AffineElement w_b;
  std::vector<RatVec> vertex_images;  // w_b^{-1}(b * Gamma)
};

/// All q in the box lo..hi satisfying the Sommers inequalities, by depth-first
/// search with interval pruning on each inequality.
inline std::vector<IntVec> scan_box(const SommersRegion& sr, const IntVec& lo, const IntVec& hi) {
  const int n = static_cast<int>(lo.size());
  struct Ineq {
    IntVec row;
    std::int64_t bound;  // row . q <= bound
  };
  std::vector<Ineq> ineqs;
  for (const auto& r : sr.low_rows) {
    IntVec neg = r;
    for (auto& v : neg) v = -v;
    ineqs.push_back({neg, sr.t_b});
  }
  for (const auto& r : sr.high_rows) ineqs.push_back({r, sr.t_b + 1});
  // tail_min[k][j]: minimum of sum_{i >= j} row_i q_i over the box
  std::vector<IntVec> tail_min(ineqs.size(), IntVec(n + 1, 0));
  for (std::size_t k = 0; k < ineqs.size(); ++k)
    for (int j = n - 1; j >= 0; --j) {
      const auto c = ineqs[k].row[j];
      tail_min[k][j] = tail_min[k][j + 1] + std::min(c * lo[j], c * hi[j]);
    }
  std::vector<IntVec> out;
  IntVec q(n, 0);
  std::vector<std::int64_t> partial(ineqs.size(), 0);
  std::function<void(int)> rec = [&](int j) {
    for (std::size_t k = 0; k < ineqs.size(); ++k)
      if (partial[k] + tail_min[k][j] > ineqs[k].bound) return;
    if (j == n) {
      out.push_back(q);
      return;
    }
    for (std::int64_t v = lo[j]; v <= hi[j]; ++v) {
      q[j] = v;
      for (std::size_t k = 0; k < ineqs.size(); ++k) partial[k] += ineqs[k].row[j] * v;
      rec(j + 1);
      for (std::size_t k = 0; k < ineqs.size(); ++k) partial[k] -= ineqs[k].row[j] * v;
    }
  };
  rec(0);
  return out;
}

/// core(X_n, b), computed by mapping b*A through w_b^{-1} and independently
/// by scanning the bounding box of S(b); throws ConsistencyError on disagreement.
inline CoreSet enumerate_cores(const RootSystemData& rs, std::int64_t b, std::uint64_t cap = default_cap()) {
  require_coprime(rs, b);
  const Rational predicted = haiman_count(rs, b);
  if (predicted > cap)
    throw FeasibilityError("core(" + rs.name() + ", " + std::to_string(b) + ") has " + to_string(predicted) +
                           " points, above the cap " + std::to_string(cap));
  CoreSet cs;
  cs.type = rs.name();
  cs.b = b;
  cs.w_b = compute_w_b(rs, b);
  const AffineElement winv = cs.w_b.inverse();

  std::vector<IntVec> mapped;
  for (const auto& q : alcove_coroots(rs, b, cap * rs.index_of_connection)) mapped.push_back(winv(q));
  std::sort(mapped.begin(), mapped.end());

  const int n = rs.rank;
  IntVec lo(n, std::numeric_limits<std::int64_t>::max()), hi(n, std::numeric_limits<std::int64_t>::min());
  for (const auto& v : alcove_vertices(rs, b)) {
    RatVec img = winv(v);
    for (int i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], floor_of(img[i]).convert_to<std::int64_t>() - 1);
      hi[i] = std::max(hi[i], ceil_of(img[i]).convert_to<std::int64_t>() + 1);
    }
    cs.vertex_images.push_back(std::move(img));
  }
  const SommersRegion sr(rs, b);
  std::vector<IntVec> scanned = scan_box(sr, lo, hi);
  std::sort(scanned.begin(), scanned.end());

  if (mapped != scanned)
    throw ConsistencyError("core(" + rs.name() + ", " + std::to_string(b) + "): alcove image has " +
                           std::to_string(mapped.size()) + " points, box scan has " + std::to_string(scanned.size()));
  if (Rational(static_cast<std::int64_t>(mapped.size())) != predicted)
    throw ConsistencyError("core(" + rs.name() + ", " + std::to_string(b) + ") has " +
                           std::to_string(mapped.size()) + " points, expected " + to_string(predicted));
  cs.points = std::move(mapped);
  for (const auto& q : cs.points) cs.sizes.push_back(size_lattice(rs, q));
  return cs;
}

/// (r g/h) n (b^2 - 1)(h + 1)/24.
inline Rational max_size_formula(const RootSystemData& rs, std::int64_t b) {
  return Rational(rs.ratio_r * rs.dual_coxeter_number, rs.coxeter_number) *
         Rational(rs.rank * (b * b - 1) * (rs.coxeter_number + 1), 24);
}

struct MaxSizeReport {
  Rational value;
  IntVec argmax;        // w_b^{-1}(0)
  Rational scanned_max;
  std::size_t attained = 0;  // number of cores attaining scanned_max
  bool argmax_attains = false;
  bool passed() const { return value == scanned_max && attained == 1 && argmax_attains; }
};

inline MaxSizeReport max_size(const RootSystemData& rs, const CoreSet& cs) {
  MaxSizeReport rep;
  rep.value = max_size_formula(rs, cs.b);
  rep.argmax = cs.w_b.inverse()(IntVec(rs.rank, 0));
  rep.scanned_max = *std::max_element(cs.sizes.begin(), cs.sizes.end());
  for (std::size_t i = 0; i < cs.points.size(); ++i)
    if (cs.sizes[i] == rep.scanned_max) {
      ++rep.attained;
      if (cs.points[i] == rep.argmax) rep.argmax_attains = true;
    }
  return rep;
}

inline MaxSizeReport max_size(const RootSystemData& rs, std::int64_t b) { return max_size(rs, enumerate_cores(rs, b)); }

/// Both sides of the multiset transfer, each sorted.
inline std::pair<std::vector<Rational>, std::vector<Rational>> transfer_multisets(const RootSystemData& rs,
                                                                                  const CoreSet& cs) {
  std::vector<Rational> left = cs.sizes, right;
  for (const auto& q : alcove_coroots(rs, cs.b)) right.push_back(size_b(rs, cs.b, q));
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  return {left, right};
}

/// Coweight points strictly inside b*A.
inline std::size_t interior_coweight_count(const RootSystemData& rs, std::int64_t b) {
  std::size_t cnt = 0;
  for_each_dominant(rs, b, [&](const IntVec& m) {
    std::int64_t used = 0;
    for (int i = 0; i < rs.rank; ++i) {
      if (m[i] == 0) return;
      used += rs.highest_root[i] * m[i];
    }
    if (used < b) ++cnt;
  });
  return cnt;
}

struct SelfConjugateReport {
  int n = 2;
  std::int64_t b = 1;
  std::vector<Partition> partitions;  // images, in the order of the core set
  std::vector<IntVec> coroots;
  std::size_t expected_count = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty() && partitions.size() == expected_count; }
};

/// Maps core(C_n, b) through the C_n embedding and checks every image is a
/// self-conjugate (2n, b)-core.
inline SelfConjugateReport simultaneous_selfconjugate(int n, std::int64_t b) {
  const RootSystemData rs = build(CartanType{Family::C, n});
  SelfConjugateReport rep;
  rep.n = n;
  rep.b = b;
  const CoreSet cs = enumerate_cores(rs, b);
  rep.expected_count = static_cast<std::size_t>(to_int64(haiman_count(rs, b)));
  std::set<Partition> distinct;
  for (const auto& x : cs.points) {
    const Partition p = from_coroot(embed(rs, x).image);
    if (p.conjugate() != p) rep.failures.push_back(p.str() + " is not self-conjugate");
    if (!is_core(p, 2 * n)) rep.failures.push_back(p.str() + " has a hook of length " + std::to_string(2 * n));
    if (!is_core(p, b)) rep.failures.push_back(p.str() + " has a hook of length " + std::to_string(b));
    distinct.insert(p);
    rep.partitions.push_back(p);
    rep.coroots.push_back(x);
  }
  if (distinct.size() != rep.partitions.size()) rep.failures.push_back("images are not distinct");
  return rep;
}

/// Evidence for the weak-order maximality of w_b on core(X_n, b).
inline MaximalityReport check_wb_maximality(const RootSystemData& rs, std::int64_t b) {
  const CoreSet cs = enumerate_cores(rs, b);
  return check_wb_maximality(rs, b, cs.points);
}

}  // namespace corelat
