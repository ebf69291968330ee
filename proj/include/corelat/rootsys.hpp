#pragma once

// Irreducible crystallographic root systems built from Dynkin data.
//
// Conventions, fixed once for the whole library:
//   * Bourbaki numbering of simple roots, 1-based in the math, 0-based in code
//     (simple root i lives at index i-1; index 0 of an affine word is s_0).
//   * cartan(i, j) = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
//   * The form is normalized so the highest root has squared length 2.
//   * Lattice points (coroots, coweights) are coordinate vectors over the
//     simple coroots alpha_1^vee .. alpha_n^vee.  Roots are coordinate vectors
//     over the simple roots.
//   * With this normalization the coroot Gram matrix is integral.

#include "corelat/exact.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <string>

namespace corelat {

enum class Family { A, B, C, D, E, F, G };

inline char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

  /// Empty string when valid, otherwise a description of the violated constraint.
  std::string violation() const {
    const std::string n = name();
    switch (family) {
      case Family::A:
        return rank >= 1 ? "" : n + ": type A requires rank >= 1";
      case Family::B:
        return rank >= 2 ? "" : n + ": type B requires rank >= 2";
      case Family::C:
        return rank >= 2 ? "" : n + ": type C requires rank >= 2";
      case Family::D:
        return rank >= 4 ? "" : n + ": type D requires rank >= 4";
      case Family::E:
        return (rank >= 6 && rank <= 8) ? "" : n + ": type E requires rank in {6,7,8}";
      case Family::F:
        return rank == 4 ? "" : n + ": type F requires rank 4";
      case Family::G:
        return rank == 2 ? "" : n + ": type G requires rank 2";
    }
    return "unknown family";
  }

  /// Parses "C3", "g2", "E8".  Validates the rank.
  static CartanType parse(std::string_view s) {
    if (s.size() < 2) throw Error("malformed Cartan type: '" + std::string(s) + "'");
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    const std::string letters = "ABCDEFG";
    const auto pos = letters.find(c);
    if (pos == std::string::npos) throw Error("unknown Cartan family in '" + std::string(s) + "'");
    int rank = 0;
    for (char d : s.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(d)))
        throw Error("malformed rank in '" + std::string(s) + "'");
      rank = rank * 10 + (d - '0');
      if (rank > 1000) throw Error("rank too large in '" + std::string(s) + "'");
    }
    CartanType t{static_cast<Family>(pos), rank};
    if (auto v = t.violation(); !v.empty()) throw Error(v);
    return t;
  }

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

struct Root {
  IntVec coeffs;  // over simple roots
  int height = 0;
  bool is_long = true;

  friend bool operator==(const Root&, const Root&) = default;
};

/// Immutable after construction; share freely across threads.
struct RootSystemData {
  CartanType cartan_type;
  int rank = 0;

  IntMatrix cartan;        // cartan(i,j) = <alpha_i, alpha_j^vee>
  IntMatrix gram_coroot;   // <alpha_i^vee, alpha_j^vee>
  RatMatrix gram_root;     // <alpha_i, alpha_j>
  IntVec length_factor;    // 2/<alpha_i,alpha_i>: 1 for long, r for short

  std::vector<Root> positive_roots;  // sorted by (height, coeffs)
  IntVec highest_root;               // marks c_1..c_n
  IntVec highest_coroot;             // theta^vee over simple coroots (comarks)
  int coxeter_number = 0;
  int dual_coxeter_number = 0;
  IntVec exponents;
  int index_of_connection = 0;
  int ratio_r = 1;
  int period_c = 1;

  RatVec rho_check;                 // sum of fundamental coweights
  std::vector<RatVec> coweights;    // coweights[i] = omega_{i+1}^vee
  IntMatrix cartan_adjugate;        // det(cartan) * cartan^{-1}

  int n() const { return rank; }
  std::string name() const { return cartan_type.name(); }

  /// Mark c_i with c_0 = 1.
  std::int64_t mark(int i) const { return i == 0 ? 1 : highest_root[i - 1]; }

  /// 2/<alpha_i, alpha_i>; index 0 is the affine root (always long).
  std::int64_t root_length_factor(int i) const { return i == 0 ? 1 : length_factor[i - 1]; }

  /// |W| = prod (e_j + 1).
  std::int64_t weyl_group_order() const {
    std::int64_t o = 1;
    for (auto e : exponents) o *= e + 1;
    return o;
  }

  Rational rho_norm2() const { return bilinear(rho_check, gram_coroot, rho_check); }
};

namespace detail {

// Relative squared lengths (2 = long) and the Dynkin edges, Bourbaki numbering.
struct DynkinData {
  std::vector<Rational> norms;
  std::vector<std::pair<int, int>> edges;
};

inline DynkinData dynkin(const CartanType& t) {
  const int n = t.rank;
  DynkinData d;
  d.norms.assign(n, Rational(2));
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (t.family) {
    case Family::A:
      chain(n);
      break;
    case Family::B:
      chain(n);
      d.norms[n - 1] = 1;
      break;
    case Family::C:
      chain(n);
      for (int i = 0; i + 1 < n; ++i) d.norms[i] = 1;
      break;
    case Family::D:
      chain(n - 1);
      d.edges.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      // 1-3-4-5-6-7-8 with 2 attached to 4
      d.edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 4; i + 1 < n; ++i) d.edges.emplace_back(i, i + 1);
      break;
    case Family::F:
      chain(4);
      d.norms[2] = 1;
      d.norms[3] = 1;
      break;
    case Family::G:
      d.edges = {{0, 1}};
      d.norms[0] = make_rational(2, 3);
      break;
  }
  return d;
}

inline std::int64_t pairing_root_coroot(const IntMatrix& cartan, const IntVec& a, int i) {
  // <alpha, alpha_i^vee> for alpha with simple-root coefficients a.
  std::int64_t s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * cartan(j, i);
  return s;
}

/// Closes the simple roots under "add alpha_i when the string allows it".
/// Returns positive roots sorted by (height, coefficients).
inline std::vector<IntVec> close_positive_roots(const IntMatrix& cartan) {
  const int n = static_cast<int>(cartan.rows());
  std::set<IntVec> all;
  std::vector<IntVec> layer;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    all.insert(e);
    layer.push_back(e);
  }
  while (!layer.empty()) {
    std::set<IntVec> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < n; ++i) {
        // alpha_i-string through beta: beta - p alpha_i .. beta + q alpha_i,
        // p - q = <beta, alpha_i^vee>.
        int p = 0;
        IntVec down = beta;
        while (true) {
          down[i] -= 1;
          if (!all.count(down)) break;
          ++p;
        }
        const bool is_simple_i =
            std::count(beta.begin(), beta.end(), 0) == n - 1 && beta[i] == 1;
        if (is_simple_i) continue;  // 2 alpha_i is never a root
        const std::int64_t q = p - pairing_root_coroot(cartan, beta, i);
        if (q > 0) {
          IntVec up = beta;
          up[i] += 1;
          if (!all.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    all.insert(next.begin(), next.end());
  }
  std::vector<IntVec> roots(all.begin(), all.end());
  std::sort(roots.begin(), roots.end(), [](const IntVec& x, const IntVec& y) {
    const auto hx = std::accumulate(x.begin(), x.end(), std::int64_t{0});
    const auto hy = std::accumulate(y.begin(), y.end(), std::int64_t{0});
    return hx != hy ? hx < hy : x < y;
  });
  return roots;
}

}  // namespace detail

/// <alpha, beta> for roots given by simple-root coefficients.
inline Rational root_inner(const RootSystemData& rs, const IntVec& a, const IntVec& b) {
  Rational s = 0;
  for (int i = 0; i < rs.rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rs.rank; ++j)
      if (b[j] != 0) s += Rational(a[i] * b[j]) * rs.gram_root(i, j);
  }
  return s;
}

/// Builds the root system of type t.  Throws Error naming the violated rank constraint.
inline RootSystemData build(const CartanType& t) {
  if (auto v = t.violation(); !v.empty()) throw Error(v);
  const int n = t.rank;
  const auto dyn = detail::dynkin(t);

  RootSystemData rs;
  rs.cartan_type = t;
  rs.rank = n;

  rs.gram_root = RatMatrix(n, n);
  for (int i = 0; i < n; ++i) rs.gram_root(i, i) = dyn.norms[i];
  for (auto [i, j] : dyn.edges) {
    const Rational b = -std::max(dyn.norms[i], dyn.norms[j]) / 2;
    rs.gram_root(i, j) = b;
    rs.gram_root(j, i) = b;
  }

  rs.cartan = IntMatrix(n, n);
  rs.gram_coroot = IntMatrix(n, n);
  rs.length_factor.assign(n, 1);
  for (int i = 0; i < n; ++i) {
    rs.length_factor[i] = to_int64(Rational(2) / rs.gram_root(i, i));
    for (int j = 0; j < n; ++j) {
      rs.cartan(i, j) = to_int64(2 * rs.gram_root(i, j) / rs.gram_root(j, j));
      rs.gram_coroot(i, j) =
          to_int64(4 * rs.gram_root(i, j) / (rs.gram_root(i, i) * rs.gram_root(j, j)));
    }
  }

  for (const auto& c : detail::close_positive_roots(rs.cartan)) {
    Root r;
    r.coeffs = c;
    r.height = static_cast<int>(std::accumulate(c.begin(), c.end(), std::int64_t{0}));
    r.is_long = root_inner(rs, c, c) == 2;
    rs.positive_roots.push_back(std::move(r));
  }

  const Root& top = rs.positive_roots.back();
  rs.highest_root = top.coeffs;
  rs.coxeter_number = top.height + 1;
  if (root_inner(rs, top.coeffs, top.coeffs) != 2)
    throw ConsistencyError(t.name() + ": highest root does not have squared length 2");

  rs.highest_coroot.resize(n);
  for (int i = 0; i < n; ++i) {
    // theta is long, so theta^vee = theta = sum c_i alpha_i = sum c_i/lf_i alpha_i^vee
    if (rs.highest_root[i] % rs.length_factor[i] != 0)
      throw ConsistencyError(t.name() + ": non-integral comark");
    rs.highest_coroot[i] = rs.highest_root[i] / rs.length_factor[i];
  }

  // 1 + height of the highest short root (equals h when simply laced).
  int short_height = 0;
  for (const auto& r : rs.positive_roots)
    if (!r.is_long) short_height = std::max(short_height, r.height);
  rs.dual_coxeter_number = short_height == 0 ? rs.coxeter_number : short_height + 1;

  // #{j : e_j >= i} = number of roots of height i.
  const int h = rs.coxeter_number;
  std::vector<int> per_height(h + 1, 0);
  for (const auto& r : rs.positive_roots) per_height[r.height]++;
  for (int i = 1; i < h; ++i)
    for (int k = 0; k < per_height[i] - per_height[i + 1]; ++k) rs.exponents.push_back(i);

  rs.index_of_connection = static_cast<int>(determinant(rs.cartan));
  std::int64_t r = 1;
  for (auto f : rs.length_factor) r = std::max(r, f);
  rs.ratio_r = static_cast<int>(r);
  rs.period_c = static_cast<int>(lcm_of(rs.highest_root));

  const RatMatrix inv = inverse(rs.cartan);
  rs.cartan_adjugate = IntMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rs.cartan_adjugate(i, j) = to_int64(inv(i, j) * rs.index_of_connection);
  rs.coweights.assign(n, RatVec(n));
  rs.rho_check.assign(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      rs.coweights[i][j] = inv(j, i);
      rs.rho_check[j] += inv(j, i);
    }
  return rs;
}

inline RootSystemData build(std::string_view type_name) { return build(CartanType::parse(type_name)); }

/// The dual root system: transpose Cartan matrix, renormalized so its own
/// highest root has squared length 2.  Simple root i of the dual is alpha_i^vee.
inline IntMatrix dual_cartan(const RootSystemData& rs) { return rs.cartan.transpose(); }

/// Positive roots of height i; empty when i is out of range.
inline std::vector<Root> roots_of_height(const RootSystemData& rs, int i) {
  std::vector<Root> out;
  for (const auto& r : rs.positive_roots)
    if (r.height == i) out.push_back(r);
  return out;
}

/// <q, alpha> for q over simple coroots and alpha over simple roots.  Always an integer.
inline std::int64_t pairing(const RootSystemData& rs, const IntVec& q, const IntVec& root) {
  if (static_cast<int>(q.size()) != rs.rank || static_cast<int>(root.size()) != rs.rank)
    throw Error("pairing: dimension mismatch");
  std::int64_t s = 0;
  for (int i = 0; i < rs.rank; ++i) {
    if (q[i] == 0) continue;
    for (int j = 0; j < rs.rank; ++j) s += q[i] * root[j] * rs.cartan(j, i);
  }
  return s;
}

inline Rational pairing(const RootSystemData& rs, const RatVec& x, const IntVec& root) {
  if (static_cast<int>(x.size()) != rs.rank || static_cast<int>(root.size()) != rs.rank)
    throw Error("pairing: dimension mismatch");
  Rational s = 0;
  for (int i = 0; i < rs.rank; ++i) {
    if (x[i] == 0) continue;
    std::int64_t c = 0;
    for (int j = 0; j < rs.rank; ++j) c += root[j] * rs.cartan(j, i);
    if (c != 0) s += x[i] * c;
  }
  return s;
}

/// Pairing row for a root: <q, alpha> = sum_i row[i] q[i].
inline IntVec pairing_row(const RootSystemData& rs, const IntVec& root) {
  IntVec row(rs.rank, 0);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) row[i] += root[j] * rs.cartan(j, i);
  return row;
}

/// <v, v> for v over simple coroots.
inline Rational norm2(const RootSystemData& rs, const RatVec& v) {
  if (static_cast<int>(v.size()) != rs.rank) throw Error("norm2: dimension mismatch");
  return bilinear(v, rs.gram_coroot, v);
}

inline Rational inner(const RootSystemData& rs, const RatVec& v, const RatVec& w) {
  return bilinear(v, rs.gram_coroot, w);
}

/// r * g^vee * n (h+1) / 12.
inline Rational strange_formula_value(const RootSystemData& rs) {
  return Rational(rs.ratio_r * rs.dual_coxeter_number * rs.rank * (rs.coxeter_number + 1)) / 12;
}

/// g^vee recomputed from the dual root system: take the highest root of the
/// system with Cartan matrix A^T and convert it back to a root of Phi.
inline int dual_coxeter_from_dual_system(const RootSystemData& rs) {
  const auto dual_roots = detail::close_positive_roots(dual_cartan(rs));
  const IntVec& d = dual_roots.back();  // over alpha_i^vee
  // alpha_i^vee = lf_i alpha_i, so the dual highest root is sum d_i lf_i alpha_i, a
  // multiple of the highest short root of Phi; divide out the content.
  IntVec coeffs(rs.rank);
  std::int64_t g = 0;
  for (int i = 0; i < rs.rank; ++i) {
    coeffs[i] = d[i] * rs.length_factor[i];
    g = std::gcd(g, coeffs[i]);
  }
  std::int64_t ht = 0;
  for (auto c : coeffs) ht += c / g;
  return static_cast<int>(ht + 1);
}

/// The nine families at the ranks used throughout the tests and the CLI.
inline std::vector<CartanType> tabulated_types() {
  return {{Family::A, 2}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4}, {Family::E, 6},
          {Family::E, 7}, {Family::E, 8}, {Family::F, 4}, {Family::G, 2}};
}

}  // namespace corelat
