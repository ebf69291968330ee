#pragma once

// Affine Weyl group elements, affine roots, inversion sequences and the
// size statistics.
//
// An element is stored as the affine map x -> W x + p on simple-coroot
// coordinates, together with the linear part's action R on simple-root
// coordinates.  Writing the element as w t_q, p = w(q).
//
// Words are products: the word (i_1, ..., i_L) is s_{i_1} s_{i_2} ... s_{i_L},
// so the rightmost letter acts on a point first.

#include "corelat/rootsys.hpp"

#include <map>
#include <optional>
#include <sstream>

namespace corelat {

struct AffineWord {
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(letters[i]);
    }
    return s;
  }

  AffineWord reversed() const { return {std::vector<int>(letters.rbegin(), letters.rend())}; }

  /// "0 1 2 1 0 1"; each letter must lie in 0..rank.
  static AffineWord parse(std::string_view s, int rank) {
    AffineWord w;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) {
      int v = 0;
      for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("malformed letter '" + tok + "'");
        v = v * 10 + (c - '0');
        if (v > rank) break;
      }
      if (v > rank)
        throw Error("letter " + tok + " out of range 0.." + std::to_string(rank));
      w.letters.push_back(v);
    }
    return w;
  }

  friend bool operator==(const AffineWord&, const AffineWord&) = default;
};

struct AffineRoot {
  IntVec root;  // simple-root coefficients, a root of Phi
  std::int64_t k = 0;

  bool is_positive() const {
    if (k != 0) return k > 0;
    for (auto c : root)
      if (c != 0) return c > 0;
    return false;
  }
  AffineRoot negated() const {
    AffineRoot r{root, -k};
    for (auto& c : r.root) c = -c;
    return r;
  }
  std::string str() const { return vec_to_string(root) + (k >= 0 ? "+" : "") + std::to_string(k) + "d"; }

  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
  friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;
};

using InversionSequence = std::vector<AffineRoot>;

class AffineElement {
 public:
  AffineElement() = default;

  static AffineElement identity(int n) {
    AffineElement e;
    e.W_ = e.Winv_ = e.R_ = e.Rinv_ = IntMatrix::identity(n);
    e.p_.assign(n, 0);
    return e;
  }

  /// Simple reflection s_i, i in 0..n.
  static AffineElement simple_reflection(const RootSystemData& rs, int i) {
    const int n = rs.rank;
    if (i < 0 || i > n) throw Error("reflection index out of range");
    AffineElement e = identity(n);
    if (i == 0) {
      // s_0 x = s_theta x + theta^vee
      const IntVec row = pairing_row(rs, rs.highest_root);  // <x, theta> = row . x
      IntVec theta_row(n, 0);  // <beta, theta^vee> = theta_row . beta
      for (int a = 0; a < n; ++a)
        for (int j = 0; j < n; ++j) theta_row[a] += rs.highest_coroot[j] * rs.cartan(a, j);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          e.W_(a, b) -= rs.highest_coroot[a] * row[b];
          e.R_(a, b) -= rs.highest_root[a] * theta_row[b];
        }
      e.p_ = rs.highest_coroot;
    } else {
      const int r = i - 1;
      for (int j = 0; j < n; ++j) {
        e.W_(r, j) -= rs.cartan(r, j);  // k -> k - <k, alpha_i> e_i
        e.R_(r, j) -= rs.cartan(j, r);  // a -> a - <a, alpha_i^vee> e_i
      }
    }
    e.Winv_ = e.W_;
    e.Rinv_ = e.R_;
    return e;
  }

  static AffineElement translation(const IntVec& q) {
    AffineElement e = identity(static_cast<int>(q.size()));
    e.p_ = q;
    return e;
  }

  static AffineElement from_word(const RootSystemData& rs, const AffineWord& w) {
    AffineElement e = identity(rs.rank);
    for (int i : w.letters) e = e * simple_reflection(rs, i);
    return e;
  }

  int rank() const { return static_cast<int>(p_.size()); }
  const IntMatrix& finite_part() const { return W_; }
  const IntMatrix& finite_part_inverse() const { return Winv_; }
  const IntMatrix& root_action() const { return R_; }
  const IntVec& offset() const { return p_; }  // image of 0

  /// q with this = w t_q.
  IntVec translation_part() const { return Winv_ * p_; }

  IntVec operator()(const IntVec& x) const { return added(W_ * x, p_); }

  RatVec operator()(const RatVec& x) const {
    const int n = rank();
    RatVec out(n);
    for (int i = 0; i < n; ++i) {
      Rational s = p_[i];
      for (int j = 0; j < n; ++j)
        if (W_(i, j) != 0 && x[j] != 0) s += W_(i, j) * x[j];
      out[i] = s;
    }
    return out;
  }

  AffineElement inverse() const {
    AffineElement e;
    e.W_ = Winv_;
    e.Winv_ = W_;
    e.R_ = Rinv_;
    e.Rinv_ = R_;
    e.p_ = Winv_ * p_;
    for (auto& v : e.p_) v = -v;
    return e;
  }

  friend AffineElement operator*(const AffineElement& a, const AffineElement& b) {
    AffineElement e;
    e.W_ = a.W_ * b.W_;
    e.Winv_ = b.Winv_ * a.Winv_;
    e.R_ = a.R_ * b.R_;
    e.Rinv_ = b.Rinv_ * a.Rinv_;
    e.p_ = added(a.W_ * b.p_, a.p_);
    return e;
  }

  bool is_identity() const {
    return W_ == IntMatrix::identity(W_.rows()) &&
           std::all_of(p_.begin(), p_.end(), [](auto v) { return v == 0; });
  }

  friend bool operator==(const AffineElement& a, const AffineElement& b) {
    return a.W_ == b.W_ && a.p_ == b.p_;
  }
  friend bool operator<(const AffineElement& a, const AffineElement& b) {
    return a.W_ != b.W_ ? a.W_ < b.W_ : a.p_ < b.p_;
  }

 private:
  IntMatrix W_, Winv_, R_, Rinv_;
  IntVec p_;
};

inline IntVec apply(const RootSystemData& rs, const AffineWord& w, const IntVec& q) {
  return AffineElement::from_word(rs, w)(q);
}
inline IntVec apply(const AffineElement& e, const IntVec& q) { return e(q); }

/// w(alpha) + (k - <alpha, q>) delta for the element w t_q.
inline AffineRoot act_affine_root(const RootSystemData& rs, const AffineElement& e, const AffineRoot& ar) {
  AffineRoot out;
  out.root = e.root_action() * ar.root;
  out.k = ar.k - pairing(rs, e.offset(), out.root);
  return out;
}

inline AffineRoot simple_affine_root(const RootSystemData& rs, int i) {
  if (i == 0) {
    AffineRoot a{rs.highest_root, 1};
    for (auto& c : a.root) c = -c;
    return a;
  }
  IntVec e(rs.rank, 0);
  e[i - 1] = 1;
  return {e, 0};
}

namespace detail {
inline InversionSequence raw_inversions(const RootSystemData& rs, const AffineWord& w) {
  InversionSequence seq;
  AffineElement prefix = AffineElement::identity(rs.rank);
  for (int i : w.letters) {
    if (i < 0 || i > rs.rank) throw Error("letter out of range");
    seq.push_back(act_affine_root(rs, prefix, simple_affine_root(rs, i)));
    prefix = prefix * AffineElement::simple_reflection(rs, i);
  }
  return seq;
}
}  // namespace detail

/// A word is reduced iff every inversion-sequence entry is positive; a
/// negative entry is a hyperplane that was already crossed.
inline bool is_reduced(const RootSystemData& rs, const AffineWord& w) {
  for (const auto& a : detail::raw_inversions(rs, w))
    if (!a.is_positive()) return false;
  return true;
}

inline InversionSequence inversion_sequence(const RootSystemData& rs, const AffineWord& w) {
  auto seq = detail::raw_inversions(rs, w);
  for (std::size_t j = 0; j < seq.size(); ++j)
    if (!seq[j].is_positive())
      throw Error("word '" + w.str() + "' is not reduced: hyperplane " + seq[j].negated().str() +
                  " is crossed again at position " + std::to_string(j + 1));
  return seq;
}

/// Word-level size_i; the word should represent the inverse of the element being measured.
inline Rational size_i_word(const RootSystemData& rs, const AffineWord& w, int i) {
  if (i < 0 || i > rs.rank) throw Error("index out of range");
  const auto seq = inversion_sequence(rs, w);
  std::int64_t s = 0;
  for (std::size_t j = 0; j < seq.size(); ++j)
    if (w.letters[j] == i) s += seq[j].k;
  return Rational(rs.root_length_factor(i) * s);
}

/// <(c_i/2) q - omega_i^vee, q>, with omega_0^vee = 0 and c_0 = 1.
inline Rational size_i_lattice(const RootSystemData& rs, const IntVec& q, int i) {
  if (i < 0 || i > rs.rank) throw Error("index out of range");
  if (static_cast<int>(q.size()) != rs.rank) throw Error("dimension mismatch");
  const std::int64_t nq = bilinear(q, rs.gram_coroot, q);
  Rational v = make_rational(rs.mark(i) * nq, 2);
  if (i > 0) v -= rs.length_factor[i - 1] * q[i - 1];
  return v;
}

/// <(h/2) q - rho^vee, q> = sum_i size_i.
inline Rational size_lattice(const RootSystemData& rs, const IntVec& q) {
  const std::int64_t nq = bilinear(q, rs.gram_coroot, q);
  std::int64_t rho = 0;  // <rho^vee, q> = sum_i lf_i q_i
  for (int i = 0; i < rs.rank; ++i) rho += rs.length_factor[i] * q[i];
  return make_rational(rs.coxeter_number * nq, 2) - rho;
}

struct AlcoveReduction {
  AffineElement u;      // u(x) = y
  RatVec y;             // lies in the interior of the fundamental alcove
  AffineWord applied;   // walls crossed, in order; u = s_{last} ... s_{first}
};

/// Walks x into the fundamental alcove, always reflecting in the lowest-index
/// violated wall (index 0 is the affine wall).
inline AlcoveReduction alcove_reduce(const RootSystemData& rs, const RatVec& x) {
  const int n = rs.rank;
  if (static_cast<int>(x.size()) != n) throw Error("dimension mismatch");
  for (const auto& r : rs.positive_roots) {
    const Rational v = pairing(rs, x, r.coeffs);
    if (is_integer(v))
      throw Error("point lies on affine hyperplane " + AffineRoot{r.coeffs, -to_int64(v)}.str());
  }
  std::vector<IntVec> walls;
  walls.push_back(pairing_row(rs, rs.highest_root));
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    walls.push_back(pairing_row(rs, e));
  }
  auto eval = [&](const RatVec& v, int w) {
    Rational s = 0;
    for (int j = 0; j < n; ++j)
      if (walls[w][j] != 0 && v[j] != 0) s += walls[w][j] * v[j];
    return s;
  };
  std::vector<AffineElement> refl;
  for (int i = 0; i <= n; ++i) refl.push_back(AffineElement::simple_reflection(rs, i));

  AlcoveReduction red{AffineElement::identity(n), x, {}};
  while (true) {
    int hit = -1;
    if (eval(red.y, 0) > 1) hit = 0;
    for (int i = 1; hit < 0 && i <= n; ++i)
      if (eval(red.y, i) < 0) hit = i;
    if (hit < 0) break;
    red.y = refl[hit](red.y);
    red.u = refl[hit] * red.u;
    red.applied.letters.push_back(hit);
  }
  return red;
}

inline RatVec rho_over_h(const RootSystemData& rs) {
  RatVec v = rs.rho_check;
  for (auto& c : v) c /= rs.coxeter_number;
  return v;
}

/// A reduced word for e: the walls crossed when walking e(rho^vee/h) home.
inline AffineWord reduced_word(const RootSystemData& rs, const AffineElement& e) {
  return alcove_reduce(rs, e(rho_over_h(rs))).applied;
}

inline std::size_t length(const RootSystemData& rs, const AffineElement& e) {
  return reduced_word(rs, e).size();
}

/// w_b with w_b(rho^vee/h) = b rho^vee/h.
inline AffineElement compute_w_b(const RootSystemData& rs, std::int64_t b) {
  if (b < 1 || std::gcd(b, static_cast<std::int64_t>(rs.coxeter_number)) != 1)
    throw Error("b = " + std::to_string(b) + " is not a positive integer coprime to h = " +
                std::to_string(rs.coxeter_number));
  const RatVec base = rho_over_h(rs);
  const auto red = alcove_reduce(rs, scaled(base, Rational(b)));
  if (red.y != base) throw ConsistencyError("alcove reduction of b rho/h did not land on rho/h");
  AffineElement wb = red.u.inverse();
  if (wb(base) != scaled(base, Rational(b))) throw ConsistencyError("w_b check failed");
  return wb;
}

/// Left inversion set: positive affine roots separating the fundamental
/// alcove from e(fundamental alcove).
inline std::set<AffineRoot> inversion_set(const RootSystemData& rs, const AffineElement& e) {
  const RatVec p = e(rho_over_h(rs));
  std::set<AffineRoot> out;
  for (const auto& r : rs.positive_roots) {
    const Rational v = pairing(rs, p, r.coeffs);
    // alpha + k delta, k >= 0: negative at p iff k < -v
    for (std::int64_t k = 0; k < -v; ++k) out.insert({r.coeffs, k});
    // -alpha + k delta, k >= 1: negative at p iff k < v
    IntVec neg = r.coeffs;
    for (auto& c : neg) c = -c;
    for (std::int64_t k = 1; k < v; ++k) out.insert({neg, k});
  }
  return out;
}

/// The dominant element u with u(q) = 0 (so u^{-1}(0) = q).
inline AffineElement dominant_representative(const RootSystemData& rs, const IntVec& q) {
  std::int64_t m = 0;
  for (const auto& r : rs.positive_roots) m = std::max(m, std::abs(pairing(rs, q, r.coeffs)));
  const Rational eps = make_rational(1, 2 * (2 + m));
  const RatVec rq = to_rational(q);
  const RatVec z = added(rq, scaled(subtracted(rho_over_h(rs), rq), eps));
  return alcove_reduce(rs, z).u;
}

struct MaximalityReport {
  std::int64_t b = 1;
  std::size_t checked = 0;
  std::vector<IntVec> counterexamples;
  bool passed() const { return counterexamples.empty(); }
};

/// For each q, tests inv(w~_q) within inv(w_b).  Evidence only, not a proof.
inline MaximalityReport check_wb_maximality(const RootSystemData& rs, std::int64_t b,
                                            const std::vector<IntVec>& cores) {
  MaximalityReport rep;
  rep.b = b;
  const AffineElement wb = compute_w_b(rs, b);
  const auto big = inversion_set(rs, wb);
  for (const auto& q : cores) {
    const AffineElement u = dominant_representative(rs, q);
    if (u.inverse()(IntVec(rs.rank, 0)) != q) throw ConsistencyError("dominant representative mismatch");
    const auto small = inversion_set(rs, u);
    if (!std::includes(big.begin(), big.end(), small.begin(), small.end()))
      rep.counterexamples.push_back(q);
    ++rep.checked;
  }
  return rep;
}

}  // namespace corelat
