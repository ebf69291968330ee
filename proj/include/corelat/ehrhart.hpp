#pragma once

// Weighted lattice-point sums over b*A, their quasipolynomial interpolation in
// b, the expected-size computations and the type A series identity.

#include "corelat/sommers.hpp"

#include <map>

namespace corelat {

/// Dense polynomial over Q, coefficients low to high.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RatVec coeffs) : c_(std::move(coeffs)) { trim(); }

  /// k * prod (x - r).
  static Polynomial from_roots(const Rational& k, const std::vector<std::int64_t>& roots) {
    Polynomial p(RatVec{k});
    for (auto r : roots) p = p * Polynomial(RatVec{Rational(-r), Rational(1)});
    return p;
  }

  const RatVec& coeffs() const { return c_; }
  int degree() const { return c_.empty() ? -1 : static_cast<int>(c_.size()) - 1; }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& x) const {
    Rational v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    RatVec c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    RatVec c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (c_[i] == 0) continue;
      if (!s.empty()) s += " + ";
      s += "(" + to_string(c_[i]) + ")";
      if (i > 0) s += i == 1 ? "*b" : "*b^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  RatVec c_;
};

/// Lagrange interpolation through (x_i, y_i).
inline Polynomial lagrange(const std::vector<std::int64_t>& xs, const std::vector<Rational>& ys) {
  Polynomial p;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Polynomial term(RatVec{ys[i]});
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      const Rational d = Rational(xs[i] - xs[j]);
      term = term * Polynomial(RatVec{Rational(-xs[j]) / d, Rational(1) / d});
    }
    p = p + term;
  }
  return p;
}

struct Quasipolynomial {
  std::int64_t period = 1;
  std::map<std::int64_t, Polynomial> components;

  Rational operator()(std::int64_t b) const {
    const auto r = detail::mod(b, period);
    auto it = components.find(r);
    if (it == components.end()) throw Error("no component for residue " + std::to_string(r));
    return it->second(Rational(b));
  }
};

namespace detail {

/// Coweight Gram matrix and <omega_i, rho>, scaled to integers.
struct CoweightForms {
  std::vector<std::vector<__int128>> gram;  // D * <omega_i, omega_j>
  std::vector<__int128> rho;                // E * <omega_i, rho>
  BigInt D = 1, E = 1;
};

inline CoweightForms coweight_forms(const RootSystemData& rs) {
  const int n = rs.rank;
  CoweightForms f;
  RatMatrix g(n, n);
  RatVec r(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = inner(rs, rs.coweights[i], rs.coweights[j]);
    r[i] = inner(rs, rs.coweights[i], rs.rho_check);
  }
  for (int i = 0; i < n; ++i) {
    f.E = boost::multiprecision::lcm(f.E, boost::multiprecision::denominator(r[i]));
    for (int j = 0; j < n; ++j) f.D = boost::multiprecision::lcm(f.D, boost::multiprecision::denominator(g(i, j)));
  }
  f.gram.assign(n, std::vector<__int128>(n));
  f.rho.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    f.rho[i] = to_int64(r[i] * Rational(f.E));
    for (int j = 0; j < n; ++j) f.gram[i][j] = to_int64(g(i, j) * Rational(f.D));
  }
  return f;
}

}  // namespace detail

struct WeightedSum {
  Rational value;
  std::uint64_t points = 0;
  bool cross_checked = false;  // direct definition evaluated point by point
};

/// Sum of size^(b) over b*A intersected with the coweight lattice, via the
/// split (h/2)|x|^2 - b<x, rho> + (b^2-1)|rho|^2/(2h).  When the point count is
/// at most `direct_limit` the direct definition is summed too and must agree.
inline WeightedSum weighted_enumerator_detail(const RootSystemData& rs, std::int64_t b,
                                              std::uint64_t cap = default_cap(),
                                              std::uint64_t direct_limit = 2000) {
  if (b < 1) throw Error("b must be positive");
  const BigInt total_points = count_dominant(rs, b);
  if (total_points > cap)
    throw FeasibilityError("b*A for " + rs.name() + ", b = " + std::to_string(b) + " has " + total_points.str() +
                           " coweight points, above the cap " + std::to_string(cap));
  const auto forms = detail::coweight_forms(rs);
  const int n = rs.rank;
  __int128 s2 = 0, s1 = 0;
  std::uint64_t count = 0;
  for_each_dominant(rs, b, [&](const IntVec& m) {
    ++count;
    for (int i = 0; i < n; ++i) {
      if (m[i] == 0) continue;
      s1 += forms.rho[i] * m[i];
      __int128 row = 0;
      for (int j = 0; j < n; ++j) row += forms.gram[i][j] * m[j];
      s2 += row * m[i];
    }
  });
  const int h = rs.coxeter_number;
  WeightedSum ws;
  ws.points = count;
  ws.value = Rational(h) / 2 * Rational(to_bigint(s2), forms.D) - Rational(b) * Rational(to_bigint(s1), forms.E) +
             Rational(static_cast<std::int64_t>(count)) * Rational(b * b - 1) * rs.rho_norm2() / (2 * h);
  if (count <= direct_limit) {
    Rational direct = 0;
    for_each_dominant(rs, b, [&](const IntVec& m) { direct += size_b(rs, b, coweight_to_coroot(rs, m)); });
    if (direct != ws.value)
      throw ConsistencyError("weighted enumerator for " + rs.name() + ", b = " + std::to_string(b) +
                             ": split form " + to_string(ws.value) + " != direct " + to_string(direct));
    ws.cross_checked = true;
  }
  return ws;
}

inline Rational weighted_enumerator(const RootSystemData& rs, std::int64_t b, std::uint64_t cap = default_cap()) {
  return weighted_enumerator_detail(rs, b, cap).value;
}

struct InterpolationOptions {
  std::int64_t period = 0;          // 0: use period_c
  std::uint64_t cap = default_cap();
  bool long_running = false;         // required for E7 and E8
  std::size_t held_out = 2;
};

struct InterpolationResult {
  std::int64_t period = 1;
  std::int64_t residue = 0;
  Polynomial poly;
  std::vector<std::int64_t> samples;
  std::vector<std::int64_t> held_out;
};

/// Fits the residue class through n+3 values at its smallest members b >= 1,
/// then checks further held-out members.
inline InterpolationResult interpolate(const RootSystemData& rs, std::int64_t residue,
                                       const InterpolationOptions& opt = {}) {
  if (rs.cartan_type.family == Family::E && rs.rank >= 7 && !opt.long_running)
    throw FeasibilityError("interpolation for " + rs.name() + " is long-running; enable it explicitly");
  InterpolationResult res;
  res.period = opt.period > 0 ? opt.period : rs.period_c;
  res.residue = detail::mod(residue, res.period);
  const std::size_t need = rs.rank + 3;
  std::int64_t b = res.residue == 0 ? res.period : res.residue;
  std::vector<Rational> ys;
  for (; res.samples.size() < need; b += res.period) {
    res.samples.push_back(b);
    ys.push_back(weighted_enumerator(rs, b, opt.cap));
  }
  res.poly = lagrange(res.samples, ys);
  for (std::size_t k = 0; k < opt.held_out; ++k, b += res.period) {
    const Rational actual = weighted_enumerator(rs, b, opt.cap);
    const Rational predicted = res.poly(Rational(b));
    if (actual != predicted)
      throw ConsistencyError("interpolation for " + rs.name() + " residue " + std::to_string(res.residue) +
                             " mod " + std::to_string(res.period) + " fails at held-out b = " + std::to_string(b) +
                             ": predicted " + to_string(predicted) + ", actual " + to_string(actual));
    res.held_out.push_back(b);
  }
  return res;
}

inline Quasipolynomial interpolate_all(const RootSystemData& rs, const InterpolationOptions& opt = {}) {
  Quasipolynomial q;
  q.period = opt.period > 0 ? opt.period : rs.period_c;
  for (std::int64_t r = 0; r < q.period; ++r) q.components[r] = interpolate(rs, r, opt).poly;
  return q;
}

/// (r g/h) n (b-1)(h+b+1)/24.
inline Rational expected_size_formula(const RootSystemData& rs, std::int64_t b) {
  return Rational(rs.ratio_r * rs.dual_coxeter_number, rs.coxeter_number) *
         Rational(rs.rank * (b - 1) * (rs.coxeter_number + b + 1), 24);
}

struct ExpectationReport {
  std::string type;
  std::int64_t b = 1;
  std::size_t count = 0;
  Rational total_size;
  Rational mean;            // direct average over core(X_n, b)
  Rational mean_coweight;   // (1/count)(1/f) * weighted enumerator
  Rational predicted;       // closed form
  bool match = false;
};

/// Mean size three ways; throws ConsistencyError naming the first diverging pair.
inline ExpectationReport expected_size(const RootSystemData& rs, std::int64_t b, std::uint64_t cap = default_cap()) {
  const CoreSet cs = enumerate_cores(rs, b, cap);
  ExpectationReport rep;
  rep.type = rs.name();
  rep.b = b;
  rep.count = cs.points.size();
  for (const auto& s : cs.sizes) rep.total_size += s;
  const Rational cnt(static_cast<std::int64_t>(rep.count));
  rep.mean = rep.total_size / cnt;
  rep.mean_coweight = weighted_enumerator(rs, b, cap) / cnt / rs.index_of_connection;
  rep.predicted = expected_size_formula(rs, b);
  const std::string tag = rs.name() + ", b = " + std::to_string(b) + ": ";
  if (rep.mean != rep.mean_coweight)
    throw ConsistencyError(tag + "direct mean " + to_string(rep.mean) + " != coweight mean " +
                           to_string(rep.mean_coweight));
  if (rep.mean != rep.predicted)
    throw ConsistencyError(tag + "direct mean " + to_string(rep.mean) + " != closed form " + to_string(rep.predicted));
  rep.match = true;
  return rep;
}

struct RootReport {
  std::vector<std::int64_t> asserted;  // candidates congruent to the residue
  std::vector<std::int64_t> extra;     // other candidates that also vanish
  std::vector<std::int64_t> failed;    // asserted but nonzero
  bool passed() const { return failed.empty(); }
};

/// Candidates are 1, -h-1 and -e_j.  A candidate is asserted for the residue
/// it is congruent to; the rest are reported when they happen to vanish.
inline RootReport reciprocity_roots(const RootSystemData& rs, const InterpolationResult& fit) {
  std::set<std::int64_t> cand{1, -rs.coxeter_number - 1};
  for (auto e : rs.exponents) cand.insert(-e);
  RootReport rep;
  for (auto x : cand) {
    const bool zero = fit.poly(Rational(x)) == 0;
    if (detail::mod(x, fit.period) == fit.residue) {
      rep.asserted.push_back(x);
      if (!zero) rep.failed.push_back(x);
    } else if (zero) {
      rep.extra.push_back(x);
    }
  }
  return rep;
}

inline RootReport reciprocity_roots(const RootSystemData& rs, std::int64_t residue,
                                    const InterpolationOptions& opt = {}) {
  const auto rep = reciprocity_roots(rs, interpolate(rs, residue, opt));
  if (!rep.passed())
    throw ConsistencyError("interpolated polynomial for " + rs.name() + " does not vanish at b = " +
                           std::to_string(rep.failed.front()));
  return rep;
}

/// Coefficients up to x^N of prod 1/(1 - x^i) versus
/// (prod 1/(1 - x^{a i}))^a * sum over a-cores of x^{|lambda|}.
/// Returns true or throws naming the first degree that differs.
inline bool typea_series_check(std::int64_t a, std::int64_t N) {
  if (a < 2) throw Error("a must be at least 2");
  if (N < 0 || N > 60) throw Error("order must be in 0..60");
  auto mul = [&](const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
    std::vector<BigInt> z(N + 1, 0);
    for (std::int64_t i = 0; i <= N; ++i)
      if (x[i] != 0)
        for (std::int64_t j = 0; i + j <= N; ++j) z[i + j] += x[i] * y[j];
    return z;
  };
  auto inverse_product = [&](std::int64_t step) {
    std::vector<BigInt> s(N + 1, 0);
    s[0] = 1;
    for (std::int64_t part = step; part <= N; part += step)
      for (std::int64_t k = part; k <= N; ++k) s[k] += s[k - part];
    return s;
  };
  const auto lhs = inverse_product(1);
  const auto one = inverse_product(a);
  std::vector<BigInt> rhs(N + 1, 0);
  rhs[0] = 1;
  for (std::int64_t k = 0; k < a; ++k) rhs = mul(rhs, one);
  std::vector<BigInt> cores(N + 1, 0);
  for (const auto& p : enumerate_cores_bfs(a, N)) cores[p.size()] += 1;
  rhs = mul(rhs, cores);
  for (std::int64_t k = 0; k <= N; ++k)
    if (lhs[k] != rhs[k])
      throw ConsistencyError("series differ at degree " + std::to_string(k) + ": " + lhs[k].str() + " vs " +
                             rhs[k].str());
  return true;
}

}  // namespace corelat
