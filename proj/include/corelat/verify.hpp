#pragma once

// Named verification suites.  Each returns a report with one check per scope
// item; the CLI turns a failing report into exit code 1.

#include "corelat/ehrhart.hpp"

#include <random>

namespace corelat::verify {

struct Check {
  std::string scope;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string theorem;
  bool evidence_only = false;  // a passing report is evidence, not a proof
  std::vector<Check> checks;

  Report() = default;
  explicit Report(std::string id, bool evidence = false) : theorem(std::move(id)), evidence_only(evidence) {}

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
  void add(std::string scope, bool ok, std::string detail = {}) {
    checks.push_back({std::move(scope), ok, std::move(detail)});
  }
};

struct Scope {
  std::vector<std::string> types;  // empty: the suite's default
  std::vector<std::int64_t> bs;    // empty: the suite's default
  std::uint64_t cap = default_cap();
};

inline const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"arm",   "main",   "max",     "transfer", "sizer",
                                            "welldef", "ip_content", "models", "haiman", "strange",
                                            "typea", "fg_poly", "conjecture"};
  return ids;
}

/// The k smallest b > 1 coprime to h.
inline std::vector<std::int64_t> smallest_coprime(const RootSystemData& rs, std::size_t k) {
  std::vector<std::int64_t> out;
  for (std::int64_t b = 2; out.size() < k; ++b)
    if (coprime_to_h(rs, b)) out.push_back(b);
  return out;
}

inline std::vector<std::string> main_types() { return {"A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2", "F4"}; }

inline std::vector<std::string> tabulated_names() {
  std::vector<std::string> out;
  for (const auto& t : tabulated_types()) out.push_back(t.name());
  return out;
}

namespace detail {

inline std::string tag(const RootSystemData& rs, std::int64_t b) { return rs.name() + " b=" + std::to_string(b); }

inline std::vector<std::int64_t> bs_for(const Scope& s, const RootSystemData& rs, std::size_t k) {
  if (s.bs.empty()) return smallest_coprime(rs, k);
  return s.bs;
}

inline std::vector<std::string> types_or(const Scope& s, std::vector<std::string> dflt) {
  return s.types.empty() ? dflt : s.types;
}

/// Runs f and records a consistency failure as a failed check.  Usage and
/// feasibility errors propagate.
template <class F>
void guarded(Report& rep, const std::string& scope, F&& f) {
  try {
    f();
  } catch (const ConsistencyError& e) {
    rep.add(scope, false, e.what());
  }
}

inline BigInt binomial(std::int64_t n, std::int64_t k) {
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

/// Counts and mean sizes of simultaneous (a, b)-cores through the type A pipeline.
inline Report arm(const Scope& s) {
  Report rep{"arm"};
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  if (s.types.empty()) {
    pairs = {{3, 4}, {3, 5}, {4, 5}, {5, 6}, {4, 7}};
  } else {
    for (const auto& t : s.types) {
      const auto ct = CartanType::parse(t);
      if (ct.family != Family::A) throw Error("verify arm takes type A only");
      for (auto b : s.bs.empty() ? std::vector<std::int64_t>{ct.rank + 2} : s.bs) pairs.emplace_back(ct.rank + 1, b);
    }
  }
  for (auto [a, b] : pairs) {
    const std::string scope = "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")";
    detail::guarded(rep, scope, [&] {
      const RootSystemData rs = build(CartanType{Family::A, static_cast<int>(a - 1)});
      const CoreSet cs = enumerate_cores(rs, b, s.cap);
      Rational total = 0;
      std::string bad;
      for (std::size_t i = 0; i < cs.points.size(); ++i) {
        const Partition p = from_coroot(to_ambient(rs, cs.points[i]));
        if (!is_core(p, a) || !is_core(p, b)) bad = p.str() + " is not an (a,b)-core";
        if (Rational(p.size()) != cs.sizes[i]) bad = p.str() + " box count differs from lattice size";
        total += p.size();
      }
      const BigInt expected_count = detail::binomial(a + b, b) / (a + b);
      const Rational mean = total / Rational(static_cast<std::int64_t>(cs.points.size()));
      const Rational expected_mean = Rational((a - 1) * (b - 1) * (a + b + 1), 24);
      const bool ok = bad.empty() && BigInt(cs.points.size()) == expected_count && mean == expected_mean;
      rep.add(scope, ok,
              "count " + std::to_string(cs.points.size()) + " (expected " + expected_count.str() + "), mean " +
                  to_string(mean) + " (expected " + to_string(expected_mean) + ")" + (bad.empty() ? "" : ", " + bad));
    });
  }
  return rep;
}

inline Report main_theorem(const Scope& s) {
  Report rep{"main"};
  for (const auto& t : detail::types_or(s, main_types())) {
    const RootSystemData rs = build(t);
    for (auto b : detail::bs_for(s, rs, 3)) {
      detail::guarded(rep, detail::tag(rs, b), [&] {
        const auto r = expected_size(rs, b, s.cap);
        rep.add(detail::tag(rs, b), r.match,
                "count " + std::to_string(r.count) + ", mean " + to_string(r.mean) + ", coweight route " +
                    to_string(r.mean_coweight) + ", closed form " + to_string(r.predicted));
      });
    }
  }
  return rep;
}

inline Report max(const Scope& s) {
  Report rep{"max"};
  for (const auto& t : detail::types_or(s, main_types())) {
    const RootSystemData rs = build(t);
    for (auto b : detail::bs_for(s, rs, 3)) {
      detail::guarded(rep, detail::tag(rs, b), [&] {
        const auto r = max_size(rs, enumerate_cores(rs, b, s.cap));
        rep.add(detail::tag(rs, b), r.passed(),
                "formula " + to_string(r.value) + ", scanned " + to_string(r.scanned_max) + " attained " +
                    std::to_string(r.attained) + "x at " + vec_to_string(r.argmax));
      });
    }
  }
  return rep;
}

inline Report transfer(const Scope& s) {
  Report rep{"transfer"};
  for (const auto& t : detail::types_or(s, main_types())) {
    const RootSystemData rs = build(t);
    for (auto b : detail::bs_for(s, rs, 3)) {
      detail::guarded(rep, detail::tag(rs, b), [&] {
        const auto [l, r] = transfer_multisets(rs, enumerate_cores(rs, b, s.cap));
        rep.add(detail::tag(rs, b), l == r, std::to_string(l.size()) + " values");
      });
    }
  }
  return rep;
}

inline Report haiman(const Scope& s) {
  Report rep{"haiman"};
  for (const auto& t : detail::types_or(s, tabulated_names())) {
    const RootSystemData rs = build(t);
    const std::size_t k = rs.cartan_type.family == Family::E && rs.rank >= 7 ? 1 : 3;
    for (auto b : detail::bs_for(s, rs, k)) {
      detail::guarded(rep, detail::tag(rs, b), [&] {
        require_coprime(rs, b);
        const auto coroot = enumerate_alcove(rs, b, Lattice::coroot, s.cap).size();
        const auto coweight = enumerate_alcove(rs, b, Lattice::coweight, s.cap).size();
        const Rational predicted = haiman_count(rs, b);
        const bool ok = Rational(static_cast<std::int64_t>(coroot)) == predicted &&
                        coweight == coroot * static_cast<std::size_t>(rs.index_of_connection);
        rep.add(detail::tag(rs, b), ok,
                "coroot points " + std::to_string(coroot) + ", predicted " + to_string(predicted) +
                    ", coweight points " + std::to_string(coweight));
      });
    }
  }
  return rep;
}

inline Report strange(const Scope& s) {
  Report rep{"strange"};
  for (const auto& t : detail::types_or(s, tabulated_names())) {
    const RootSystemData rs = build(t);
    const Rational lhs = rs.rho_norm2();
    const Rational rhs = strange_formula_value(rs);
    const bool dual_ok = dual_coxeter_from_dual_system(rs) == rs.dual_coxeter_number;
    rep.add(rs.name(), lhs == rhs && dual_ok,
            "<rho,rho> = " + to_string(lhs) + ", r g n (h+1)/12 = " + to_string(rhs));
  }
  return rep;
}

inline std::vector<std::string> small_rank_types() { return {"A2", "A3", "B2", "B3", "C2", "C3", "G2"}; }

/// Word-level sizes of a reduced word for e^{-1} against lattice sizes of e(0).
inline Report sizer(const Scope& s, std::size_t per_type = 200, std::uint64_t seed = 20240611) {
  Report rep{"sizer"};
  std::mt19937_64 rng(seed);
  for (const auto& t : detail::types_or(s, small_rank_types())) {
    const RootSystemData rs = build(t);
    std::vector<AffineElement> gens;
    for (int i = 0; i <= rs.rank; ++i) gens.push_back(AffineElement::simple_reflection(rs, i));
    std::size_t bad = 0;
    std::string first;
    for (std::size_t k = 0; k < per_type; ++k) {
      AffineElement e = AffineElement::identity(rs.rank);
      const std::size_t len = rng() % 11;
      for (std::size_t j = 0; j < len; ++j) e = e * gens[rng() % gens.size()];
      const AffineWord w = reduced_word(rs, e.inverse());
      const IntVec q = e(IntVec(rs.rank, 0));
      for (int i = 0; i <= rs.rank; ++i)
        if (size_i_word(rs, w, i) != size_i_lattice(rs, q, i)) {
          if (!bad++) first = "word '" + w.str() + "' index " + std::to_string(i);
          break;
        }
    }
    rep.add(rs.name(), bad == 0, std::to_string(per_type) + " elements" + (bad ? ", first failure " + first : ""));
  }
  return rep;
}

/// All reduced words of every element of length <= max_len give the same
/// size_i, and multiplying by a finite simple reflection on the coset side
/// leaves them unchanged.
inline Report welldef(const Scope& s, std::size_t max_len = 8) {
  Report rep{"welldef"};
  for (const auto& t : detail::types_or(s, small_rank_types())) {
    const RootSystemData rs = build(t);
    const int n = rs.rank;
    std::vector<AffineElement> gens;
    for (int i = 0; i <= n; ++i) gens.push_back(AffineElement::simple_reflection(rs, i));
    auto sizes_of = [&](const AffineWord& w) {
      std::vector<Rational> v;
      for (int i = 0; i <= n; ++i) v.push_back(size_i_word(rs, w, i));
      return v;
    };
    std::map<AffineElement, std::vector<Rational>, std::less<>> seen;
    std::size_t words = 0, bad = 0, coset_bad = 0;
    struct Node {
      AffineWord word;
      AffineElement elem;
    };
    std::vector<Node> layer{{AffineWord{}, AffineElement::identity(n)}};
    seen[layer[0].elem] = sizes_of(layer[0].word);
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<Node> next;
      for (const auto& node : layer)
        for (int i = 0; i <= n; ++i) {
          if (!act_affine_root(rs, node.elem, simple_affine_root(rs, i)).is_positive()) continue;
          Node m{node.word, node.elem * gens[i]};
          m.word.letters.push_back(i);
          ++words;
          const auto sz = sizes_of(m.word);
          auto [it, fresh] = seen.emplace(m.elem, sz);
          if (!fresh && it->second != sz) ++bad;
          next.push_back(std::move(m));
        }
      layer = std::move(next);
    }
    // The word represents the inverse of the element whose size is measured, so
    // the coset move is a left multiplication of the word.
    for (const auto& [elem, sz] : seen)
      for (int j = 1; j <= n; ++j)
        if (sizes_of(reduced_word(rs, gens[j] * elem)) != sz) ++coset_bad;
    rep.add(rs.name(), bad == 0 && coset_bad == 0,
            std::to_string(words) + " reduced words, " + std::to_string(seen.size()) + " elements, " +
                std::to_string(bad) + " word mismatches, " + std::to_string(coset_bad) + " coset mismatches");
  }
  return rep;
}

/// Content counts, toggle equivariance, conjugation and hook-freeness on all
/// a-cores with at most `boxes` boxes.
inline Report ip_content(const Scope& s, std::int64_t boxes = 60) {
  Report rep{"ip_content"};
  std::vector<std::int64_t> as{2, 3, 4, 5};
  if (!s.types.empty()) {
    as.clear();
    for (const auto& t : s.types) {
      const auto ct = CartanType::parse(t);
      if (ct.family != Family::A) throw Error("verify ip_content takes type A only");
      as.push_back(ct.rank + 1);
    }
  }
  for (auto a : as) {
    const RootSystemData rs = build(CartanType{Family::A, static_cast<int>(a - 1)});
    const auto cores = enumerate_cores_bfs(a, boxes);
    std::size_t content_bad = 0, lattice_bad = 0, action_bad = 0, conj_bad = 0, hook_bad = 0, round_bad = 0;
    for (const auto& p : cores) {
      const IntVec q = to_coroot(p, a);
      if (from_coroot(q) != p) ++round_bad;
      if (!is_core(from_coroot(q), a)) ++hook_bad;
      const IntVec cc = content_counts(p, a);
      std::int64_t nq = 0;
      for (auto v : q) nq += v * v;
      std::int64_t prefix = 0;
      const IntVec k = from_ambient(rs, q);
      for (std::int64_t i = 0; i < a; ++i) {
        // <q/2 - omega_i, q>, omega_i = (1,..,1,0,..,0) with i ones
        if (i > 0) prefix += q[i - 1];
        if (Rational(cc[i]) != make_rational(nq, 2) - prefix) ++content_bad;
        if (Rational(cc[i]) != size_i_lattice(rs, k, static_cast<int>(i))) ++lattice_bad;
        if (to_coroot(toggle_action(p, a, i), a) != type_a_reflect(q, i)) ++action_bad;
        if (toggle_action(toggle_action(p, a, i), a, i) != p) ++action_bad;
      }
      if (to_coroot(p.conjugate(), a) != conjugate_coroot(q)) ++conj_bad;
    }
    const bool ok = !(content_bad || lattice_bad || action_bad || conj_bad || hook_bad || round_bad);
    rep.add("a=" + std::to_string(a), ok,
            std::to_string(cores.size()) + " cores; failures: content " + std::to_string(content_bad) + ", lattice " +
                std::to_string(lattice_bad) + ", action " + std::to_string(action_bad) + ", conjugation " +
                std::to_string(conj_bad) + ", hooks " + std::to_string(hook_bad) + ", round trip " +
                std::to_string(round_bad));
  }
  return rep;
}

/// Equivariance, size correspondence, isometry and parity of the partition models.
inline Report models(const Scope& s, std::size_t points = 1000, std::uint64_t seed = 7) {
  Report rep{"models"};
  std::mt19937_64 rng(seed);
  for (const auto& t : detail::types_or(s, {"B2", "B3", "C2", "C3", "D4", "D5", "G2"})) {
    const RootSystemData rs = build(t);
    const auto a = model_modulus(rs.cartan_type);
    const auto dict = generator_dictionary(rs.cartan_type);
    const auto amb = ambient_model(rs.cartan_type);
    std::vector<AffineElement> gens;
    for (int i = 0; i <= rs.rank; ++i) gens.push_back(AffineElement::simple_reflection(rs, i));
    std::size_t equiv = 0, sizes = 0, totals = 0, iso = 0, parity = 0, round = 0;
    auto random_point = [&] {
      IntVec x(rs.rank);
      for (auto& v : x) v = static_cast<std::int64_t>(rng() % 11) - 5;
      return x;
    };
    const bool doubles = rs.cartan_type.family == Family::B || rs.cartan_type.family == Family::D;
    for (std::size_t k = 0; k < points; ++k) {
      const IntVec x = random_point(), x2 = random_point();
      const IntVec img = embed(rs, x).image;
      if (unembed(rs, img) != x) ++round;
      const Partition p = from_coroot(img);
      for (int i = 0; i <= rs.rank; ++i) {
        const IntVec moved = embed(rs, gens[i](x)).image;
        if (moved != apply_entry(dict[i], img)) ++equiv;
        if (from_coroot(moved) != apply_entry(dict[i], p, a)) ++equiv;
        if (model_size_i(rs, x, i) != size_i_lattice(rs, x, i)) ++sizes;
      }
      if (model_total_size(rs, x) != size_lattice(rs, x)) ++totals;
      std::int64_t dot = 0;
      const IntVec img2 = embed(rs, x2).image;
      for (std::size_t j = 0; j < img.size(); ++j) dot += img[j] * img2[j];
      const std::int64_t form = bilinear(x, rs.gram_coroot, x2);
      const std::int64_t factor = doubles ? 2 : 1;
      if (dot != factor * form) ++iso;
      if (rs.cartan_type.family != Family::G && p.conjugate() != p) ++parity;
      if (doubles && p.durfee() % 2 != 0) ++parity;
    }
    (void)amb;
    if (doubles) {
      // every self-conjugate 2n-core with even diagonal is hit, and no other
      for (const auto& p : enumerate_cores_bfs(a, 40)) {
        if (p.conjugate() != p) continue;
        bool hit = true;
        try {
          unembed(rs, to_coroot(p, a));
        } catch (const Error&) {
          hit = false;
        }
        if (hit != (p.durfee() % 2 == 0)) ++parity;
      }
    }
    const bool ok = !(equiv || sizes || totals || iso || parity || round);
    rep.add(rs.name(), ok,
            std::to_string(points) + " points; failures: equivariance " + std::to_string(equiv) + ", size_i " +
                std::to_string(sizes) + ", total " + std::to_string(totals) + ", form " + std::to_string(iso) +
                ", parity " + std::to_string(parity) + ", round trip " + std::to_string(round));
  }
  return rep;
}

inline Report typea(const Scope& s, std::int64_t order = 20) {
  Report rep{"typea"};
  std::vector<std::int64_t> as{2, 3, 4};
  if (!s.types.empty()) {
    as.clear();
    for (const auto& t : s.types) as.push_back(CartanType::parse(t).rank + 1);
  }
  for (auto a : as)
    detail::guarded(rep, "a=" + std::to_string(a), [&] {
      rep.add("a=" + std::to_string(a), typea_series_check(a, order), "order " + std::to_string(order));
    });
  return rep;
}

/// The displayed F4 and G2 polynomials, compared coefficient by coefficient,
/// plus the factorization and leading coefficient forced by the mean-size formula.
inline Report fg_poly(const Scope& s) {
  Report rep{"fg_poly"};
  struct Target {
    std::string type;
    Rational k;
    std::vector<std::int64_t> roots;
  };
  const std::vector<Target> targets{{"F4", Rational(1, 18432), {1, -1, -5, -7, -11, -13}},
                                    {"G2", Rational(1, 144), {1, -1, -5, -7}}};
  for (const auto& tg : targets) {
    if (!s.types.empty() && std::find(s.types.begin(), s.types.end(), tg.type) == s.types.end()) continue;
    const RootSystemData rs = build(tg.type);
    const Polynomial printed = Polynomial::from_roots(tg.k, tg.roots);
    // f * |W|^{-1} prod (b + e_j) * (r g/h) n (b-1)(h+b+1)/24
    Rational lead = Rational(rs.index_of_connection) / rs.weyl_group_order() *
                    Rational(rs.ratio_r * rs.dual_coxeter_number * rs.rank, rs.coxeter_number * 24);
    const Polynomial implied = Polynomial::from_roots(lead, tg.roots);
    for (std::int64_t r = 1; r < rs.period_c; ++r) {
      if (!coprime_to_h(rs, r)) continue;
      const std::string scope = rs.name() + " residue " + std::to_string(r);
      detail::guarded(rep, scope, [&] {
        InterpolationOptions opt;
        opt.cap = s.cap;
        const auto fit = interpolate(rs, r, opt);
        rep.add(scope + " printed", fit.poly == printed,
                "fitted " + fit.poly.str() + "; printed " + printed.str());
        rep.add(scope + " mean-size consistent", fit.poly == implied,
                "leading coefficient " + to_string(fit.poly.leading()) + ", implied " + to_string(lead));
      });
    }
  }
  return rep;
}

inline Report conjecture(const Scope& s) {
  Report rep{"conjecture"};
  rep.evidence_only = true;
  for (const auto& t : detail::types_or(s, {"A2", "C2", "G2"})) {
    const RootSystemData rs = build(t);
    for (auto b : detail::bs_for(s, rs, 2)) {
      detail::guarded(rep, detail::tag(rs, b), [&] {
        const auto r = check_wb_maximality(rs, b);
        std::string detail = std::to_string(r.checked) + " elements, " + std::to_string(r.counterexamples.size()) +
                             " counterexamples";
        for (const auto& q : r.counterexamples) detail += " " + vec_to_string(q);
        rep.add(detail::tag(rs, b), r.passed(), detail);
      });
    }
  }
  return rep;
}

inline Report run(const std::string& id, const Scope& s) {
  if (id == "arm") return arm(s);
  if (id == "main") return main_theorem(s);
  if (id == "max") return max(s);
  if (id == "transfer") return transfer(s);
  if (id == "sizer") return sizer(s);
  if (id == "welldef") return welldef(s);
  if (id == "ip_content") return ip_content(s);
  if (id == "models") return models(s);
  if (id == "haiman") return haiman(s);
  if (id == "strange") return strange(s);
  if (id == "typea") return typea(s);
  if (id == "fg_poly") return fg_poly(s);
  if (id == "conjecture") return conjecture(s);
  throw Error("unknown theorem id '" + id + "'");
}

}  // namespace corelat::verify
