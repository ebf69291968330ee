#include "corelat/affine.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace corelat;

namespace {

AffineRoot ar(IntVec r, std::int64_t k) { return {std::move(r), k}; }

AffineElement random_element(const RootSystemData& rs, std::mt19937_64& rng, std::size_t max_len) {
  AffineElement e = AffineElement::identity(rs.rank);
  const std::size_t len = rng() % (max_len + 1);
  for (std::size_t j = 0; j < len; ++j)
    e = e * AffineElement::simple_reflection(rs, static_cast<int>(rng() % (rs.rank + 1)));
  return e;
}

// Order of s_i s_j from the affine Cartan data: a_ij a_ji = 0, 1, 2, 3 gives 2, 3, 4, 6.
int braid_order(const RootSystemData& rs, int i, int j) {
  // <alpha_x, alpha_y^vee> through the finite parts; alpha_0 = -theta
  auto cartan = [&](int x, int y) -> std::int64_t {
    const IntVec ax = x == 0 ? scaled(rs.highest_root, std::int64_t{-1}) : simple_affine_root(rs, x).root;
    const IntVec ay = y == 0 ? scaled(rs.highest_root, std::int64_t{-1}) : simple_affine_root(rs, y).root;
    // 2 (ax, ay) / (ay, ay)
    const Rational v = 2 * root_inner(rs, ax, ay) / root_inner(rs, ay, ay);
    return to_int64(v);
  };
  const std::int64_t p = cartan(i, j) * cartan(j, i);
  if (p == 0) return 2;
  if (p == 1) return 3;
  if (p == 2) return 4;
  if (p == 3) return 6;
  return 0;  // A1 affine only; not used
}

std::multiset<AffineRoot> as_multiset(const InversionSequence& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST(Affine, ApplyExamples) {
  const auto a2 = build("A2");
  EXPECT_EQ(AffineElement::simple_reflection(a2, 0)(IntVec{0, 0}), (IntVec{1, 1}));
  // s1 s0 s1 s2 s1 s0 applied to 0; ambient (0,2,-2) is 2 alpha_2^vee... in simple-coroot
  // coordinates k with y = (k1, k2 - k1, -k2)
  const IntVec q = apply(a2, AffineWord::parse("1 0 1 2 1 0", 2), IntVec{0, 0});
  EXPECT_EQ(q, (IntVec{0, 2}));
  EXPECT_EQ((IntVec{q[0], q[1] - q[0], -q[1]}), (IntVec{0, 2, -2}));

  const auto c2 = build("C2");
  const AffineElement w = AffineElement::translation(IntVec{-1, 0}) * AffineElement::simple_reflection(c2, 2);
  EXPECT_EQ(w(IntVec{0, 0}), (IntVec{-1, 0}));
}

TEST(Affine, ActAffineRoot) {
  const auto a2 = build("A2");
  const auto id = AffineElement::identity(2);
  for (const auto& r : a2.positive_roots)
    for (std::int64_t k = -2; k <= 2; ++k) EXPECT_EQ(act_affine_root(a2, id, ar(r.coeffs, k)), ar(r.coeffs, k));
  const auto t = AffineElement::translation(IntVec{1, 0});
  EXPECT_EQ(act_affine_root(a2, t, ar({1, 0}, 0)), ar({1, 0}, -2));

  const AffineElement w = AffineElement::from_word(a2, AffineWord::parse("1 0 1 2 1 0", 2));
  const auto seq = inversion_sequence(a2, AffineWord::parse("0 1 2 1 0 1", 2));
  EXPECT_EQ(seq.back(), ar({0, -1}, 2));
  // the last entry is prefix(alpha_1) for the inverse word
  const AffineElement prefix = AffineElement::from_word(a2, AffineWord::parse("0 1 2 1 0", 2));
  EXPECT_EQ(act_affine_root(a2, prefix, simple_affine_root(a2, 1)), seq.back());
  EXPECT_EQ(w.inverse(), AffineElement::from_word(a2, AffineWord::parse("0 1 2 1 0 1", 2)));
}

TEST(Affine, InversionSequenceA2) {
  const auto a2 = build("A2");
  const auto seq = inversion_sequence(a2, AffineWord::parse("0 1 2 1 0 1", 2));
  const InversionSequence expect{ar({-1, -1}, 1), ar({0, -1}, 1), ar({-1, -1}, 2),
                                 ar({-1, 0}, 1),  ar({-1, -1}, 3), ar({0, -1}, 2)};
  EXPECT_EQ(seq, expect);
  EXPECT_TRUE(inversion_sequence(a2, AffineWord{}).empty());
}

TEST(Affine, InversionSequenceC2) {
  const auto c2 = build("C2");
  // word for w^{-1} with w = t_{-alpha_1^vee} s_2
  const AffineWord word = AffineWord::parse("0 1 2 0 1", 2);
  const InversionSequence expect{ar({-2, -1}, 1), ar({-1, -1}, 1), ar({-2, -1}, 2), ar({0, -1}, 1),
                                 ar({-1, -1}, 2)};
  EXPECT_EQ(inversion_sequence(c2, word), expect);
  EXPECT_EQ(size_i_word(c2, word, 1), 6);
  const AffineElement w = AffineElement::from_word(c2, word).inverse();
  EXPECT_EQ(w, AffineElement::translation(IntVec{-1, 0}) * AffineElement::simple_reflection(c2, 2));
  EXPECT_EQ(w(IntVec{0, 0}), (IntVec{-1, 0}));
}

TEST(Affine, SizeWord) {
  const auto a2 = build("A2");
  const AffineWord word = AffineWord::parse("0 1 2 1 0 1", 2);
  EXPECT_EQ(size_i_word(a2, word, 0), 4);
  EXPECT_EQ(size_i_word(a2, word, 1), 4);
  EXPECT_EQ(size_i_word(a2, word, 2), 2);
  for (int i = 0; i <= 2; ++i) EXPECT_EQ(size_i_word(a2, AffineWord{}, i), 0);
  EXPECT_THROW(size_i_word(a2, AffineWord::parse("1 1", 2), 1), Error);
}

TEST(Affine, SizeLattice) {
  const auto a2 = build("A2");
  EXPECT_EQ(size_i_lattice(a2, IntVec{0, 2}, 0), 4);
  EXPECT_EQ(size_i_lattice(a2, IntVec{0, 2}, 1), 4);
  EXPECT_EQ(size_i_lattice(a2, IntVec{0, 2}, 2), 2);
  EXPECT_EQ(size_i_lattice(build("C2"), IntVec{-1, 0}, 1), 6);
  for (const auto& t : tabulated_types()) {
    const auto rs = build(t);
    for (int i = 0; i <= rs.rank; ++i) EXPECT_EQ(size_i_lattice(rs, IntVec(rs.rank, 0), i), 0);
  }
}

TEST(Affine, SizeLatticeTotalMatchesGramOracle) {
  std::mt19937_64 rng(11);
  for (const char* name : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    const auto rs = build(name);
    for (int trial = 0; trial < 50; ++trial) {
      IntVec q(rs.rank);
      for (auto& v : q) v = static_cast<std::int64_t>(rng() % 9) - 4;
      // <(h/2) q - rho^vee, q> through the Gram matrix
      const RatVec qr = to_rational(q);
      const Rational expect = Rational(rs.coxeter_number, 2) * norm2(rs, qr) - inner(rs, rs.rho_check, qr);
      Rational sum = 0;
      for (int i = 0; i <= rs.rank; ++i) sum += size_i_lattice(rs, q, i);
      EXPECT_EQ(sum, expect) << name;
      EXPECT_EQ(size_lattice(rs, q), expect) << name;
    }
  }
}

TEST(Affine, IsReduced) {
  const auto a2 = build("A2");
  EXPECT_FALSE(is_reduced(a2, AffineWord::parse("1 1", 2)));
  EXPECT_TRUE(is_reduced(a2, AffineWord::parse("0 1 2 1 0 1", 2)));
  EXPECT_TRUE(is_reduced(a2, AffineWord{}));
  EXPECT_FALSE(is_reduced(a2, AffineWord::parse("1 2 1 2 1 2", 2)));
}

TEST(Affine, NonReducedNamesHyperplane) {
  const auto a2 = build("A2");
  try {
    inversion_sequence(a2, AffineWord::parse("0 1 1", 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("(0,-1)+1d"), std::string::npos) << e.what();
  }
}

TEST(Affine, WordParsing) {
  EXPECT_EQ(AffineWord::parse("0 1 2 1 0 1", 2).str(), "0 1 2 1 0 1");
  EXPECT_EQ(AffineWord::parse("", 2).letters.size(), 0u);
  EXPECT_THROW(AffineWord::parse("0 3", 2), Error);
  EXPECT_THROW(AffineWord::parse("0 x", 2), Error);
  EXPECT_EQ(AffineWord::parse("0 1 2", 2).reversed().str(), "2 1 0");
}

TEST(Affine, BraidRelations) {
  for (const char* name : {"A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2", "F4"}) {
    const auto rs = build(name);
    for (int i = 0; i <= rs.rank; ++i) {
      const auto si = AffineElement::simple_reflection(rs, i);
      EXPECT_TRUE((si * si).is_identity()) << name << " s" << i;
      for (int j = i + 1; j <= rs.rank; ++j) {
        const int m = braid_order(rs, i, j);
        ASSERT_GT(m, 0);
        const auto sij = si * AffineElement::simple_reflection(rs, j);
        AffineElement p = AffineElement::identity(rs.rank);
        for (int k = 1; k <= m; ++k) {
          p = p * sij;
          EXPECT_EQ(p.is_identity(), k == m) << name << " (s" << i << " s" << j << ")^" << k;
        }
      }
    }
  }
}

TEST(Affine, BraidMovesPreserveInversionMultiset) {
  std::mt19937_64 rng(3);
  for (const char* name : {"A2", "A3", "B2", "C3", "G2"}) {
    const auto rs = build(name);
    int moves = 0;
    for (int trial = 0; trial < 300; ++trial) {
      const AffineWord w = reduced_word(rs, random_element(rs, rng, 12));
      // find an alternating factor i j i ... of the braid length and replace it
      for (std::size_t pos = 0; pos < w.letters.size(); ++pos)
        for (std::size_t end = pos + 2; end <= w.letters.size(); ++end) {
          const int i = w.letters[pos], j = w.letters[pos + 1];
          if (i == j) break;
          const int m = braid_order(rs, i, j);
          if (static_cast<int>(end - pos) != m) continue;
          bool alternating = true;
          for (std::size_t k = pos; k < end; ++k)
            if (w.letters[k] != ((k - pos) % 2 ? j : i)) alternating = false;
          if (!alternating) continue;
          AffineWord v = w;
          for (std::size_t k = pos; k < end; ++k) v.letters[k] = (k - pos) % 2 ? i : j;
          ASSERT_TRUE(is_reduced(rs, v));
          EXPECT_EQ(AffineElement::from_word(rs, v), AffineElement::from_word(rs, w));
          EXPECT_EQ(as_multiset(inversion_sequence(rs, v)), as_multiset(inversion_sequence(rs, w))) << name;
          ++moves;
        }
    }
    EXPECT_GT(moves, 0) << name;
  }
}

TEST(Affine, CosetEquivariance) {
  // apply(w g, 0) = apply(w, 0) for finite g of length <= 6
  std::mt19937_64 rng(5);
  for (const char* name : {"A2", "B2", "C3", "G2"}) {
    const auto rs = build(name);
    std::set<AffineElement, std::less<>> finite{AffineElement::identity(rs.rank)};
    std::vector<AffineElement> layer{AffineElement::identity(rs.rank)};
    for (int len = 1; len <= 6; ++len) {
      std::vector<AffineElement> next;
      for (const auto& g : layer)
        for (int i = 1; i <= rs.rank; ++i) {
          const auto h = g * AffineElement::simple_reflection(rs, i);
          if (finite.insert(h).second) next.push_back(h);
        }
      layer = std::move(next);
    }
    for (int trial = 0; trial < 40; ++trial) {
      const auto w = random_element(rs, rng, 10);
      for (const auto& g : finite) EXPECT_EQ((w * g)(IntVec(rs.rank, 0)), w(IntVec(rs.rank, 0))) << name;
    }
  }
}

TEST(Affine, SizeWordAgreesWithLattice) {
  std::mt19937_64 rng(17);
  for (const char* name : {"A2", "A3", "B3", "C2", "G2"}) {
    const auto rs = build(name);
    for (int trial = 0; trial < 200; ++trial) {
      const auto w = random_element(rs, rng, 10);
      const AffineWord word = reduced_word(rs, w.inverse());
      ASSERT_EQ(AffineElement::from_word(rs, word), w.inverse());
      const IntVec q = w(IntVec(rs.rank, 0));
      for (int i = 0; i <= rs.rank; ++i) EXPECT_EQ(size_i_word(rs, word, i), size_i_lattice(rs, q, i)) << name;
    }
  }
}

TEST(Affine, ReducedWordLengthMatchesInversionCount) {
  std::mt19937_64 rng(23);
  const auto rs = build("B3");
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = random_element(rs, rng, 10);
    const AffineWord word = reduced_word(rs, w);
    EXPECT_TRUE(is_reduced(rs, word));
    EXPECT_EQ(length(rs, w), word.letters.size());
    EXPECT_EQ(inversion_set(rs, w).size(), word.letters.size());
  }
}

TEST(Affine, AlcoveReduce) {
  for (const auto& t : tabulated_types()) {
    const auto rs = build(t);
    const RatVec x = rho_over_h(rs);
    const auto red = alcove_reduce(rs, x);
    EXPECT_TRUE(red.u.is_identity()) << t.name();
    EXPECT_EQ(red.y, x);
  }
  const auto a2 = build("A2");
  const RatVec x = scaled(rho_over_h(a2), Rational(2));
  const auto red = alcove_reduce(a2, x);
  EXPECT_EQ(red.u(x), red.y);
  // brute force: y strictly inside A
  for (const auto& r : a2.positive_roots) EXPECT_GT(pairing(a2, red.y, r.coeffs), 0);
  EXPECT_LT(pairing(a2, red.y, a2.highest_root), 1);
  // projection
  EXPECT_TRUE(alcove_reduce(a2, red.y).u.is_identity());
  // u^{-1}(A) contains x: u^{-1} maps an interior point of A to the alcove of x, so the
  // sign pattern of <., alpha> - k agrees with x on every hyperplane
  const RatVec back = red.u.inverse()(rho_over_h(a2));
  for (const auto& r : a2.positive_roots)
    for (std::int64_t k = -3; k <= 3; ++k)
      EXPECT_EQ(pairing(a2, back, r.coeffs) > k, pairing(a2, x, r.coeffs) > k);
}

TEST(Affine, AlcoveReduceRejectsWalls) {
  const auto a2 = build("A2");
  EXPECT_THROW(alcove_reduce(a2, RatVec{Rational(0), Rational(0)}), Error);
  EXPECT_THROW(alcove_reduce(a2, RatVec{Rational(1, 2), Rational(1)}), Error);
  try {
    alcove_reduce(a2, RatVec{Rational(1, 3), Rational(2, 3)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("hyperplane"), std::string::npos);
  }
}

TEST(Affine, ComputeWb) {
  for (const auto& t : tabulated_types()) EXPECT_TRUE(compute_w_b(build(t), 1).is_identity()) << t.name();
  const auto a2 = build("A2");
  const auto w2 = compute_w_b(a2, 2);
  EXPECT_EQ(w2(rho_over_h(a2)), scaled(rho_over_h(a2), Rational(2)));
  EXPECT_THROW(compute_w_b(a2, 3), Error);
  EXPECT_THROW(compute_w_b(a2, 0), Error);
  for (const char* name : {"B3", "G2", "F4", "E6"}) {
    const auto rs = build(name);
    for (std::int64_t b = 1; b <= 13; ++b) {
      if (std::gcd(b, static_cast<std::int64_t>(rs.coxeter_number)) != 1) continue;
      EXPECT_EQ(compute_w_b(rs, b)(rho_over_h(rs)), scaled(rho_over_h(rs), Rational(b))) << name << " " << b;
    }
  }
}

TEST(Affine, WbMaximality) {
  const auto a2 = build("A2");
  EXPECT_TRUE(check_wb_maximality(a2, 1, {IntVec{0, 0}}).passed());
  EXPECT_EQ(check_wb_maximality(a2, 1, {IntVec{0, 0}}).checked, 1u);
}

TEST(Affine, DominantRepresentative) {
  std::mt19937_64 rng(29);
  for (const char* name : {"A2", "C2", "G2", "B3"}) {
    const auto rs = build(name);
    for (int trial = 0; trial < 40; ++trial) {
      IntVec q(rs.rank);
      for (auto& v : q) v = static_cast<std::int64_t>(rng() % 7) - 3;
      const auto u = dominant_representative(rs, q);
      EXPECT_EQ(u(q), IntVec(rs.rank, 0)) << name;
      // u^{-1} is the minimal element of its coset: u^{-1} s_i is longer for finite i
      const auto w = u.inverse();
      for (int i = 1; i <= rs.rank; ++i)
        EXPECT_GT(length(rs, w * AffineElement::simple_reflection(rs, i)), length(rs, w)) << name;
    }
  }
}
