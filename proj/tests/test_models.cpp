#include "corelat/models.hpp"

#include <gtest/gtest.h>

#include "oracle.hpp"

#include <random>

using namespace corelat;

namespace {

IntVec random_point(std::mt19937_64& rng, int n, int spread = 5) {
  IntVec x(n);
  for (auto& v : x) v = static_cast<std::int64_t>(rng() % (2 * spread + 1)) - spread;
  return x;
}

std::vector<AffineElement> generators(const RootSystemData& rs) {
  std::vector<AffineElement> g;
  for (int i = 0; i <= rs.rank; ++i) g.push_back(AffineElement::simple_reflection(rs, i));
  return g;
}

}  // namespace

TEST(Models, EmbedExamples) {
  const auto c2 = build("C2");
  EXPECT_EQ(embed(c2, IntVec{-1, 0}).image, (IntVec{-1, 1, -1, 1}));
  EXPECT_EQ(from_coroot(embed(c2, IntVec{-1, 0}).image), (Partition{4, 3, 2, 1}));
  for (const char* name : {"B3", "C3", "D4", "G2"}) {
    const auto rs = build(name);
    const auto img = embed(rs, IntVec(rs.rank, 0)).image;
    EXPECT_TRUE(std::all_of(img.begin(), img.end(), [](auto v) { return v == 0; })) << name;
  }
  const auto b2 = build("B2");
  EXPECT_EQ(to_ambient(b2, IntVec{1, 1}), (IntVec{1, 1}));
  EXPECT_EQ(embed(b2, IntVec{1, 1}).image, (IntVec{1, 1, -1, -1}));
  EXPECT_THROW(embed(build("A2"), IntVec{0, 0}), Error);
  EXPECT_THROW(embed(build("F4"), IntVec{0, 0, 0, 0}), Error);
}

TEST(Models, AmbientRoundTripAndLatticeMembership) {
  const auto b3 = build("B3");
  EXPECT_THROW(from_ambient(b3, IntVec{1, 0, 0}), Error);  // odd coordinate sum is outside the B lattice
  EXPECT_EQ(from_ambient(b3, IntVec{1, 1, 0}), (IntVec{1, 2, 1}));
  EXPECT_THROW(unembed(build("C2"), IntVec{1, 0, 1, 0}), Error);
  std::mt19937_64 rng(1);
  for (const char* name : {"A3", "B3", "C3", "D5", "G2"}) {
    const auto rs = build(name);
    for (int k = 0; k < 200; ++k) {
      const IntVec x = random_point(rng, rs.rank);
      EXPECT_EQ(from_ambient(rs, to_ambient(rs, x)), x) << name;
    }
  }
}

TEST(Models, AmbientGramAgrees) {
  // <x, x'> = scale * (y . y') against the Gram matrix of rootsys
  std::mt19937_64 rng(2);
  for (const char* name : {"A4", "B4", "C4", "D4", "G2"}) {
    const auto rs = build(name);
    const auto m = ambient_model(rs.cartan_type);
    for (int k = 0; k < 200; ++k) {
      const IntVec x = random_point(rng, rs.rank), z = random_point(rng, rs.rank);
      const IntVec y = to_ambient(rs, x), w = to_ambient(rs, z);
      std::int64_t dot = 0;
      for (std::size_t j = 0; j < y.size(); ++j) dot += y[j] * w[j];
      EXPECT_EQ(m.scale * dot, bilinear(x, rs.gram_coroot, z)) << name;
    }
  }
}

TEST(Models, Dictionaries) {
  auto words = [](const CartanType& t) {
    std::vector<std::string> out;
    for (const auto& e : generator_dictionary(t)) out.push_back(describe(e));
    return out;
  };
  EXPECT_EQ(words({Family::C, 2}), (std::vector<std::string>{"s0^A", "s1^A s3^A", "s2^A"}));
  EXPECT_EQ(words({Family::B, 2})[0], "s0^A s1^A s3^A s0^A");
  // alpha_1 is the short root here, so the conjugation sits at index 1
  EXPECT_EQ(words({Family::G, 2}), (std::vector<std::string>{"s0^A", "CONJUGATE", "s1^A"}));
  EXPECT_EQ(words({Family::D, 4}),
            (std::vector<std::string>{"s0^A s1^A s7^A s0^A", "s1^A s7^A", "s2^A s6^A", "s3^A s5^A",
                                      "s4^A s3^A s5^A s4^A"}));
}

TEST(Models, EquivarianceAndSizes) {
  std::mt19937_64 rng(3);
  for (const char* name : {"B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "G2"}) {
    const auto rs = build(name);
    const auto a = model_modulus(rs.cartan_type);
    const auto dict = generator_dictionary(rs.cartan_type);
    const auto gens = generators(rs);
    for (int k = 0; k < 1000; ++k) {
      const IntVec x = random_point(rng, rs.rank);
      const IntVec img = embed(rs, x).image;
      const Partition lam = from_coroot(img);
      ASSERT_TRUE(is_core(lam, a));
      for (int i = 0; i <= rs.rank; ++i) {
        const IntVec moved = embed(rs, gens[i](x)).image;
        ASSERT_EQ(moved, apply_entry(dict[i], img)) << name << " s" << i << " at " << vec_to_string(x);
        ASSERT_EQ(from_coroot(moved), apply_entry(dict[i], lam, a)) << name << " s" << i;
        ASSERT_EQ(model_size_i(rs, x, i), size_i_lattice(rs, x, i)) << name << " i=" << i;
      }
      ASSERT_EQ(model_total_size(rs, x), size_lattice(rs, x)) << name;
      if (rs.cartan_type.family == Family::C) {
        ASSERT_EQ(Rational(lam.size()), size_lattice(rs, x));
      }
    }
  }
}

TEST(Models, SelfConjugacyAndParity) {
  std::mt19937_64 rng(4);
  for (const char* name : {"B3", "C3", "D4"}) {
    const auto rs = build(name);
    const bool even = rs.cartan_type.family != Family::C;
    for (int k = 0; k < 500; ++k) {
      const IntVec img = embed(rs, random_point(rng, rs.rank)).image;
      const std::size_t m = img.size();
      for (std::size_t j = 0; j < m; ++j) EXPECT_EQ(img[j], -img[m - 1 - j]);
      const Partition lam = from_coroot(img);
      EXPECT_EQ(lam.conjugate(), lam);
      if (even) {
        EXPECT_EQ(lam.durfee() % 2, 0) << name;
      }
    }
  }
  // every self-conjugate 2n-core with even diagonal is hit by B and D
  for (const char* name : {"B3", "D4"}) {
    const auto rs = build(name);
    const auto a = model_modulus(rs.cartan_type);
    for (const auto& p : enumerate_cores_bfs(a, 40)) {
      if (p.conjugate() != p) continue;
      const IntVec q = to_coroot(p, a);
      if (p.durfee() % 2 == 0) {
        EXPECT_EQ(embed(rs, unembed(rs, q)).image, q) << name << " " << p.str();
      } else {
        EXPECT_THROW(unembed(rs, q), Error) << name << " " << p.str();
      }
    }
  }
}

TEST(Models, Isometry) {
  std::mt19937_64 rng(5);
  for (const char* name : {"B3", "C3", "D4", "G2"}) {
    const auto rs = build(name);
    const std::int64_t factor = rs.cartan_type.family == Family::B || rs.cartan_type.family == Family::D ? 2 : 1;
    for (int k = 0; k < 300; ++k) {
      const IntVec x = random_point(rng, rs.rank), z = random_point(rng, rs.rank);
      const IntVec ix = embed(rs, x).image, iz = embed(rs, z).image;
      std::int64_t dot = 0;
      for (std::size_t j = 0; j < ix.size(); ++j) dot += ix[j] * iz[j];
      EXPECT_EQ(dot, factor * bilinear(x, rs.gram_coroot, z)) << name;
    }
  }
}

TEST(Models, C2Example) {
  const auto c2 = build("C2");
  EXPECT_EQ(model_size_i(c2, IntVec{-1, 0}, 1), 6);
  const IntVec l = content_counts(Partition{4, 3, 2, 1}, 4);
  EXPECT_EQ(l[1] + l[3], 6);
  for (int i = 0; i <= 2; ++i) EXPECT_EQ(model_size_i(c2, IntVec{0, 0}, i), 0);
}

TEST(Models, G2AllSmallCores) {
  // every 3-core with at most 30 boxes, refined sizes through the model and the lattice
  const auto g2 = build("G2");
  std::size_t checked = 0;
  for (const auto& p : enumerate_cores_bfs(3, 30)) {
    const IntVec x = unembed(g2, to_coroot(p, 3));
    for (int i = 0; i <= 2; ++i) EXPECT_EQ(model_size_i(g2, x, i), size_i_lattice(g2, x, i)) << p.str();
    EXPECT_EQ(model_total_size(g2, x), size_lattice(g2, x)) << p.str();
    ++checked;
  }
  EXPECT_GT(checked, 20u);
}

TEST(Models, G2ConjugationCrossCheck) {
  // s_1 (short) on the coroot side is (x1,x2,x3) -> (-x3,-x2,-x1)
  std::mt19937_64 rng(6);
  const auto g2 = build("G2");
  const auto s1 = AffineElement::simple_reflection(g2, 1);
  for (int k = 0; k < 300; ++k) {
    const IntVec x = random_point(rng, 2);
    const IntVec y = to_ambient(g2, x);
    EXPECT_EQ(to_ambient(g2, s1(x)), (IntVec{-y[2], -y[1], -y[0]}));
  }
}

TEST(Models, PrintedG2RefinementFails) {
  // the printed refinement already disagrees at s_0(0)
  const auto g2 = build("G2");
  const IntVec x = AffineElement::simple_reflection(g2, 0)(IntVec{0, 0});
  const IntVec l = content_counts(from_coroot(embed(g2, x).image), 3);
  bool differs = false;
  for (int i = 0; i <= 2; ++i) differs |= g2_printed_size_i(l, i) != size_i_lattice(g2, x, i);
  EXPECT_TRUE(differs);
}

TEST(Models, PrintedBTotalFails) {
  // (|lambda| - lambda_0)/2 misses lambda_n/2
  const auto b2 = build("B2");
  std::mt19937_64 rng(8);
  bool differs = false;
  for (int k = 0; k < 50 && !differs; ++k) {
    const IntVec x = random_point(rng, 2);
    const Partition lam = from_coroot(embed(b2, x).image);
    const IntVec l = content_counts(lam, 4);
    differs = Rational(lam.size() - l[0], 2) != size_lattice(b2, x);
    EXPECT_EQ(model_total_size(b2, x), size_lattice(b2, x));
  }
  EXPECT_TRUE(differs);
}

TEST(Models, PrintedDWordFails) {
  // s_i -> s_i^A s_{2n+1-i}^A breaks equivariance for D4
  const auto d4 = build("D4");
  const auto s1 = AffineElement::simple_reflection(d4, 1);
  std::mt19937_64 rng(7);
  bool broke = false;
  for (int k = 0; k < 50 && !broke; ++k) {
    const IntVec x = random_point(rng, 4);
    const DictionaryEntry printed{false, AffineWord{{1, 0}}};  // s_8 is s_0 mod 8
    broke = embed(d4, s1(x)).image != apply_entry(printed, embed(d4, x).image);
  }
  EXPECT_TRUE(broke);
}

TEST(Models, SelfConjugateCores) {
  const auto none = self_conjugate_cores(2, 0);
  ASSERT_EQ(none.size(), 1u);
  EXPECT_EQ(none[0].partition, Partition{});
  EXPECT_EQ(none[0].coroot, (IntVec{0, 0}));

  const auto small = self_conjugate_cores(2, 10);
  bool found = false;
  for (const auto& c : small) {
    EXPECT_EQ(c.partition.conjugate(), c.partition);
    if (c.partition == Partition{4, 3, 2, 1}) {
      found = true;
      EXPECT_EQ(c.coroot, (IntVec{-1, 0}));
    }
  }
  EXPECT_TRUE(found);
  // oracle: self-conjugate partitions of at most 10 boxes with no hook of length 4
  std::set<Partition> expect;
  for (const auto& p : oracle::partitions_up_to(10))
    if (oracle::self_conjugate(p) && !oracle::has_hook(p, 4)) expect.insert(p);
  std::set<Partition> got;
  for (const auto& c : small) got.insert(c.partition);
  EXPECT_EQ(got, expect);
}
