#pragma once

// Embeddings of the coroot lattices of B_n, C_n, D_n and G_2 into type A
// coroot lattices, and the resulting partition models.
//
// Ambient coordinates are integer vectors y with the true coroot equal to
// sqrt(scale) * y, so <x, x'> = scale * (y . y').  Only type C has scale 2.
//
//   A_n : alpha_i^vee = e_i - e_{i+1} in Z^{n+1}
//   B_n : e_i - e_{i+1}, alpha_n^vee = 2 e_n
//   C_n : e_i - e_{i+1}, alpha_n^vee = e_n            (scale 2)
//   D_n : e_i - e_{i+1}, alpha_n^vee = e_{n-1} + e_n
//   G_2 : alpha_1^vee = (-1,2,-1) (short root), alpha_2^vee = (1,-1,0)

#include "corelat/affine.hpp"
#include "corelat/cores.hpp"

namespace corelat {

struct AmbientModel {
  IntMatrix basis;  // columns are the simple coroots
  std::int64_t scale = 1;
};

inline AmbientModel ambient_model(const CartanType& t) {
  const int n = t.rank;
  AmbientModel m;
  switch (t.family) {
    case Family::A:
      m.basis = IntMatrix(n + 1, n);
      for (int i = 0; i < n; ++i) {
        m.basis(i, i) = 1;
        m.basis(i + 1, i) = -1;
      }
      return m;
    case Family::B:
    case Family::C:
    case Family::D:
      m.basis = IntMatrix(n, n);
      for (int i = 0; i + 1 < n; ++i) {
        m.basis(i, i) = 1;
        m.basis(i + 1, i) = -1;
      }
      if (t.family == Family::B) m.basis(n - 1, n - 1) = 2;
      if (t.family == Family::C) {
        m.basis(n - 1, n - 1) = 1;
        m.scale = 2;
      }
      if (t.family == Family::D) {
        m.basis(n - 2, n - 1) = 1;
        m.basis(n - 1, n - 1) = 1;
      }
      return m;
    case Family::G:
      m.basis = IntMatrix(3, 2);
      m.basis(0, 0) = -1;
      m.basis(1, 0) = 2;
      m.basis(2, 0) = -1;
      m.basis(0, 1) = 1;
      m.basis(1, 1) = -1;
      return m;
    default:
      throw Error("no ambient model for type " + t.name());
  }
}

inline IntVec to_ambient(const RootSystemData& rs, const IntVec& k) {
  return ambient_model(rs.cartan_type).basis * k;
}

/// Simple-coroot coordinates of an ambient vector; throws if y is not in the lattice.
inline IntVec from_ambient(const RootSystemData& rs, const IntVec& y) {
  const auto m = ambient_model(rs.cartan_type);
  if (y.size() != m.basis.rows()) throw Error("ambient dimension mismatch");
  // <y, alpha_j^vee> = scale * (V^T y)_j = sum_i k_i G_ij
  const IntVec rhs = m.basis.transpose() * y;
  const RatMatrix ginv = inverse(rs.gram_coroot);
  RatVec k = ginv * to_rational(scaled(rhs, m.scale));
  if (!all_integer(k)) throw Error("vector " + vec_to_string(y) + " is not in the coroot lattice of " + rs.name());
  IntVec out = to_integer(k);
  if (m.basis * out != y) throw Error("vector " + vec_to_string(y) + " is not in the coroot lattice of " + rs.name());
  return out;
}

struct EmbeddedPoint {
  CartanType source_type;
  IntVec source_coords;
  IntVec image;
};

/// Size of the type A modulus used by the model.
inline std::int64_t model_modulus(const CartanType& t) {
  switch (t.family) {
    case Family::B:
    case Family::C:
    case Family::D:
      return 2 * t.rank;
    case Family::G:
      return 3;
    default:
      throw Error("no partition model for type " + t.name());
  }
}

inline IntVec embed_ambient(const CartanType& t, const IntVec& y) {
  if (t.family == Family::G) return y;
  IntVec out(y);
  for (auto it = y.rbegin(); it != y.rend(); ++it) out.push_back(-*it);
  return out;
}

inline EmbeddedPoint embed(const RootSystemData& rs, const IntVec& x) {
  model_modulus(rs.cartan_type);  // rejects types without a model
  const IntVec y = to_ambient(rs, x);
  return {rs.cartan_type, x, embed_ambient(rs.cartan_type, y)};
}

/// Preimage of a type A tuple; throws if it is not in the image.
inline IntVec unembed(const RootSystemData& rs, const IntVec& image) {
  if (rs.cartan_type.family == Family::G) return from_ambient(rs, image);
  const std::size_t n = rs.rank;
  if (image.size() != 2 * n) throw Error("image has wrong length");
  IntVec y(image.begin(), image.begin() + n);
  if (embed_ambient(rs.cartan_type, y) != image) throw Error("tuple is not antisymmetric");
  return from_ambient(rs, y);
}

/// A generator's image: a type A word, or partition conjugation.
struct DictionaryEntry {
  bool conjugate = false;
  AffineWord word;
};

inline std::string describe(const DictionaryEntry& e) {
  if (e.conjugate) return "CONJUGATE";
  std::string s;
  for (int i : e.word.letters) s += (s.empty() ? "s" : " s") + std::to_string(i) + "^A";
  return s;
}

/// Entry i is the image of s_i, i = 0..n.  Words act right to left.
inline std::vector<DictionaryEntry> generator_dictionary(const CartanType& t) {
  const int n = t.rank;
  std::vector<DictionaryEntry> d(n + 1);
  auto word = [](std::initializer_list<int> l) { return DictionaryEntry{false, {std::vector<int>(l)}}; };
  switch (t.family) {
    case Family::C:
      d[0] = word({0});
      for (int i = 1; i < n; ++i) d[i] = word({i, 2 * n - i});
      d[n] = word({n});
      return d;
    case Family::B:
      d[0] = word({0, 1, 2 * n - 1, 0});
      for (int i = 1; i < n; ++i) d[i] = word({i, 2 * n - i});
      d[n] = word({n});
      return d;
    case Family::D:
      d[0] = word({0, 1, 2 * n - 1, 0});
      for (int i = 1; i < n; ++i) d[i] = word({i, 2 * n - i});
      d[n] = word({n, n - 1, n + 1, n});
      return d;
    case Family::G:
      d[0] = word({0});
      d[1] = {true, {}};
      d[2] = word({1});
      return d;
    default:
      throw Error("no generator dictionary for type " + t.name());
  }
}

/// Applies a dictionary entry to a type A tuple.
inline IntVec apply_entry(const DictionaryEntry& e, const IntVec& q) {
  if (e.conjugate) return conjugate_coroot(q);
  IntVec out = q;
  for (auto it = e.word.letters.rbegin(); it != e.word.letters.rend(); ++it) out = type_a_reflect(out, *it);
  return out;
}

/// Same, through the partitions: toggles and transposes.
inline Partition apply_entry(const DictionaryEntry& e, const Partition& p, std::int64_t a) {
  if (e.conjugate) return p.conjugate();
  Partition out = p;
  for (auto it = e.word.letters.rbegin(); it != e.word.letters.rend(); ++it) out = toggle_action(out, a, *it);
  return out;
}

/// size_i(x) read off the content counts of the model partition.
inline Rational model_size_i(const RootSystemData& rs, const IntVec& x, int i) {
  const int n = rs.rank;
  if (i < 0 || i > n) throw Error("index out of range");
  const auto a = model_modulus(rs.cartan_type);
  const Partition p = from_coroot(embed(rs, x).image);
  const IntVec l = content_counts(p, a);
  auto L = [&](std::int64_t j) { return Rational(l[detail::mod(j, a)]); };
  switch (rs.cartan_type.family) {
    case Family::C:
      if (i == 0 || i == n) return L(i);
      return L(i) + L(2 * n - i);
    case Family::B:
      if (i == 0) return L(0) / 2;
      if (i == 1) return (L(1) + L(2 * n - 1) - L(0)) / 2;
      return (L(i) + L(2 * n - i)) / 2;
    case Family::D:
      if (i == 0) return L(0) / 2;
      if (i == 1) return (L(1) + L(2 * n - 1) - L(0)) / 2;
      if (i == n - 1) return (L(n - 1) - L(n) + L(n + 1)) / 2;
      if (i == n) return L(n) / 2;
      return (L(i) + L(2 * n - i)) / 2;
    case Family::G:
      // alpha_1 is the short simple root
      if (i == 0) return L(0);
      if (i == 1) return 3 * L(2);
      return L(1) + L(2);
    default:
      throw Error("no partition model for type " + rs.name());
  }
}

/// Total size through the model: C |lambda|, B (|lambda| - lambda_0 + lambda_n)/2,
/// D (|lambda| - lambda_0 - lambda_n)/2, G_2 |lambda| + 3 lambda_2.
inline Rational model_total_size(const RootSystemData& rs, const IntVec& x) {
  const int n = rs.rank;
  const auto a = model_modulus(rs.cartan_type);
  const Partition p = from_coroot(embed(rs, x).image);
  const IntVec l = content_counts(p, a);
  const Rational total = p.size();
  switch (rs.cartan_type.family) {
    case Family::C:
      return total;
    case Family::B:
      return (total - l[0] + l[n]) / 2;
    case Family::D:
      return (total - l[0] - l[n]) / 2;
    case Family::G:
      return total + 3 * l[2];
    default:
      throw Error("no partition model for type " + rs.name());
  }
}

/// The G_2 refinement as printed, kept so tests can document where it fails:
/// size_0 = lambda_0, size_1 = lambda_0 + lambda_1 + lambda_2, size_2 = 3 lambda_2 - lambda_0.
inline Rational g2_printed_size_i(const IntVec& contents, int i) {
  if (i == 0) return contents[0];
  if (i == 1) return contents[0] + contents[1] + contents[2];
  return 3 * contents[2] - contents[0];
}

struct SelfConjugateCore {
  Partition partition;
  IntVec coroot;  // C_n simple-coroot coordinates
};

/// Self-conjugate 2n-cores with at most `bound` boxes, each with its C_n preimage.
inline std::vector<SelfConjugateCore> self_conjugate_cores(int n, std::int64_t bound) {
  const RootSystemData rs = build(CartanType{Family::C, n});
  std::vector<SelfConjugateCore> out;
  for (const auto& p : enumerate_cores_bfs(2 * n, bound)) {
    if (p.conjugate() != p) continue;
    out.push_back({p, unembed(rs, to_coroot(p, 2 * n))});
  }
  return out;
}

}  // namespace corelat
