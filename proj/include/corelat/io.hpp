#pragma once

// JSON and CSV views of library values.  Needs nlohmann/json ("json.hpp").
// Rationals are written as lowest-terms "p/q" strings, integers as "p".

#include "corelat/ehrhart.hpp"

#include "json.hpp"

namespace corelat::io {

using nlohmann::json;

inline json rat(const Rational& r) { return to_string(r); }

inline json rat_vec(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat(x));
  return a;
}

inline json matrix(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(m.row(i));
  return a;
}

inline json root_system(const RootSystemData& rs) {
  json roots = json::array();
  for (const auto& r : rs.positive_roots) roots.push_back({{"coeffs", r.coeffs}, {"height", r.height}, {"long", r.is_long}});
  json coweights = json::array();
  for (const auto& w : rs.coweights) coweights.push_back(rat_vec(w));
  return {
      {"cartan_type", rs.name()},
      {"family", std::string(1, family_letter(rs.cartan_type.family))},
      {"rank", rs.rank},
      {"cartan_matrix", matrix(rs.cartan)},
      {"gram_coroot", matrix(rs.gram_coroot)},
      {"invariants",
       {{"h", rs.coxeter_number},
        {"dual_h", rs.dual_coxeter_number},
        {"exponents", rs.exponents},
        {"marks", rs.highest_root},
        {"f", rs.index_of_connection},
        {"r", rs.ratio_r},
        {"period_c", rs.period_c},
        {"weyl_order", rs.weyl_group_order()},
        {"num_positive_roots", rs.positive_roots.size()},
        {"rho_check", rat_vec(rs.rho_check)},
        {"rho_norm2", rat(rs.rho_norm2())}}},
      {"coweights", coweights},
      {"positive_roots", roots},
  };
}

inline json element(const AffineElement& e) {
  return {{"matrix", matrix(e.finite_part())}, {"translation", e.translation_part()}};
}

inline json polynomial(const Polynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(rat(c));
  return a;
}

inline json quasipolynomial(const Quasipolynomial& q) {
  json comps = json::object();
  for (const auto& [r, p] : q.components) comps[std::to_string(r)] = polynomial(p);
  return {{"period", q.period}, {"components", comps}};
}

/// Partition model for cores listings: type A via the ambient tuple, type C via the embedding.
inline std::optional<std::pair<IntVec, Partition>> partition_model(const RootSystemData& rs, const IntVec& q) {
  if (rs.cartan_type.family == Family::A) {
    const IntVec y = to_ambient(rs, q);
    return std::make_pair(y, from_coroot(y));
  }
  if (rs.cartan_type.family == Family::C) {
    const IntVec y = embed(rs, q).image;
    return std::make_pair(y, from_coroot(y));
  }
  return std::nullopt;
}

inline json core_set(const RootSystemData& rs, const CoreSet& cs) {
  json rows = json::array();
  Rational total = 0;
  for (std::size_t i = 0; i < cs.points.size(); ++i) {
    json row = {{"coroot", cs.points[i]}, {"size", rat(cs.sizes[i])}};
    if (auto m = partition_model(rs, cs.points[i])) {
      row["image"] = m->first;
      row["partition"] = m->second.parts();
    }
    rows.push_back(row);
    total += cs.sizes[i];
  }
  std::vector<Rational> sorted = cs.sizes;
  std::sort(sorted.begin(), sorted.end());
  json sizes = json::array();
  for (const auto& s : sorted) sizes.push_back(rat(s));
  const auto mx = max_size(rs, cs);
  return {{"type", rs.name()},
          {"b", cs.b},
          {"count", cs.points.size()},
          {"sizes", sizes},
          {"mean", rat(total / Rational(static_cast<std::int64_t>(cs.points.size())))},
          {"max", rat(mx.scanned_max)},
          {"argmax", mx.argmax},
          {"cores", rows}};
}

inline std::string csv_tuple(const IntVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

inline std::string core_set_csv(const RootSystemData& rs, const CoreSet& cs) {
  std::string out = "type,b,coroot,size,image,partition\n";
  for (std::size_t i = 0; i < cs.points.size(); ++i) {
    out += rs.name() + "," + std::to_string(cs.b) + "," + csv_tuple(cs.points[i]) + "," + to_string(cs.sizes[i]) + ",";
    if (auto m = partition_model(rs, cs.points[i])) out += csv_tuple(m->first) + "," + csv_tuple(m->second.parts());
    else out += ",";
    out += "\n";
  }
  return out;
}

}  // namespace corelat::io
