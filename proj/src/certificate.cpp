#include "pgres/certificate.hpp"

namespace pgres {

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q) {
  if (q < 2) throw Error(ErrorKind::NonPrime, "order must be a prime power");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t h = 0;
  for (std::uint32_t r = q; r > 1; r /= p) {
    if (r % p != 0) throw Error(ErrorKind::NonPrime, std::to_string(q) + " is not a prime power");
    ++h;
  }
  return {p, h};
}

Json field_json(const Field& f) {
  return Json{{"p", f.characteristic()}, {"h", f.degree()}, {"modulus", f.modulus()}};
}

FieldPtr field_from_json(const Json& j) {
  const auto p = j.at("p").get<std::uint32_t>();
  const auto h = j.at("h").get<std::uint32_t>();
  std::optional<CoeffPoly> mod;
  if (j.contains("modulus")) mod = j.at("modulus").get<CoeffPoly>();
  return Field::make(p, h, mod);
}

Json report_json(const VerifyReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back(Json{{"kind", to_string(x.kind)}, {"witnesses", x.witnesses}});
  return Json{{"ok", r.ok},
              {"violations", v},
              {"stats", {{"points", r.stats.points}, {"lines", r.stats.lines}, {"t", r.stats.t}, {"beta", r.stats.beta}}}};
}

Json profile_json(const SecantProfile& p) {
  return Json{{"histogram", p.histogram}, {"is_blocking", p.is_blocking}, {"is_double_blocking", p.is_double_blocking}};
}

Json semioval_json(const SemiovalReport& r) {
  return Json{{"is_semioval", r.is_semioval},
              {"is_blocking_semioval", r.is_blocking_semioval},
              {"bound_margin", r.bound_margin}};
}

Json set_certificate(const std::string& kind, const MixedSet& s, const Plane& plane) {
  return Json{{"schema_version", kSchemaVersion},
              {"kind", kind},
              {"q", plane.order()},
              {"field", field_json(plane.field())},
              {"points", s.points},
              {"lines", s.lines}};
}

Json search_json(const SearchResult& r, const Plane& plane) {
  Json j{{"schema_version", kSchemaVersion},
         {"kind", "search_result"},
         {"search_kind", to_string(r.kind)},
         {"q", plane.order()},
         {"field", field_json(plane.field())},
         {"optimum", r.optimum},
         {"proof_mode", to_string(r.proof_mode)},
         {"nodes_explored", r.nodes_explored},
         {"budget_exceeded", r.budget_exceeded},
         {"witness", {{"points", r.witness.points}, {"lines", r.witness.lines}}},
         {"verified", verify_kind(r.witness, r.kind, plane)}};
  return j;
}

Json redei_json(const RedeiProfile& p) {
  Json k = Json::object();
  for (std::size_t m = 0; m < p.k.size(); ++m) k[std::to_string(m)] = p.k[m];
  std::vector<std::uint32_t> d;
  for (std::size_t m = 0; m < p.in_d.size(); ++m)
    if (p.in_d[m]) d.push_back(static_cast<std::uint32_t>(m));
  Json affine = Json::array();
  for (const auto& [x, y] : p.affine) affine.push_back({x.v, y.v});
  std::vector<std::uint32_t> transform;
  for (Elem e : p.transform) transform.push_back(e.v);
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "redei_profile"},
              {"q", p.q},
              {"focus", p.focus},
              {"frame", {{"linf_index", p.frame_line}, {"s", p.s}, {"infinity_point", p.infinity_point},
                         {"transform", transform}}},
              {"affine", affine},
              {"k", k},
              {"directions", d},
              {"ind", p.ind},
              {"delta", p.delta},
              {"t", p.t},
              {"beta", p.beta},
              {"identity_ok", p.identity_ok},
              {"euclid", {{"checked", p.euclid_checked}, {"ok", p.euclid_ok}}},
              {"delta_le_t", p.delta_le_t},
              {"delta_le_size", p.delta_le_size},
              {"focus_slope", p.focus_slope},
              {"k_focus", p.k_focus},
              {"ind_focus", p.ind_focus},
              {"szw", {{"lhs", p.szw_lhs}, {"rhs", p.szw_rhs}, {"holds", p.szw_ok}}},
              {"quadratic", p.quadratic}};
}

std::string canonical(const Json& j) { return j.dump() + "\n"; }

}  // namespace pgres
