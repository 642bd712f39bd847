#include "qalcove/serialize.hpp"

#include <complex>
#include <limits>
#include <sstream>

namespace qalcove {

namespace {

Json bigint_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

Json complex_json(std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json weights_json(const std::vector<Weight>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(to_json(w));
  return out;
}

void flatten(const Json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(*it, path.empty() ? it.key() : path + "." + it.key(), os);
  } else if (j.is_array()) {
    if (j.empty()) os << path << "\t[]\n";
    for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], path + "." + std::to_string(k), os);
  } else {
    os << path << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

Json to_json(const Weight& w) { return w.to_string(); }

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(std::vector<std::int64_t>(m.row(r).begin(), m.row(r).end()));
  return out;
}

Json to_json(const CycNum& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(bigint_json(c));
  return Json{{"n", x.ring()->n()}, {"coeffs", std::move(coeffs)}};
}

Json to_json_numeric(const CycNum& x, std::int64_t residue) { return complex_json(x.embed(residue)); }

Json root_system_json(const RootSystem& rs) {
  const auto& c = rs.constants();
  return Json{
      {"type", rs.type().to_string()},
      {"rank", rs.rank()},
      {"constants", {{"L", c.L}, {"D", c.D}, {"h", c.h}, {"hv", c.hv}}},
      {"cartan", to_json(rs.cartan())},
      {"d", rs.d()},
      {"gram_L", to_json(rs.gram_L())},
      {"rho", to_json(rs.rho())},
      {"theta", to_json(rs.theta())},
      {"phi", to_json(rs.phi())},
      {"weyl_group_order", rs.weyl_group_order()},
      {"simple_roots", weights_json(rs.simple_roots())},
      {"positive_roots", weights_json(rs.positive_roots())},
  };
}

Json alcove_json(const AlcoveContext& ctx) {
  return Json{
      {"type", ctx.rs().type().to_string()},
      {"l", ctx.l()},
      {"l_prime", ctx.l_prime()},
      {"d_divides", ctx.d_divides()},
      {"theta0", to_json(ctx.theta0())},
      {"upper_bound", ctx.upper_bound()},
      {"m_generators", weights_json(ctx.m_generators())},
      {"half_lattice_translations", weights_json(weight_translations_in_half_dual_lattice(ctx))},
      {"size", ctx.alcove().size()},
      {"alcove", weights_json(ctx.alcove())},
  };
}

Json character_json(const RootSystem& rs, const DominantCharacter& ch) {
  Json mults = Json::object();
  for (auto it = ch.mults.rbegin(); it != ch.mults.rend(); ++it) mults[it->first.to_string()] = it->second;
  return Json{{"highest", to_json(ch.highest)},
              {"dimension", bigint_json(weyl_dimension(rs, ch.highest))},
              {"dominant_multiplicities", std::move(mults)}};
}

Json decomposition_json(const Decomposition& d) {
  Json out = Json::object();
  for (const auto& [mu, n] : d) out[mu.to_string()] = n;
  return out;
}

Json fusion_json(const AlcoveContext& ctx, const FusionCoeffs& coeffs) {
  Json out = Json::object();
  for (const auto& [mu, n] : coeffs) out[mu.to_string()] = n;
  return Json{{"coefficients", std::move(out)}, {"alcove_order", weights_json(ctx.alcove())}};
}

Json qdim_json(const CycNum& q, std::int64_t residue) {
  return Json{{"exact", to_json(q)}, {"is_zero", q.is_zero()}, {"numeric", to_json_numeric(q, residue)}};
}

Json smatrix_json(const SMatrix& s, std::int64_t residue) {
  Json exact = Json::array(), numeric = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    Json er = Json::array(), nr = Json::array();
    for (std::size_t j = 0; j < s.size(); ++j) {
      er.push_back(to_json(s.at(i, j)));
      nr.push_back(to_json_numeric(s.at(i, j), residue));
    }
    exact.push_back(std::move(er));
    numeric.push_back(std::move(nr));
  }
  return Json{{"alcove_order", weights_json(s.alcove())},
              {"normalization", "unnormalized alternating sum"},
              {"exact", std::move(exact)},
              {"numeric", std::move(numeric)}};
}

Json report_json(const ModularityReport& r, std::int64_t residue) {
  Json tos = Json::array();
  for (const auto& t : r.transparent_objects) {
    Json o{{"weight", to_json(t.weight)},
           {"isometry_index", t.isometry_index ? Json(*t.isometry_index) : Json(nullptr)},
           {"qdim", t.qdim_sign},
           {"twist", to_json(t.twist)},
           {"twist_numeric", to_json_numeric(t.twist, residue)},
           {"twist_squared_is_one", t.twist_squared_is_one}};
    tos.push_back(std::move(o));
  }
  Json classes = Json::array();
  for (const auto& cls : r.proportional_classes) classes.push_back(weights_json(cls));
  return Json{{"verdict", to_string(r.verdict)},
              {"transparent_objects", std::move(tos)},
              {"isometry_group_order", r.isometry_group_order},
              {"proportional_classes", std::move(classes)},
              {"notes", r.notes}};
}

Json envelope(const std::string& command, Json inputs, Json result, std::optional<std::int64_t> timing_ms) {
  Json out{{"schema_version", kSchemaVersion},
           {"command", command},
           {"inputs", std::move(inputs)},
           {"result", std::move(result)}};
  if (timing_ms) out["timing_ms"] = *timing_ms;
  return out;
}

std::string to_tsv(const Json& j) {
  std::ostringstream os;
  flatten(j, "", os);
  return os.str();
}

}  // namespace qalcove
