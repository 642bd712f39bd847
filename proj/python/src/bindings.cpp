#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <variant>
#include <vector>

#include "qalcove/characters.hpp"
#include "qalcove/errors.hpp"
#include "qalcove/fusion.hpp"
#include "qalcove/modular.hpp"
#include "qalcove/serialize.hpp"
#include "qalcove/weyl.hpp"

namespace py = pybind11;
using namespace qalcove;

namespace {

using WeightArg = std::variant<std::string, std::vector<std::int64_t>>;

RootSystemPtr root_system(const std::string& type, int max_rank) {
  return RootSystem::build(LieType::parse(type, max_rank));
}

Weight to_weight(const WeightArg& w, const RootSystem& rs) {
  if (const auto* s = std::get_if<std::string>(&w)) return Weight::parse(*s, rs.rank());
  const auto& v = std::get<std::vector<std::int64_t>>(w);
  if (v.size() != rs.rank()) throw ValidationError("weight has the wrong number of coordinates");
  return Weight(v);
}

SMatrixMethod method_of(const std::string& m) {
  if (m == "auto") return SMatrixMethod::Auto;
  if (m == "alternating") return SMatrixMethod::AlternatingSum;
  if (m == "character") return SMatrixMethod::Character;
  throw ValidationError("unknown S-matrix method '" + m + "'");
}

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_qalcove, m) {
  m.doc() = "Fusion rules, quantum dimensions and modularity at roots of unity";

  static py::exception<ValidationError> validation_error(m, "ValidationError", PyExc_ValueError);
  static py::exception<InvalidContext> invalid_context(m, "InvalidContext", PyExc_ValueError);
  static py::exception<SelfCheckFailure> self_check_failure(m, "SelfCheckFailure", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ValidationError& e) {
      py::set_error(validation_error, e.what());
    } catch (const InvalidContext& e) {
      py::set_error(invalid_context, (std::string(e.what()) + "; required: " + e.bound()).c_str());
    } catch (const SelfCheckFailure& e) {
      py::set_error(self_check_failure, e.what());
    }
  });

  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  m.def(
      "info", [](const std::string& type, int max_rank) { return to_python(root_system_json(*root_system(type, max_rank))); },
      py::arg("type"), py::arg("max_rank") = 8, "Constants, Cartan matrix and positive roots.");

  m.def(
      "alcove",
      [](const std::string& type, std::int64_t l, int max_rank) {
        return to_python(alcove_json(AlcoveContext::make(root_system(type, max_rank), l)));
      },
      py::arg("type"), py::arg("l"), py::arg("max_rank") = 8, "Alcove data and its dominant weights.");

  m.def(
      "mult",
      [](const std::string& type, const WeightArg& lam, int max_rank) {
        const auto rs = root_system(type, max_rank);
        Characters chars(rs);
        return to_python(character_json(*rs, *chars.dominant_character(to_weight(lam, *rs))));
      },
      py::arg("type"), py::arg("lam"), py::arg("max_rank") = 8, "Dominant weight multiplicities.");

  m.def(
      "tensor",
      [](const std::string& type, const WeightArg& lam, const WeightArg& gam, int max_rank) {
        const auto rs = root_system(type, max_rank);
        Characters chars(rs);
        return to_python(decomposition_json(chars.classical_tensor(to_weight(lam, *rs), to_weight(gam, *rs))));
      },
      py::arg("type"), py::arg("lam"), py::arg("gam"), py::arg("max_rank") = 8,
      "Classical tensor product decomposition.");

  m.def(
      "fuse",
      [](const std::string& type, std::int64_t l, const WeightArg& lam, const WeightArg& gam, int max_rank) {
        const auto ctx = AlcoveContext::make(root_system(type, max_rank), l);
        FusionEngine engine(ctx);
        return to_python(fusion_json(ctx, engine.coeffs(to_weight(lam, ctx.rs()), to_weight(gam, ctx.rs()))));
      },
      py::arg("type"), py::arg("l"), py::arg("lam"), py::arg("gam"), py::arg("max_rank") = 8,
      "Truncated tensor product coefficients.");

  m.def(
      "fusion_table",
      [](const std::string& type, std::int64_t l, int max_rank) {
        const auto ctx = AlcoveContext::make(root_system(type, max_rank), l);
        const FusionTable t = FusionEngine(ctx).full_table();
        const std::size_t n = t.size();
        std::vector<std::string> alcove;
        for (const auto& w : t.alcove()) alcove.push_back(w.to_string());
        std::vector<std::vector<std::vector<std::int64_t>>> data(n, std::vector<std::vector<std::int64_t>>(n));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) data[i][j].push_back(t.at(i, j, k));
        return py::make_tuple(alcove, data);
      },
      py::arg("type"), py::arg("l"), py::arg("max_rank") = 8,
      "(alcove, N) with N[i][j][k] the coefficient of alcove[k] in alcove[i] x alcove[j].");

  m.def(
      "qdim",
      [](const std::string& type, std::int64_t l, const WeightArg& lam, std::int64_t residue, int max_rank) {
        const auto ctx = AlcoveContext::make(root_system(type, max_rank), l);
        Modular mod(ctx);
        return to_python(qdim_json(mod.qdim(to_weight(lam, ctx.rs())), residue));
      },
      py::arg("type"), py::arg("l"), py::arg("lam"), py::arg("residue") = 1, py::arg("max_rank") = 8,
      "Exact quantum dimension and its numeric value.");

  m.def(
      "smatrix",
      [](const std::string& type, std::int64_t l, std::int64_t residue, const std::string& method, int max_rank) {
        Modular mod(AlcoveContext::make(root_system(type, max_rank), l));
        return to_python(smatrix_json(mod.s_matrix(method_of(method)), residue));
      },
      py::arg("type"), py::arg("l"), py::arg("residue") = 1, py::arg("method") = "auto", py::arg("max_rank") = 8,
      "Exact and numeric S-matrix.");

  m.def(
      "classify",
      [](const std::string& type, std::int64_t l, std::int64_t residue, const std::string& method, int max_rank) {
        Modular mod(AlcoveContext::make(root_system(type, max_rank), l));
        return to_python(report_json(mod.classify(method_of(method)), residue));
      },
      py::arg("type"), py::arg("l"), py::arg("residue") = 1, py::arg("method") = "auto", py::arg("max_rank") = 8,
      "Modularity verdict, transparent objects and proportional S-rows.");
}
