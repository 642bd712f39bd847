#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qalcove/characters.hpp"
#include "qalcove/errors.hpp"
#include "qalcove/fusion.hpp"
#include "qalcove/modular.hpp"
#include "qalcove/root_system.hpp"
#include "qalcove/serialize.hpp"
#include "qalcove/weyl.hpp"

using namespace qalcove;

namespace {

enum ExitCode { kOk = 0, kUsage = 2, kInvalidContext = 3, kSelfCheck = 4 };

struct Options {
  std::string format = "json";
  bool stable = false;
  std::int64_t residue = 1;
  int max_rank = 8;
  std::string method = "auto";
};

struct Args {
  std::string type;
  std::int64_t l = 0;
  std::string lam;
  std::string gam;
};

SMatrixMethod parse_method(const std::string& m) {
  if (m == "alternating") return SMatrixMethod::AlternatingSum;
  if (m == "character") return SMatrixMethod::Character;
  return SMatrixMethod::Auto;
}

Weight parse_dominant(const std::string& text, const RootSystem& rs) {
  Weight w = Weight::parse(text, rs.rank());
  if (!w.is_dominant()) throw ValidationError("weight '" + text + "' has a negative coordinate");
  return w;
}

RootSystemPtr root_system(const Options& opt, const Args& a) {
  return RootSystem::build(LieType::parse(a.type, opt.max_rank));
}

AlcoveContext context(const Options& opt, const Args& a) {
  if (a.l <= 0) throw ValidationError("l must be a positive integer");
  return AlcoveContext::make(root_system(opt, a), a.l);
}

using Handler = std::function<Json(const Options&, const Args&, Json&)>;

Json cmd_info(const Options& opt, const Args& a, Json& in) {
  in["type"] = a.type;
  return root_system_json(*root_system(opt, a));
}

Json cmd_alcove(const Options& opt, const Args& a, Json& in) {
  in["type"] = a.type;
  in["l"] = a.l;
  return alcove_json(context(opt, a));
}

Json cmd_mult(const Options& opt, const Args& a, Json& in) {
  in["type"] = a.type;
  in["lambda"] = a.lam;
  const auto rs = root_system(opt, a);
  Characters chars(rs);
  return character_json(*rs, *chars.dominant_character(parse_dominant(a.lam, *rs)));
}

Json cmd_tensor(const Options& opt, const Args& a, Json& in) {
  in["type"] = a.type;
  in["lambda"] = a.lam;
  in["gamma"] = a.gam;
  const auto rs = root_system(opt, a);
  Characters chars(rs);
  return decomposition_json(chars.classical_tensor(parse_dominant(a.lam, *rs), parse_dominant(a.gam, *rs)));
}

Json cmd_fuse(const Options& opt, const Args& a, Json& in) {
  in["type"] = a.type;
  in["l"] = a.l;
  in["lambda"] = a.lam;
  in["gamma"] = a.gam;
  const auto ctx = context(opt, a);
  FusionEngine engine(ctx);
  const auto& rs = ctx.rs();
  return fusion_json(ctx, engine.coeffs(parse_dominant(a.lam, rs), parse_dominant(a.gam, rs)));
}

Json cmd_qdim(const Options& opt, const Args& a, Json& in) {
  in["type"] = a.type;
  in["l"] = a.l;
  in["lambda"] = a.lam;
  in["residue"] = opt.residue;
  const auto ctx = context(opt, a);
  Modular m(ctx);
  return qdim_json(m.qdim(parse_dominant(a.lam, ctx.rs())), opt.residue);
}

Json cmd_smatrix(const Options& opt, const Args& a, Json& in) {
  in["type"] = a.type;
  in["l"] = a.l;
  in["method"] = opt.method;
  in["residue"] = opt.residue;
  Modular m(context(opt, a));
  return smatrix_json(m.s_matrix(parse_method(opt.method)), opt.residue);
}

Json cmd_classify(const Options& opt, const Args& a, Json& in) {
  in["type"] = a.type;
  in["l"] = a.l;
  in["method"] = opt.method;
  in["residue"] = opt.residue;
  Modular m(context(opt, a));
  return report_json(m.classify(parse_method(opt.method)), opt.residue);
}

int run(const std::string& name, const Handler& handler, const Options& opt, const Args& a) {
  try {
    Json inputs = Json::object();
    const auto start = std::chrono::steady_clock::now();
    Json result = handler(opt, a, inputs);
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    const Json env = envelope(name, std::move(inputs), std::move(result),
                              opt.stable ? std::nullopt : std::optional<std::int64_t>(ms));
    if (opt.format == "tsv") {
      std::cout << to_tsv(env);
    } else {
      std::cout << env.dump(2) << '\n';
    }
    return kOk;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidContext& e) {
    std::cerr << "invalid context: " << e.what() << "\nrequired: " << e.bound() << '\n';
    return kInvalidContext;
  } catch (const SelfCheckFailure& e) {
    std::cerr << "internal self-check failed: " << e.what() << '\n';
    return kSelfCheck;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fusion rules, quantum dimensions and modularity of quantum group alcoves"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_flag("--stable", opt.stable, "Omit timing so repeated runs are byte-identical");
  app.add_option("--residue", opt.residue, "Embed s as exp(2 pi i residue / lL)");
  app.add_option("--max-rank", opt.max_rank, "Largest accepted rank")->check(CLI::PositiveNumber);
  app.add_option("--method", opt.method, "S-matrix method")
      ->check(CLI::IsMember({"auto", "alternating", "character"}));

  Args a;
  std::map<CLI::App*, std::pair<std::string, Handler>> commands;
  auto add = [&](const std::string& name, const std::string& help, Handler h, bool level, int weights) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("type", a.type, "Lie type, e.g. A2")->required();
    if (level) sub->add_option("l", a.l, "Order of the root of unity")->required();
    if (weights >= 1) sub->add_option("lambda", a.lam, "Weight as comma-separated integers")->required();
    if (weights >= 2) sub->add_option("gamma", a.gam, "Weight as comma-separated integers")->required();
    commands[sub] = {name, std::move(h)};
  };
  add("info", "Root system constants, Cartan matrix and positive roots", cmd_info, false, 0);
  add("alcove", "Alcove data and its dominant weights", cmd_alcove, true, 0);
  add("mult", "Dominant weight multiplicities of an irreducible module", cmd_mult, false, 1);
  add("tensor", "Classical tensor product decomposition", cmd_tensor, false, 2);
  add("fuse", "Truncated tensor product coefficients", cmd_fuse, true, 2);
  add("qdim", "Exact quantum dimension", cmd_qdim, true, 1);
  add("smatrix", "Exact and numeric S-matrix", cmd_smatrix, true, 0);
  add("classify", "Modularity verdict and transparent objects", cmd_classify, true, 0);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kUsage;
  }

  for (const auto& [sub, cmd] : commands) {
    if (sub->parsed()) return run(cmd.first, cmd.second, opt, a);
  }
  return kUsage;
}
