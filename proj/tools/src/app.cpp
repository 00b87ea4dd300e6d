#include "ecgame_cli/app.hpp"

#include <fstream>

#include <CLI11.hpp>

#include "ecgame/errors.hpp"
#include "ecgame/random_instance.hpp"
#include "ecgame_cli/instance_io.hpp"
#include "ecgame_cli/report.hpp"

namespace ecgame::cli {

namespace {

struct Options {
  std::string file;
  bool json = false;
  std::string method = "both";
  std::string partitions = "auto";
  GeneratorOptions gen;
  std::string output;
};

void emit(std::ostream &out, const Json &report, bool json) {
  if (json)
    out << report.dump(2) << "\n";
  else
    print_human(out, report);
}

std::optional<FeeStructure> fees_of(const Instance &inst) {
  if (!inst.sesg)
    return std::nullopt;
  return fee_structure(*inst.sesg);
}

/// Formula-side report without solving any program.
LeastCoreReport formula_report(const Game &game, const FeeStructure *fees) {
  LeastCoreReport r;
  r.hat = eps_hat(game);
  r.s_hat = largest_minimizer(r.hat);
  r.balanced = check_balanced(game).holds;
  r.eps_bar = eps_bar(game);
  r.hat_cert = dual_certificate_hat(game, r.s_hat);
  r.hat_objective = verify_least_core_dual(game, r.hat_cert).objective;
  if (r.balanced) {
    r.fee_bounds = bounds_with_fees(game, fees);
    if (fees)
      r.no_fee_bounds = bounds_no_fees(fees->fee_free);
  } else {
    r.unbalanced = bounds_unbalanced(game);
    r.exactness = unbalanced_exactness(game, r.hat);
  }
  return r;
}

LeastCoreReport lp_report(const Game &game) {
  const LeastCoreLp sol = least_core_lp(game);
  LeastCoreReport r;
  r.eps_star = sol.eps_star;
  r.primal_cert = sol.primal;
  r.dual_cert = sol.dual;
  r.pivots = sol.pivots;
  r.balanced = check_balanced(game).holds;
  return r;
}

Method parse_method(const std::string &name) {
  if (name == "formula")
    return Method::formula;
  if (name == "lp")
    return Method::lp;
  return Method::both;
}

PartitionMode partition_mode(const std::string &name, const Game &game) {
  if (name == "exact")
    return PartitionMode::exact;
  if (name == "singletons")
    return PartitionMode::singletons;
  return game.n_users() <= kPartitionLimit ? PartitionMode::exact : PartitionMode::singletons;
}

int dispatch(const std::string &command, const Options &o, std::ostream &out) {
  if (command == "gen") {
    const std::string text = render_instance(random_instance(o.gen));
    if (o.output.empty()) {
      out << text;
    } else {
      std::ofstream file(o.output);
      if (!file)
        throw ValidationError(o.output + ": cannot write file");
      file << text;
    }
    return kExitOk;
  }

  const Instance inst = parse_instance_file(o.file);
  const std::optional<FeeStructure> fees = fees_of(inst);
  const FeeStructure *fee_ptr = fees ? &*fees : nullptr;
  const Game &game = inst.game;

  if (command == "props") {
    emit(out, properties_json(game, classify(game), inst.labels), o.json);
    return kExitOk;
  }
  if (command == "leastcore") {
    const Method method = parse_method(o.method);
    LeastCoreReport r = method == Method::formula ? formula_report(game, fee_ptr)
                        : method == Method::lp    ? lp_report(game)
                                                  : analyze_least_core(game, fee_ptr);
    emit(out, least_core_json(r, method, inst.labels), o.json);
    return kExitOk;
  }
  if (command == "shares") {
    const LeastCoreReport lc = analyze_least_core(game, fee_ptr);
    emit(out, shares_json(analyze_shares(game, lc, partition_mode(o.partitions, game)), inst.labels),
         o.json);
    return kExitOk;
  }
  if (command == "analyze") {
    const LeastCoreReport lc = analyze_least_core(game, fee_ptr);
    Json j;
    j["properties"] = properties_json(game, classify(game), inst.labels);
    j["least_core"] = least_core_json(lc, Method::both, inst.labels);
    j["shares"] =
        shares_json(analyze_shares(game, lc, partition_mode(o.partitions, game)), inst.labels);
    emit(out, j, o.json);
    return kExitOk;
  }
  // verify
  const VerifyReport report = verify_game(game, inst.sesg ? &*inst.sesg : nullptr);
  emit(out, verify_json(report), o.json);
  return report.ok() ? kExitOk : kExitConsistency;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact analysis of energy sharing games", "ecgame"};
  app.require_subcommand(1);
  Options o;

  auto add_file = [&](CLI::App *sub) {
    sub->add_option("file", o.file, "Instance file (JSON or YAML)")->required();
    sub->add_flag("--json", o.json, "Machine-readable output");
  };
  add_file(app.add_subcommand("props", "Structural properties"));
  CLI::App *lc = app.add_subcommand("leastcore", "Least-core value, bounds and certificates");
  add_file(lc);
  lc->add_option("--method", o.method, "formula, lp or both")
      ->check(CLI::IsMember({"formula", "lp", "both"}));
  CLI::App *sh = app.add_subcommand("shares", "Aggregator shares over the least core");
  add_file(sh);
  sh->add_option("--partitions", o.partitions, "exact, singletons or auto")
      ->check(CLI::IsMember({"exact", "singletons", "auto"}));
  CLI::App *an = app.add_subcommand("analyze", "Properties, least core and shares");
  add_file(an);
  an->add_option("--partitions", o.partitions, "exact, singletons or auto")
      ->check(CLI::IsMember({"exact", "singletons", "auto"}));
  add_file(app.add_subcommand("verify", "Cross-check closed forms against brute force"));

  CLI::App *gen = app.add_subcommand("gen", "Random SESG instance");
  gen->add_option("--producers", o.gen.producers)->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--consumers", o.gen.consumers)->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--max-cap", o.gen.max_capacity, "Capacities drawn from [1, C]")
      ->check(CLI::PositiveNumber);
  gen->add_option("--max-fee", o.gen.max_fee, "Fees drawn from [0, F]")->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", o.gen.seed);
  gen->add_option("-o,--output", o.output, "Write to a file instead of standard output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitValidation;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), o, out);
  } catch (const ValidationError &e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const overflow_error &e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ConsistencyError &e) {
    err << "cross-check failure: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << "\n";
    return kExitConsistency;
  }
}

} // namespace ecgame::cli
