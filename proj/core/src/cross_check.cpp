#include "ecgame/cross_check.hpp"

#include <algorithm>
#include <functional>

#include "ecgame/errors.hpp"
#include "ecgame/least_core.hpp"
#include "ecgame/properties.hpp"
#include "ecgame/shares.hpp"

namespace ecgame {

namespace {

class Runner {
public:
  void run(std::string name, const std::function<std::string()> &check) {
    CheckOutcome outcome{std::move(name), CheckStatus::passed, {}};
    try {
      outcome.detail = check();
      if (!outcome.detail.empty())
        outcome.status = CheckStatus::failed;
    } catch (const ConsistencyError &e) {
      outcome.status = CheckStatus::failed;
      outcome.detail = e.what();
    } catch (const ValidationError &e) {
      outcome.status = CheckStatus::skipped;
      outcome.detail = e.what();
    }
    report.checks.push_back(std::move(outcome));
  }

  VerifyReport report;
};

std::string expect(bool condition, const char *message) { return condition ? "" : message; }

} // namespace

std::string_view to_string(CheckStatus status) {
  switch (status) {
  case CheckStatus::passed:
    return "pass";
  case CheckStatus::failed:
    return "FAIL";
  case CheckStatus::skipped:
    return "skip";
  }
  return "?";
}

bool VerifyReport::ok() const { return count(CheckStatus::failed) == 0; }

int VerifyReport::count(CheckStatus status) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [&](const CheckOutcome &c) { return c.status == status; }));
}

VerifyReport verify_game(const Game &game, const SesgInstance *inst) {
  Runner r;

  r.run("witnesses re-verify", [&] {
    classify(game);
    return std::string();
  });
  r.run("totally balanced = balanced subgames", [&] {
    return expect(check_totally_balanced(game) == totally_balanced_by_subgames(game),
                  "monotonicity and the subgame sweep disagree");
  });
  r.run("monotone implies balanced", [&] {
    return expect(!check_monotonic(game).holds || check_balanced(game).holds,
                  "monotone game with empty core");
  });

  std::optional<FeeStructure> fees;
  if (inst)
    fees = fee_structure(*inst);

  std::optional<LeastCoreReport> lc;
  r.run("least core: LP vs closed forms", [&] {
    lc = analyze_least_core(game, fees ? &*fees : nullptr);
    return std::string();
  });
  r.run("singleton dual is feasible", [&] {
    return expect(verify_least_core_dual(game, singleton_dual(game)).feasible,
                  "uniform singleton multipliers rejected");
  });
  r.run("LP value invariant under row order", [&] {
    lp::LinearProgram program = least_core_program(game);
    lp::LinearProgram reversed(program.objective());
    for (auto it = program.rows().rbegin(); it != program.rows().rend(); ++it)
      reversed.add_row(it->coefficients, it->relation, it->rhs);
    return expect(lp::solve(reversed).objective_value == lp::solve(program).objective_value,
                  "reordered rows changed the optimum");
  });
  if (lc) {
    r.run("shares: programs vs closed forms", [&] {
      const PartitionMode mode =
          game.n_users() <= kPartitionLimit ? PartitionMode::exact : PartitionMode::singletons;
      analyze_shares(game, *lc, mode);
      return std::string();
    });
  }

  if (!inst)
    return std::move(r.report);

  r.run("SESG values match the table", [&] {
    bool ok = true;
    for_each_with_aggregator(game.n_users(), [&](const Coalition &s) {
      if (sesg_value(*inst, s) != game.value(s))
        ok = false;
    });
    return expect(ok, "table differs from the closed-form value");
  });
  r.run("fee-free minus fees", [&] {
    bool ok = true;
    for_each_with_aggregator(game.n_users(), [&](const Coalition &s) {
      if (s.user_count() < 2)
        return;
      Rational c(0);
      for (int i = 0; i < game.n_users(); ++i)
        if (s.contains(i))
          c += fees->fees[i];
      if (fees->fee_free.value(s) - game.value(s) != c)
        ok = false;
    });
    return expect(ok, "v0(S) - v(S) differs from c(S)");
  });
  r.run("SESG monotonicity closed form", [&] {
    return expect(sesg_monotone_char(*inst) == check_monotonic(game).holds,
                  "closed form and brute force disagree");
  });
  r.run("fee monotonicity characterization", [&] {
    return expect(mono_char_with_fees(fees->fee_free, fees->fees) == check_monotonic(game).holds,
                  "fee conditions and brute force disagree");
  });
  r.run("big-boss closed form", [&] {
    const std::optional<bool> verdict = sesg_bigboss_char(*inst);
    if (!verdict)
      throw ValidationError("big-boss closed form not applicable");
    const ClanResult clan = check_clan(game);
    const bool big_boss = clan.big_boss && *clan.big_boss == game.aggregator();
    return expect(*verdict == big_boss, "closed form and clan test disagree");
  });
  r.run("fee balancedness condition", [&] {
    return expect(fee_balance_condition(*fees) == check_balanced(game).holds,
                  "cost condition and balancedness disagree");
  });
  r.run("egalitarian allocations", [&] {
    const EgalitarianMembership a = egalitarian_membership(game);
    const EgalitarianMembership b = egalitarian_membership_direct(game);
    return expect(a.users_share_in_core == b.users_share_in_core &&
                      a.egalitarian_in_core == b.egalitarian_in_core,
                  "closed form and direct membership disagree");
  });
  r.run("zero fee-free value iff zero marginal", [&] {
    const Game &v0 = fees->fee_free;
    bool zero_marginal = false;
    for (int i = 0; i < v0.n_users(); ++i)
      if (marginal_contribution(v0, i).sign() == 0)
        zero_marginal = true;
    return expect((eps_hat(v0).value.sign() == 0) == zero_marginal,
                  "fee-free least-core value and marginal contributions disagree");
  });
  r.run("clan closed form", [&] {
    const std::optional<Rational> closed = clan_closed_form(*inst);
    if (!closed)
      throw ValidationError("clan closed form not applicable");
    return expect(*closed == eps_hat(game).value, "closed form differs from eps_hat");
  });
  return std::move(r.report);
}

} // namespace ecgame
