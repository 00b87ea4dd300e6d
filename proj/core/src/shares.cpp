#include "ecgame/shares.hpp"

#include <functional>

#include "ecgame/errors.hpp"

namespace ecgame {

namespace {

ShareLp solve_share(const Game &game, const Rational &eps_star, bool maximize_users) {
  std::vector<Coalition> rows;
  const lp::LinearProgram program = share_program(game, eps_star, maximize_users, &rows);
  const lp::Solution sol = lp::solve(program);
  if (sol.status != lp::Status::optimal)
    throw ConsistencyError("share program reported " + std::string(lp::to_string(sol.status)));

  ShareLp out;
  out.check = lp::verify_certificate(program, sol);
  if (!out.check.ok())
    throw ConsistencyError("share program certificate failed verification");
  std::vector<Rational> payoffs = sol.primal;
  Rational users(0);
  for (const Rational &x : payoffs)
    users += x;
  payoffs.push_back(game.grand_value() - users);
  out.users_total = users;
  out.certificate = Allocation(std::move(payoffs));
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (sol.dual[r].sign() != 0)
      out.dual.emplace(rows[r], sol.dual[r]);
  if (!eps_core_contains(game, out.certificate, eps_star).contains)
    throw ConsistencyError("share certificate is not in the least core");
  return out;
}

Rational partition_value(const Game &game, const Rational &eps_star, const std::vector<PlayerMask> &blocks) {
  const PlayerMask all = (PlayerMask{1} << game.n_users()) - 1;
  const Rational gap = game.grand_value() - eps_star;
  Rational total(0);
  for (PlayerMask b : blocks)
    total += gap - game.value_with_aggregator(all & ~b);
  return total;
}

std::vector<Coalition> to_coalitions(const Game &game, const std::vector<PlayerMask> &blocks) {
  std::vector<Coalition> out;
  for (PlayerMask b : blocks)
    out.emplace_back(b, game.n_players());
  return out;
}

} // namespace

lp::LinearProgram share_program(const Game &game, const Rational &eps_star, bool maximize_users,
                                std::vector<Coalition> *rows) {
  if (game.n_users() < 1)
    throw ValidationError("share program needs at least one user");
  require_players_at_most(game, max_players(), "share program");
  const int n = game.n_users();
  lp::LinearProgram program(std::vector<Rational>(n, Rational(maximize_users ? 1 : -1)));
  if (rows)
    rows->clear();

  for_each_without_aggregator(n, [&](const Coalition &s) {
    std::vector<Rational> row(n, Rational(0));
    for (int i : s.members())
      row[i] = Rational(-1);
    program.add_less_equal(std::move(row), -eps_star);
    if (rows)
      rows->push_back(s);
  });
  const Rational v_grand = game.grand_value();
  for_each_with_aggregator(n, [&](const Coalition &s) {
    if (s.is_grand())
      return;
    std::vector<Rational> row(n, Rational(0));
    for (int i = 0; i < n; ++i)
      if (!s.contains(i))
        row[i] = Rational(1);
    program.add_less_equal(std::move(row), v_grand - game.value(s) - eps_star);
    if (rows)
      rows->push_back(s);
  });
  return program;
}

ShareLp max_users_share(const Game &game, const Rational &eps_star) {
  ShareLp out = solve_share(game, eps_star, true);
  const ShareDualCheck dual = verify_share_dual(game, eps_star, out.dual);
  if (!dual.feasible || dual.objective != out.users_total)
    throw ConsistencyError("share dual multipliers failed verification");
  return out;
}

ShareLp min_users_share(const Game &game, const Rational &eps_star) {
  return solve_share(game, eps_star, false);
}

ShareDualCheck verify_share_dual(const Game &game, const Rational &eps_star, const DualWeights &weights) {
  const int n = game.n_users();
  ShareDualCheck out;
  std::vector<Rational> balance(n, Rational(0));
  bool ok = true;
  for (const auto &[s, w] : weights) {
    if (w.sign() < 0 || !s.is_proper() || s.n_players() != game.n_players())
      ok = false;
    if (s.has_aggregator()) {
      out.objective += w * (game.grand_value() - game.value(s) - eps_star);
      for (int i = 0; i < n; ++i)
        if (!s.contains(i))
          balance[i] += w;
    } else {
      out.objective -= w * eps_star;
      for (int i : s.members())
        balance[i] -= w;
    }
  }
  for (const Rational &b : balance)
    if (b != Rational(1))
      ok = false;
  out.feasible = ok;
  return out;
}

std::optional<Coalition> s_min(const Game &game, const LeastCoreReport &report) {
  if (!report.formula_exact)
    return std::nullopt;
  Coalition out = game.grand();
  for (const Coalition &s : report.hat.argmin)
    out = out & s;
  return out;
}

std::optional<EqualityVerdict> equality_characterization(const Game &game, const LeastCoreReport &report) {
  if (!report.formula_exact)
    return std::nullopt;
  EqualityVerdict out;
  const Coalition aggregator = game.aggregator_only();
  if (report.balanced) {
    out.intersection = *s_min(game, report);
    out.equal = out.intersection == aggregator;
    out.explanation = out.equal ? "S_min is {a}" : "S_min strictly contains a";
    return out;
  }
  const int k = *report.exactness->k;
  out.k = k;
  Coalition meet = game.grand();
  const Rational v_grand = game.grand_value();
  for_each_with_aggregator(game.n_users(), [&](const Coalition &s) {
    if (!s.is_grand() && s.contains(k) && v_grand - game.value(s) == report.eps_star)
      meet = meet & s;
  });
  out.intersection = meet;
  out.equal = meet == aggregator.with(k);
  out.explanation = out.equal ? "tight coalitions through k meet in {a,k}"
                              : "tight coalitions through k meet in a larger set";
  return out;
}

PartitionBound partition_lower_bound(const Game &game, const Rational &eps_star, PartitionMode mode) {
  const int n = game.n_users();
  if (n < 1)
    throw ValidationError("partition bound needs at least one user");
  PartitionBound out;
  if (mode == PartitionMode::singletons) {
    Rational marginal(0);
    std::vector<PlayerMask> blocks;
    for (int i = 0; i < n; ++i) {
      marginal += marginal_contribution(game, i);
      blocks.push_back(PlayerMask{1} << i);
    }
    out.value = game.grand_value() + eps_star * Rational(n) - marginal;
    out.blocks = to_coalitions(game, blocks);
    return out;
  }
  if (n > kPartitionLimit)
    throw ValidationError("exact partition bound is limited to " + std::to_string(kPartitionLimit) +
                          " users");

  std::optional<Rational> best;
  std::vector<PlayerMask> best_blocks;
  std::vector<PlayerMask> blocks;
  // Restricted growth: user i joins an existing block or opens the next one.
  std::function<void(int)> place = [&](int i) {
    if (i == n) {
      const Rational value = partition_value(game, eps_star, blocks);
      if (!best || value < *best) {
        best = value;
        best_blocks = blocks;
      }
      return;
    }
    const PlayerMask bit = PlayerMask{1} << i;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b] |= bit;
      place(i + 1);
      blocks[b] &= ~bit;
    }
    blocks.push_back(bit);
    place(i + 1);
    blocks.pop_back();
  };
  place(0);
  out.value = game.grand_value() - *best;
  out.blocks = to_coalitions(game, best_blocks);
  return out;
}

DualWeights partition_dual(const Game &, const std::vector<Coalition> &blocks) {
  DualWeights out;
  for (const Coalition &b : blocks)
    out.emplace(b.complement(), Rational(1));
  return out;
}

SharesReport analyze_shares(const Game &game, const LeastCoreReport &lc, PartitionMode mode) {
  SharesReport report;
  const Rational &eps = lc.eps_star;
  const Rational v_grand = game.grand_value();

  const ShareLp upper = max_users_share(game, eps);
  const ShareLp lower = min_users_share(game, eps);
  report.max_users = upper.users_total;
  report.min_share = v_grand - upper.users_total;
  report.max_share = v_grand - lower.users_total;
  report.min_share_cert = upper.certificate;
  report.max_share_cert = lower.certificate;
  report.min_share_dual = upper.dual;
  report.lp_equal = report.min_share == report.max_share;
  if (report.min_share > report.max_share)
    throw ConsistencyError("minimum aggregator share exceeds the maximum");

  if (lc.balanced)
    report.max_share_closed_form = v_grand - eps * Rational(game.n_users());
  else if (lc.formula_exact)
    report.max_share_closed_form = v_grand - eps;
  if (report.max_share_closed_form && *report.max_share_closed_form != report.max_share)
    throw ConsistencyError("closed-form maximum aggregator share disagrees with the program");

  report.s_min = s_min(game, lc);
  if (report.s_min) {
    for (const Allocation *x : {&report.min_share_cert, &report.max_share_cert})
      for (int i = 0; i < game.n_users(); ++i)
        if (!report.s_min->contains(i) && (*x)[i] != eps)
          throw ConsistencyError("least-core allocation not pinned outside S_min");
  }

  report.equality = equality_characterization(game, lc);
  if (report.equality && report.equality->equal != report.lp_equal)
    throw ConsistencyError("equality characterization disagrees with the share programs");
  if (report.equality && !lc.balanced && report.equality->equal &&
      report.min_share_cert != *lc.exactness->x_check)
    throw ConsistencyError("maximum users share is not attained at the leave-one-out allocation");

  report.singleton_bound = partition_lower_bound(game, eps, PartitionMode::singletons);
  if (report.singleton_bound.value > report.min_share)
    throw ConsistencyError("singleton partition bound exceeds the minimum share");
  if (mode == PartitionMode::exact) {
    report.partition_bound = partition_lower_bound(game, eps, PartitionMode::exact);
    const PartitionBound &pb = *report.partition_bound;
    if (pb.value > report.min_share || report.singleton_bound.value > pb.value)
      throw ConsistencyError("partition bounds out of order");
    report.partition_tight = pb.value == report.min_share;
    if (*report.partition_tight) {
      const ShareDualCheck check = verify_share_dual(game, eps, partition_dual(game, pb.blocks));
      report.partition_dual_ok = check.feasible && check.objective == report.max_users;
      if (!*report.partition_dual_ok)
        throw ConsistencyError("tight partition does not yield an optimal dual");
    }
  }
  return report;
}

} // namespace ecgame
