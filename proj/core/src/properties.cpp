#include "ecgame/properties.hpp"

#include <string>

#include "ecgame/errors.hpp"
#include "ecgame/least_core.hpp"
#include "ecgame/lp.hpp"

namespace ecgame {

namespace {

bool in_core(const Game &game, const Allocation &x) {
  return eps_core_contains(game, x, Rational(0)).contains;
}

} // namespace

bool violates_superadditivity(const Game &game, const Coalition &s, const Coalition &t) {
  return s.disjoint(t) && game.value(s | t) < game.value(s) + game.value(t);
}

bool violates_supermodularity(const Game &game, const Coalition &s, const Coalition &t) {
  return game.value(s | t) + game.value(s & t) < game.value(s) + game.value(t);
}

bool violates_monotonicity(const Game &game, const Coalition &s, int player) {
  return !s.contains(player) && game.value(s.with(player)) < game.value(s);
}

SuperadditivityResult check_superadditive(const Game &game) {
  require_players_at_most(game, kSuperadditivityLimit, "superadditivity check");
  const int n = game.n_players();
  const PlayerMask full = (PlayerMask{1} << n) - 1;
  for (PlayerMask s = 1; s <= full; ++s) {
    const PlayerMask rest = full & ~s;
    // Submasks t of rest with t > s, so each unordered pair is visited once.
    for (PlayerMask t = rest; t != 0; t = (t - 1) & rest) {
      if (t < s)
        continue;
      Coalition cs(s, n), ct(t, n);
      if (violates_superadditivity(game, cs, ct))
        return {false, PairWitness{cs, ct}};
    }
  }
  return {};
}

MonotonicityResult check_monotonic(const Game &game) {
  require_players_at_most(game, kSuperadditivityLimit + 6, "monotonicity check");
  const int n = game.n_players();
  const PlayerMask full = (PlayerMask{1} << n) - 1;
  for (PlayerMask s = 0; s < full; ++s) {
    Coalition cs(s, n);
    for (int i = 0; i < n; ++i)
      if (violates_monotonicity(game, cs, i))
        return {false, MonotonicityWitness{cs, i}};
  }
  return {};
}

ConvexityResult check_convex(const Game &game) {
  require_players_at_most(game, kConvexityLimit, "convexity check");
  const int n = game.n_players();
  const PlayerMask count = PlayerMask{1} << n;
  for (PlayerMask s = 0; s < count; ++s) {
    for (PlayerMask t = s + 1; t < count; ++t) {
      if ((s & t) == s || (s & t) == t)
        continue;
      Coalition cs(s, n), ct(t, n);
      if (violates_supermodularity(game, cs, ct))
        return {false, PairWitness{cs, ct}};
    }
  }
  return {};
}

Coalition veto_set(const Game &game) {
  Coalition t = game.grand();
  for_each_with_aggregator(game.n_users(), [&](const Coalition &s) {
    if (game.value(s).sign() != 0)
      t = t & s;
  });
  return t;
}

ClanResult check_clan(const Game &game) {
  ClanResult result;
  if (!check_monotonic(game).holds)
    return result;
  result.applicable = true;

  Coalition t = veto_set(game);
  if (t.is_grand())
    t = game.aggregator_only();

  const Rational v_grand = game.grand_value();
  std::vector<Rational> marginal(game.n_players());
  for (int i = 0; i < game.n_players(); ++i)
    marginal[i] = marginal_contribution(game, i);

  const PlayerMask free = game.grand().bits() & ~t.bits();
  for (PlayerMask extra = free;; extra = (extra - 1) & free) {
    Coalition s(t.bits() | extra, game.n_players());
    Rational outside(0);
    for (int i : s.complement().members())
      outside += marginal[i];
    if (v_grand - game.value(s) < outside)
      return result;
    if (extra == 0)
      break;
  }
  result.clan = t;
  if (t.size() == 1)
    result.big_boss = t.members().front();
  return result;
}

bool sesg_monotone_char(const SesgInstance &inst) {
  const int producers = inst.producer_count();
  const int consumers = inst.consumer_count();
  if (inst.n_users() <= 1)
    return true;

  const Rational k = inst.exchange_coefficient();
  auto fees_zero = [&](PlayerMask mask) { return inst.fee_sum(mask).sign() == 0; };
  auto min_capacity = [&](PlayerMask mask) {
    std::optional<Rational> best;
    for (int i = 0; i < inst.n_users(); ++i)
      if ((mask >> i) & 1U)
        best = best ? min(*best, inst.user(i).capacity) : inst.user(i).capacity;
    return *best;
  };
  auto single_index = [](PlayerMask mask) { return std::countr_zero(mask); };

  if (producers == 0 || consumers == 0 || (producers >= 2 && consumers >= 2))
    return fees_zero(inst.producer_mask() | inst.consumer_mask());

  if (producers == 1 && consumers == 1) {
    const Rational p = inst.capacity_sum(inst.producer_mask());
    const Rational q = inst.capacity_sum(inst.consumer_mask());
    return inst.fee_sum(inst.producer_mask() | inst.consumer_mask()) <= k * min(p, q);
  }

  // Exactly one user on one side, at least two on the other.
  const PlayerMask lone = producers == 1 ? inst.producer_mask() : inst.consumer_mask();
  const PlayerMask many = producers == 1 ? inst.consumer_mask() : inst.producer_mask();
  const SesgUser &u = inst.user(single_index(lone));
  return fees_zero(many) && u.fee <= k * min(u.capacity, min_capacity(many));
}

std::optional<bool> sesg_bigboss_char(const SesgInstance &inst) {
  if (inst.producer_count() < 2 || inst.consumer_count() < 2 || !sesg_monotone_char(inst))
    return std::nullopt;
  const Rational supply = inst.capacity_sum(inst.producer_mask());
  const Rational demand = inst.capacity_sum(inst.consumer_mask());
  if (supply == demand)
    return std::nullopt;
  // The scarce side must be covered by the abundant side minus any one member.
  const PlayerMask abundant = demand < supply ? inst.producer_mask() : inst.consumer_mask();
  const Rational scarce_total = min(supply, demand);
  const Rational abundant_total = max(supply, demand);
  for (int i = 0; i < inst.n_users(); ++i)
    if (((abundant >> i) & 1U) && scarce_total > abundant_total - inst.user(i).capacity)
      return false;
  return true;
}

bool mono_char_with_fees(const Game &game0, std::span<const Rational> fees) {
  require_players_at_most(game0, kSuperadditivityLimit + 6, "fee monotonicity characterization");
  const int n = game0.n_users();
  if (static_cast<int>(fees.size()) != n)
    throw ValidationError("fee vector length differs from the number of users");
  const PlayerMask all_users = (PlayerMask{1} << n) - 1;

  auto v0 = [&](PlayerMask users) -> const Rational & { return game0.value_with_aggregator(users); };
  auto fee_of = [&](PlayerMask users) {
    Rational total(0);
    for (int i = 0; i < n; ++i)
      if ((users >> i) & 1U)
        total += fees[i];
    return total;
  };

  if (v0(0).sign() < 0)
    return false;

  for (int i = 0; i < n; ++i) {
    const PlayerMask bit = PlayerMask{1} << i;
    for (PlayerMask s = 0; s <= all_users; ++s) {
      if ((s & bit) || s == all_users)
        continue;
      const Rational gain = v0(s | bit) - v0(s);
      const int users = std::popcount(s);
      // Fee charged on the step S -> S ∪ {i}: nothing while S ∪ {i} has a
      // single user, both fees when it reaches two, c_i afterwards.
      Rational charged(0);
      if (users == 1)
        charged = fees[i] + fee_of(s);
      else if (users >= 2)
        charged = fees[i];
      if (charged > gain)
        return false;
    }
  }

  // Joining of the aggregator to an aggregator-free coalition.
  for (PlayerMask s = 1; s <= all_users; ++s) {
    const Rational charged = std::popcount(s) >= 2 ? fee_of(s) : Rational(0);
    if (charged > v0(s))
      return false;
  }
  return true;
}

BalanceResult check_balanced(const Game &game) {
  BalanceResult result;
  const Rational v_grand = game.grand_value();
  for_each_with_aggregator(game.n_users(), [&](const Coalition &s) {
    if (!result.witness && !s.is_grand() && game.value(s) > v_grand) {
      result.holds = false;
      result.witness = s;
    }
  });
  const bool corner = in_core(game, Allocation::aggregator_takes_all(game.n_users(), v_grand));
  if (corner != result.holds)
    throw ConsistencyError("balancedness test and aggregator-takes-all allocation disagree");
  return result;
}

bool check_totally_balanced(const Game &game) { return check_monotonic(game).holds; }

bool totally_balanced_by_subgames(const Game &game) {
  require_players_at_most(game, kSubgameSweepLimit, "subgame balancedness sweep");
  bool all = true;
  for_each_with_aggregator(game.n_users(), [&](const Coalition &t) {
    if (!all || t.size() < 2)
      return;
    Game sub = game.subgame(t);
    const int n = sub.n_players();
    // min x(T) s.t. x(S) >= v(S) for every proper S; balanced iff min <= v(T).
    lp::LinearProgram program(std::vector<Rational>(n, Rational(-1)));
    for_each_coalition(n, [&](const Coalition &s) {
      if (!s.is_proper())
        return;
      std::vector<Rational> row(n, Rational(0));
      for (int i : s.members())
        row[i] = Rational(-1);
      program.add_less_equal(std::move(row), -sub.value(s));
    });
    lp::Solution sol = lp::solve(program);
    if (sol.status != lp::Status::optimal || -sol.objective_value > sub.grand_value())
      all = false;
  });
  return all;
}

bool fee_balance_condition(const FeeStructure &fees) {
  const Game &v0 = fees.fee_free;
  const int n = v0.n_users();
  bool holds = true;
  for_each_with_aggregator(n, [&](const Coalition &s) {
    if (s.is_grand())
      return;
    Rational outside(0);
    for (int i = 0; i < n; ++i)
      if (!s.contains(i))
        outside += fees.fees[i];
    if (outside > v0.grand_value() - v0.value(s))
      holds = false;
  });
  return holds;
}

EgalitarianMembership egalitarian_membership(const Game &game) {
  EgalitarianMembership out;
  const int n_users = game.n_users();
  const Rational v_grand = game.grand_value();
  if (n_users == 0 || v_grand.sign() < 0)
    return out;
  out.users_share_in_core = true;
  out.egalitarian_in_core = true;
  for_each_with_aggregator(n_users, [&](const Coalition &s) {
    if (s.is_grand() || s.user_count() < 2)
      return;
    const Rational &v = game.value(s);
    if (v * Rational(n_users) > v_grand * Rational(s.user_count()))
      out.users_share_in_core = false;
    if (v * Rational(game.n_players()) > v_grand * Rational(s.size()))
      out.egalitarian_in_core = false;
  });
  if (out.users_share_in_core && !out.egalitarian_in_core)
    throw ConsistencyError("users-only allocation in the core but egalitarian allocation is not");
  return out;
}

EgalitarianMembership egalitarian_membership_direct(const Game &game) {
  EgalitarianMembership out;
  const int n_users = game.n_users();
  const Rational v_grand = game.grand_value();
  if (n_users > 0) {
    std::vector<Rational> ua(n_users + 1, v_grand / Rational(n_users));
    ua.back() = Rational(0);
    out.users_share_in_core = in_core(game, Allocation(std::move(ua)));
  }
  std::vector<Rational> eg(n_users + 1, v_grand / Rational(game.n_players()));
  out.egalitarian_in_core = in_core(game, Allocation(std::move(eg)));
  return out;
}

PropertyReport classify(const Game &game) {
  PropertyReport report;
  report.superadditive = check_superadditive(game);
  report.monotonic = check_monotonic(game);
  if (game.n_players() <= kConvexityLimit)
    report.convex = check_convex(game);
  report.veto_set = veto_set(game);
  report.clan = check_clan(game);
  report.balanced = check_balanced(game);
  report.totally_balanced = report.monotonic.holds;
  report.egalitarian = egalitarian_membership(game);

  if (report.superadditive.witness &&
      !violates_superadditivity(game, report.superadditive.witness->s,
                                report.superadditive.witness->t))
    throw ConsistencyError("superadditivity witness does not re-verify");
  if (report.monotonic.witness &&
      !violates_monotonicity(game, report.monotonic.witness->s, report.monotonic.witness->player))
    throw ConsistencyError("monotonicity witness does not re-verify");
  if (report.convex && report.convex->witness &&
      !violates_supermodularity(game, report.convex->witness->s, report.convex->witness->t))
    throw ConsistencyError("convexity witness does not re-verify");
  return report;
}

} // namespace ecgame
