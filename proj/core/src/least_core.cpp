#include "ecgame/least_core.hpp"

#include <string>

#include "ecgame/errors.hpp"
#include "ecgame/properties.hpp"

namespace ecgame {

namespace {

void require_users(const Game &game, const char *what) {
  if (game.n_users() < 1)
    throw ValidationError(std::string(what) + " needs at least one user");
}

/// max v(N \ {i}) over users i.
Rational max_leave_one_out(const Game &game) {
  const PlayerMask all = (PlayerMask{1} << game.n_users()) - 1;
  std::optional<Rational> best;
  for (int i = 0; i < game.n_users(); ++i) {
    const Rational &v = game.value_with_aggregator(all & ~(PlayerMask{1} << i));
    best = best ? max(*best, v) : v;
  }
  return *best;
}

/// max v(S) over proper S ∋ a.
Rational max_proper_with_aggregator(const Game &game) {
  std::optional<Rational> best;
  for_each_with_aggregator(game.n_users(), [&](const Coalition &s) {
    if (!s.is_grand())
      best = best ? max(*best, game.value(s)) : game.value(s);
  });
  return *best;
}

Coalition intersect_all(const Game &game, const std::vector<Coalition> &family) {
  Coalition out = game.grand();
  for (const Coalition &s : family)
    out = out & s;
  return out;
}

} // namespace

CoreMembership eps_core_contains(const Game &game, const Allocation &x, const Rational &eps) {
  if (x.n_players() != game.n_players())
    throw ValidationError("allocation length differs from the number of players");
  CoreMembership out;
  const int n = game.n_players();
  out.efficiency_gap = game.grand_value() - x.sum(game.grand());
  if (out.efficiency_gap.sign() != 0)
    return out;

  // Prefix sums over the bitmask keep the sweep linear in 2^|N|.
  const PlayerMask count = PlayerMask{1} << n;
  std::vector<Rational> sums(count);
  for (PlayerMask bits = 1; bits + 1 < count; ++bits) {
    const int low = std::countr_zero(bits);
    sums[bits] = sums[bits & (bits - 1)] + x[low];
    Coalition s(bits, n);
    if (sums[bits] < game.value(s) + eps) {
      out.violated = s;
      return out;
    }
  }
  out.contains = true;
  return out;
}

EpsHat eps_hat(const Game &game) {
  require_users(game, "eps_hat");
  EpsHat out;
  bool first = true;
  const Rational v_grand = game.grand_value();
  for_each_with_aggregator(game.n_users(), [&](const Coalition &s) {
    if (s.is_grand())
      return;
    const Rational ratio = (v_grand - game.value(s)) / Rational(game.n_players() - s.user_count());
    if (first || ratio < out.value) {
      out.value = ratio;
      out.argmin.clear();
      first = false;
    }
    if (ratio == out.value)
      out.argmin.push_back(s);
  });
  return out;
}

Coalition largest_minimizer(const EpsHat &hat) {
  Coalition best = hat.argmin.front();
  for (const Coalition &s : hat.argmin)
    if (s.size() > best.size())
      best = s;
  return best;
}

lp::LinearProgram least_core_program(const Game &game, std::vector<Coalition> *rows) {
  require_users(game, "least-core program");
  require_players_at_most(game, max_players(), "least-core program");
  const int n = game.n_users();
  std::vector<Rational> objective(n + 1, Rational(0));
  objective[n] = Rational(1);
  lp::LinearProgram program(std::move(objective));
  if (rows)
    rows->clear();

  for_each_without_aggregator(n, [&](const Coalition &s) {
    std::vector<Rational> row(n + 1, Rational(0));
    for (int i : s.members())
      row[i] = Rational(-1);
    row[n] = Rational(1);
    program.add_less_equal(std::move(row), Rational(0));
    if (rows)
      rows->push_back(s);
  });
  const Rational v_grand = game.grand_value();
  for_each_with_aggregator(n, [&](const Coalition &s) {
    if (s.is_grand())
      return;
    std::vector<Rational> row(n + 1, Rational(0));
    for (int i = 0; i < n; ++i)
      if (!s.contains(i))
        row[i] = Rational(1);
    row[n] = Rational(1);
    program.add_less_equal(std::move(row), v_grand - game.value(s));
    if (rows)
      rows->push_back(s);
  });
  return program;
}

LeastCoreLp least_core_lp(const Game &game) {
  std::vector<Coalition> rows;
  const lp::LinearProgram program = least_core_program(game, &rows);
  const lp::Solution sol = lp::solve(program);
  if (sol.status != lp::Status::optimal)
    throw ConsistencyError("least-core program reported " + std::string(lp::to_string(sol.status)));

  const int n = game.n_users();
  LeastCoreLp out;
  out.eps_star = sol.objective_value;
  out.pivots = sol.pivots;
  std::vector<Rational> payoffs(sol.primal.begin(), sol.primal.begin() + n);
  Rational users(0);
  for (const Rational &x : payoffs)
    users += x;
  payoffs.push_back(game.grand_value() - users);
  out.primal = Allocation(std::move(payoffs));
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (sol.dual[r].sign() != 0)
      out.dual.emplace(rows[r], sol.dual[r]);

  out.check = lp::verify_certificate(program, sol);
  if (!out.check.ok())
    throw ConsistencyError("least-core certificate failed verification");
  if (!eps_core_contains(game, out.primal, out.eps_star).contains)
    throw ConsistencyError("least-core allocation is not in the strong epsilon-core");
  const DualCheck dual = verify_least_core_dual(game, out.dual);
  if (!dual.feasible || dual.objective != out.eps_star)
    throw ConsistencyError("least-core dual multipliers failed verification");
  return out;
}

DualCheck verify_least_core_dual(const Game &game, const DualWeights &weights) {
  const int n = game.n_users();
  DualCheck out;
  Rational total(0);
  std::vector<Rational> balance(n, Rational(0));
  bool ok = true;
  for (const auto &[s, w] : weights) {
    if (w.sign() < 0 || !s.is_proper() || s.n_players() != game.n_players())
      ok = false;
    total += w;
    if (s.has_aggregator()) {
      out.objective += w * (game.grand_value() - game.value(s));
      for (int i = 0; i < n; ++i)
        if (!s.contains(i))
          balance[i] += w;
    } else {
      for (int i : s.members())
        balance[i] -= w;
    }
  }
  if (total != Rational(1))
    ok = false;
  for (const Rational &b : balance)
    if (b.sign() != 0)
      ok = false;
  out.feasible = ok;
  return out;
}

DualWeights dual_certificate_hat(const Game &game, const Coalition &s_hat) {
  if (!s_hat.has_aggregator() || s_hat.is_grand())
    throw ValidationError("the dual certificate needs a proper coalition containing a");
  const Rational w = Rational(1) / Rational(s_hat.complement().size() + 1);
  DualWeights out;
  out.emplace(s_hat, w);
  for (int i : s_hat.complement().members())
    out.emplace(Coalition::singleton(i, game.n_players()), w);
  return out;
}

DualWeights singleton_dual(const Game &game) {
  DualWeights out;
  const Rational w = Rational(1) / Rational(game.n_players());
  for (int i = 0; i < game.n_players(); ++i)
    out.emplace(Coalition::singleton(i, game.n_players()), w);
  return out;
}

NoFeeBounds bounds_no_fees(const Game &game0) {
  require_users(game0, "bounds");
  const Rational gap = game0.grand_value() - max_leave_one_out(game0);
  const Rational players(game0.n_players());
  return {gap / players, min(game0.grand_value() / players, gap / Rational(2))};
}

Rational eps_bar(const Game &game) {
  require_users(game, "eps_bar");
  const Rational gap = game.grand_value() - max_leave_one_out(game);
  return min(game.grand_value() / Rational(game.n_players()), gap / Rational(2));
}

FeeBounds bounds_with_fees(const Game &game, const FeeStructure *fees) {
  require_users(game, "bounds");
  FeeBounds out;
  out.applicable = check_balanced(game).holds;
  if (!out.applicable)
    return out;
  out.monotone = check_monotonic(game).holds;
  const Rational gap = game.grand_value() - max_leave_one_out(game);
  out.lower_mono = gap / Rational(game.n_players());
  out.upper_loose = eps_bar(game);
  out.upper = out.upper_loose;
  if (fees) {
    out.eps0_star = eps_hat(fees->fee_free).value;
    Rational max_fee(0);
    for (const Rational &c : fees->fees)
      max_fee = max(max_fee, c);
    out.sandwich_lower = *out.eps0_star - max_fee;
    out.upper = min(*out.upper, *out.eps0_star);
  }
  return out;
}

UnbalancedBounds bounds_unbalanced(const Game &game) {
  require_users(game, "bounds");
  if (check_balanced(game).holds)
    throw ValidationError("unbalanced bounds need an empty core");
  return {(game.grand_value() - max_proper_with_aggregator(game)) / Rational(2), eps_bar(game)};
}

Exactness unbalanced_exactness(const Game &game, const EpsHat &hat) {
  if (check_balanced(game).holds)
    throw ValidationError("exactness test needs an empty core");
  Exactness out;
  out.s_hat = largest_minimizer(hat);
  if (out.s_hat.size() != game.n_players() - 1)
    return out;
  const int k = out.s_hat.complement().members().front();
  out.k = k;
  const Rational v_grand = game.grand_value();
  for_each_with_aggregator(game.n_users(), [&](const Coalition &s) {
    if (out.violated || s.is_grand())
      return;
    const Rational need = s.contains(k) ? hat.value : Rational(2) * hat.value;
    if (v_grand < game.value(s) + need)
      out.violated = s;
  });
  if (out.violated)
    return out;

  std::vector<Rational> payoffs(game.n_players(), Rational(0));
  payoffs[k] = hat.value;
  payoffs.back() = v_grand - hat.value;
  Allocation x(std::move(payoffs));
  if (!eps_core_contains(game, x, hat.value).contains)
    throw ConsistencyError("leave-one-out allocation fails the strong epsilon-core test");
  out.x_check = std::move(x);
  out.exact = true;
  return out;
}

LeastCoreReport analyze_least_core(const Game &game, const FeeStructure *fees) {
  LeastCoreReport report;
  const LeastCoreLp lp_result = least_core_lp(game);
  report.eps_star = lp_result.eps_star;
  report.primal_cert = lp_result.primal;
  report.dual_cert = lp_result.dual;
  report.pivots = lp_result.pivots;

  report.hat = eps_hat(game);
  report.s_hat = largest_minimizer(report.hat);
  report.balanced = check_balanced(game).holds;
  report.eps_bar = eps_bar(game);

  report.hat_cert = dual_certificate_hat(game, report.s_hat);
  const DualCheck hat_check = verify_least_core_dual(game, report.hat_cert);
  report.hat_objective = hat_check.objective;
  if (!hat_check.feasible || hat_check.objective != report.hat.value)
    throw ConsistencyError("hat dual certificate is infeasible or misses eps_hat");
  if (report.eps_star > report.hat.value)
    throw ConsistencyError("LP value exceeds eps_hat");

  if (report.balanced) {
    report.formula_exact = true;
    if (report.eps_star != report.hat.value)
      throw ConsistencyError("balanced game with LP value different from eps_hat");
    std::vector<Rational> payoffs(game.n_players(), report.hat.value);
    payoffs.back() = game.grand_value() - report.hat.value * Rational(game.n_users());
    if (!eps_core_contains(game, Allocation(std::move(payoffs)), report.hat.value).contains)
      throw ConsistencyError("uniform allocation at eps_hat is not in the least core");
    report.fee_bounds = bounds_with_fees(game, fees);
    if (fees) {
      report.no_fee_bounds = bounds_no_fees(fees->fee_free);
      const FeeBounds &b = report.fee_bounds;
      // Without fees the sandwich collapses to ε* = ε*₀.
      const bool lower_ok = *b.sandwich_lower == *b.eps0_star ? report.eps_star == *b.eps0_star
                                                               : *b.sandwich_lower < report.eps_star;
      if (!lower_ok || report.eps_star > *b.eps0_star)
        throw ConsistencyError("fee sandwich violated");
    }
    if (report.eps_star > *report.fee_bounds.upper)
      throw ConsistencyError("least-core upper bound violated");
    if (report.fee_bounds.monotone && report.eps_star < *report.fee_bounds.lower_mono)
      throw ConsistencyError("monotone lower bound violated");
  } else {
    report.unbalanced = bounds_unbalanced(game);
    report.exactness = unbalanced_exactness(game, report.hat);
    report.formula_exact = report.eps_star == report.hat.value;
    if (report.exactness->exact != report.formula_exact)
      throw ConsistencyError("leave-one-out exactness test disagrees with the LP");
    const UnbalancedBounds &u = *report.unbalanced;
    if (!(Rational(2) * u.eps_tilde < report.eps_star && report.eps_star <= u.eps_tilde &&
          u.eps_tilde <= report.hat.value))
      throw ConsistencyError("unbalanced sandwich violated");
  }
  if (report.formula_exact)
    report.s_min = intersect_all(game, report.hat.argmin);
  return report;
}

std::optional<Rational> clan_closed_form(const SesgInstance &inst) {
  if (inst.exchange_coefficient() != Rational(1) || !sesg_monotone_char(inst))
    return std::nullopt;
  const bool lone_producer = inst.producer_count() == 1;
  if (!lone_producer && inst.consumer_count() != 1)
    return std::nullopt;
  const PlayerMask lone = lone_producer ? inst.producer_mask() : inst.consumer_mask();
  const PlayerMask many = lone_producer ? inst.consumer_mask() : inst.producer_mask();
  const int m = std::popcount(many);
  if (m < 2)
    return std::nullopt;

  const SesgUser &u = inst.user(std::countr_zero(lone));
  const Rational &c1 = u.fee;
  const Rational &p = u.capacity;
  const Rational q = inst.user(std::countr_zero(many)).capacity;
  for (int i = 0; i < inst.n_users(); ++i)
    if (((many >> i) & 1U) && inst.user(i).capacity != q)
      return std::nullopt;

  const Rational mq = q * Rational(m);
  if (p >= mq) {
    if (m == 2)
      return (Rational(2) * q - c1) / Rational(4);
    if (m == 3 && c1 >= q / Rational(2))
      return (Rational(3) * q - c1) / Rational(5);
    return q / Rational(2);
  }
  if (p <= q * Rational(m - 1))
    return Rational(0);
  if (m == 2 && c1 >= Rational(2) * q - p)
    return (p - c1) / Rational(4);
  if (m == 3 && c1 >= Rational(5) * q - Rational(3) * p / Rational(2))
    return (p - c1) / Rational(5);
  return (p - q * Rational(m - 1)) / Rational(2);
}

} // namespace ecgame
