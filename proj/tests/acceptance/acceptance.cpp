// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ecgame/errors.hpp"
#include "ecgame/least_core.hpp"
#include "ecgame/properties.hpp"
#include "ecgame/random_instance.hpp"
#include "ecgame/shares.hpp"
#include "ecgame_cli/instance_io.hpp"
#include "oracles.hpp"

using namespace ecgame;

namespace {

class Criterion {
public:
  explicit Criterion(std::string name) : name_(std::move(name)) {}

  void expect(bool ok, const std::string &what) {
    ++checks_;
    if (!ok && failures_.size() < 12)
      failures_.push_back(what);
    failed_ += !ok;
  }

  template <class A, class B> void equal(const A &got, const B &want, const std::string &what) {
    std::ostringstream os;
    os << what << " = " << got << ", expected " << want;
    expect(got == want, os.str());
  }

  void note(const std::string &text) { notes_.push_back(text); }

  bool report() const {
    const bool pass = failed_ == 0 && checks_ > 0;
    std::cout << (pass ? "PASS " : "FAIL ") << name_ << " (" << checks_ - failed_ << "/" << checks_
              << " checks)\n";
    for (const std::string &f : failures_)
      std::cout << "    failed: " << f << "\n";
    for (const std::string &n : notes_)
      std::cout << "    " << n << "\n";
    return pass;
  }

private:
  std::string name_;
  int checks_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

void guarded(Criterion &c, const std::string &what, const std::function<void()> &body) {
  try {
    body();
  } catch (const std::exception &e) {
    c.expect(false, what + ": " + e.what());
  }
}

struct Loaded {
  Game game;
  SesgInstance inst;
  FeeStructure fees;
};

Loaded load(const std::string &name) {
  const cli::Instance parsed = cli::parse_instance_file(oracle::path(name + ".json"));
  if (!parsed.sesg)
    throw ValidationError(name + " is not an SESG instance");
  return {parsed.game, *parsed.sesg, fee_structure(*parsed.sesg)};
}

LeastCoreReport least_core_of(const Loaded &l) { return analyze_least_core(l.game, &l.fees); }

Coalition key(std::initializer_list<int> users_one_based, int n_users) {
  PlayerMask mask = 0;
  for (int u : users_one_based)
    mask |= PlayerMask{1} << (u - 1);
  return Coalition::with_aggregator(mask, n_users + 1);
}

bool criterion_fixtures() {
  Criterion c("1 example fixtures: least-core values and bounds");
  guarded(c, "example2", [&] {
    const LeastCoreReport r = least_core_of(load("example2"));
    c.equal(r.eps_star, Rational(14, 3), "example2 eps0*");
    c.equal(r.no_fee_bounds->lower, Rational(2), "example2 lower");
    c.equal(r.no_fee_bounds->upper, Rational(5), "example2 upper");
  });
  guarded(c, "example5", [&] {
    const LeastCoreReport r = least_core_of(load("example5"));
    c.equal(r.eps_star, Rational(4), "example5 eps*");
    c.equal(r.fee_bounds.lower_mono.value_or(Rational(-999)), Rational(9, 5), "example5 lower");
    c.equal(r.fee_bounds.upper.value_or(Rational(-999)), Rational(9, 2), "example5 upper");
    c.equal(r.fee_bounds.eps0_star.value_or(Rational(-999)), Rational(14, 3), "example5 eps0*");
  });
  guarded(c, "example6", [&] {
    const LeastCoreReport r = least_core_of(load("example6"));
    c.equal(r.eps_star, Rational(-1), "example6 eps*");
    c.equal(r.unbalanced->eps_tilde, Rational(-1), "example6 eps~");
    c.equal(r.hat.value, Rational(-1), "example6 eps^");
    c.equal(r.unbalanced->eps_bar, Rational(-1), "example6 eps-bar");
  });
  guarded(c, "example7", [&] {
    const LeastCoreReport r = least_core_of(load("example7"));
    c.equal(r.eps_star, Rational(-2, 3), "example7 eps*");
    c.equal(r.unbalanced->eps_tilde, Rational(-1, 2), "example7 eps~");
    c.equal(r.hat.value, Rational(-1, 3), "example7 eps^");
    c.equal(r.unbalanced->eps_bar, Rational(5, 7), "example7 eps-bar");
  });
  guarded(c, "example8", [&] {
    const LeastCoreReport r = least_core_of(load("example8"));
    c.equal(r.eps_star, Rational(-2), "example8 eps*");
    c.equal(r.hat.value, Rational(-3, 2), "example8 eps^");
    c.expect(r.exactness && !r.exactness->exact, "example8 exactness verdict false");
  });
  guarded(c, "p2=92", [&] {
    const LeastCoreReport r = least_core_of(load("example2_p92"));
    c.equal(r.no_fee_bounds->upper, Rational(4), "p2=92 upper");
    c.equal(r.eps_star, Rational(4), "p2=92 eps0*");
  });
  guarded(c, "p2=100", [&] {
    const LeastCoreReport r = least_core_of(load("example2_p100"));
    c.equal(r.no_fee_bounds->lower, Rational(0), "p2=100 lower");
    c.equal(r.eps_star, Rational(0), "p2=100 eps0*");
  });
  guarded(c, "fees p2=91", [&] {
    const LeastCoreReport r = least_core_of(load("example5_p91"));
    c.equal(r.fee_bounds.upper.value_or(Rational(-999)), Rational(4), "fees p2=91 upper");
    c.equal(r.eps_star, Rational(4), "fees p2=91 eps*");
  });
  guarded(c, "fees p2=99", [&] {
    const LeastCoreReport r = least_core_of(load("example5_p99"));
    c.equal(r.fee_bounds.lower_mono.value_or(Rational(-999)), Rational(0), "fees p2=99 lower");
    c.equal(r.eps_star, Rational(0), "fees p2=99 eps*");
  });
  return c.report();
}

bool criterion_shares() {
  Criterion c("2 aggregator shares and partition bounds");
  auto shares_of = [](const Loaded &l) {
    return analyze_shares(l.game, least_core_of(l), PartitionMode::exact);
  };
  guarded(c, "marginal_tight", [&] {
    const SharesReport s = shares_of(load("marginal_tight"));
    c.equal(s.min_share, Rational(0), "tight m_a");
    c.equal(s.singleton_bound.value, Rational(0), "tight singleton bound");
  });
  for (const auto &[name, m_a] : {std::pair{"example9", 3}, std::pair{"example10", 1}})
    guarded(c, name, [&, name = std::string(name), m_a = m_a] {
      const SharesReport s = shares_of(load(name));
      c.equal(s.min_share, Rational(m_a), name + " m_a");
      c.equal(s.partition_bound->value, Rational(0), name + " partition bound");
      c.expect(s.partition_bound->value < s.min_share, name + " partition bound strict");
    });
  return c.report();
}

bool criterion_classification() {
  Criterion c("3 property classification");
  guarded(c, "example1", [&] {
    const Game g = load("example1").game;
    const ConvexityResult cx = check_convex(g);
    c.expect(!cx.holds, "example1 not convex");
    c.expect(violates_supermodularity(g, key({1, 2, 4}, 4), key({1, 3, 4}, 4)),
             "example1 pair {a,1,2,4},{a,1,3,4} violates supermodularity");
  });
  guarded(c, "example4", [&] {
    const PropertyReport r = classify(load("example4").game);
    c.expect(!r.superadditive.holds, "example4 not superadditive");
    c.expect(!r.monotonic.holds, "example4 not monotonic");
    c.expect(r.convex && !r.convex->holds, "example4 not convex");
    c.expect(!r.totally_balanced, "example4 not totally balanced");
    c.expect(r.balanced.holds, "example4 balanced");
  });
  return c.report();
}

struct RandomCase {
  SesgInstance inst;
  Game game;
  FeeStructure fees;
};

std::vector<RandomCase> random_cases() {
  std::vector<RandomCase> out;
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 500; ++i) {
    GeneratorOptions o;
    const int users = 2 + i % 6;
    o.producers = std::uniform_int_distribution<int>(0, users)(rng);
    o.consumers = users - o.producers;
    o.max_capacity = (i % 5 == 0) ? 4 : 10;
    switch (i % 4) {
    case 0: o.max_fee = 0; break;
    case 1: o.max_fee = 1; break;
    case 2: o.max_fee = 3; break;
    default: o.max_fee = 10; break;
    }
    o.seed = 1000 + static_cast<std::uint64_t>(i);
    SesgInstance inst = random_instance(o);
    Game g = build_game(inst);
    out.push_back({inst, g, fee_structure(inst)});
  }
  return out;
}

std::string coverage_line(const std::map<std::string, int> &coverage) {
  std::string line = "coverage:";
  for (const auto &[k, v] : coverage)
    line += " " + k + "=" + std::to_string(v);
  return line;
}

bool criterion_oracles(const std::vector<RandomCase> &cases, Criterion &certs) {
  Criterion c("4 oracle equivalence on 500 random instances");
  std::map<std::string, int> coverage;
  for (const std::string k : {"balanced", "unbalanced", "exact_unbalanced", "inexact", "monotone",
                              "not_monotone", "bigboss_true", "bigboss_false", "shares_equal",
                              "shares_differ", "vertex_oracle"})
    coverage[k] = 0;

  int index = 0;
  for (const RandomCase &rc : cases) {
    const std::string tag = "instance " + std::to_string(index++);
    guarded(c, tag, [&] {
      const Game &g = rc.game;
      std::vector<Coalition> rows;
      const lp::LinearProgram program = least_core_program(g, &rows);
      const lp::Solution sol = lp::solve(program);
      c.expect(sol.status == lp::Status::optimal, tag + " least-core program optimal");
      const Rational eps_star = sol.objective_value;
      certs.expect(lp::verify_certificate(program, sol).ok(), tag + " least-core certificate");

      if (g.n_users() <= 3) {
        const std::vector<Rational> table(g.table().begin(), g.table().end());
        c.equal(eps_star, oracle::least_core_value(g.n_users(), table), tag + " eps* vs vertex oracle");
        ++coverage["vertex_oracle"];
      }

      const EpsHat hat = eps_hat(g);
      const Coalition s_hat = largest_minimizer(hat);
      const DualCheck lam = verify_least_core_dual(g, dual_certificate_hat(g, s_hat));
      certs.expect(lam.feasible && lam.objective == hat.value, tag + " lambda-hat feasible with objective eps^");

      const bool mono = check_monotonic(g).holds;
      ++coverage[mono ? "monotone" : "not_monotone"];
      c.expect(sesg_monotone_char(rc.inst) == mono, tag + " monotone closed form");
      c.expect(mono_char_with_fees(rc.fees.fee_free, rc.fees.fees) == mono, tag + " fee characterization");
      if (const auto boss = sesg_bigboss_char(rc.inst)) {
        const ClanResult clan = check_clan(g);
        c.expect(*boss == (clan.big_boss == g.aggregator()), tag + " big-boss closed form");
        ++coverage[*boss ? "bigboss_true" : "bigboss_false"];
      }

      LeastCoreReport lc;
      lc.eps_star = eps_star;
      lc.hat = hat;
      lc.s_hat = s_hat;
      lc.balanced = check_balanced(g).holds;
      if (lc.balanced) {
        ++coverage["balanced"];
        c.equal(hat.value, eps_star, tag + " balanced eps^ vs LP");
        lc.formula_exact = hat.value == eps_star;
      } else {
        ++coverage["unbalanced"];
        const UnbalancedBounds ub = bounds_unbalanced(g);
        c.expect(Rational(2) * ub.eps_tilde < eps_star && eps_star <= ub.eps_tilde &&
                     ub.eps_tilde <= hat.value && hat.value <= ub.eps_bar,
                 tag + " unbalanced sandwich");
        lc.exactness = unbalanced_exactness(g, hat);
        c.expect(lc.exactness->exact == (eps_star == hat.value), tag + " exactness verdict");
        lc.formula_exact = lc.exactness->exact;
        ++coverage[lc.formula_exact ? "exact_unbalanced" : "inexact"];
      }

      std::vector<Coalition> share_rows;
      const lp::LinearProgram up = share_program(g, eps_star, true, &share_rows);
      const lp::LinearProgram down = share_program(g, eps_star, false);
      const lp::Solution up_sol = lp::solve(up), down_sol = lp::solve(down);
      certs.expect(lp::verify_certificate(up, up_sol).ok(), tag + " max share certificate");
      certs.expect(lp::verify_certificate(down, down_sol).ok(), tag + " min share certificate");
      const bool lp_equal = up_sol.objective_value == -down_sol.objective_value;
      ++coverage[lp_equal ? "shares_equal" : "shares_differ"];
      if (const auto verdict = equality_characterization(g, lc))
        c.expect(verdict->equal == lp_equal, tag + " equality characterization");
    });
  }
  for (const auto &[k, v] : coverage)
    c.expect(v > 0, "coverage of " + k);
  c.note(coverage_line(coverage));
  return c.report();
}

bool criterion_clan_forms() {
  Criterion c("6 single-producer clan closed forms");
  std::map<std::string, int> branches;
  auto branch_of = [](int m, const Rational &p, const Rational &q, const Rational &c1) -> std::string {
    if (p >= q * Rational(m)) {
      if (m == 2)
        return "abundant_m2";
      if (m == 3 && c1 >= q / Rational(2))
        return "abundant_m3_fee";
      return "abundant_half";
    }
    if (p <= q * Rational(m - 1))
      return "scarce_zero";
    if (m == 2 && c1 >= Rational(2) * q - p)
      return "middle_m2_fee";
    if (m == 3 && c1 >= Rational(5) * q - Rational(3) * p / Rational(2))
      return "middle_m3_fee";
    return "middle_half";
  };
  for (const std::string k : {"abundant_m2", "abundant_m3_fee", "abundant_half", "scarce_zero",
                              "middle_m2_fee", "middle_m3_fee", "middle_half"})
    branches[k] = 0;

  for (int m = 2; m <= 5; ++m)
    for (int q = 1; q <= 4; ++q)
      for (int twice_p = 1; twice_p <= 2 * (m + 1) * q; ++twice_p)
        for (int twice_c = 0; twice_c <= 2 * q; ++twice_c) {
          const Rational p(twice_p, 2), c1(twice_c, 2);
          if (c1 > min(p, Rational(q)))
            continue;
          for (bool swap_roles : {false, true}) {
            const std::string tag = "m=" + std::to_string(m) + " q=" + std::to_string(q) +
                                    " p=" + p.to_string() + " c=" + c1.to_string();
            guarded(c, tag, [&] {
              std::vector<Rational> fees(m + 1, Rational(0));
              const std::vector<Rational> many(m, Rational(q));
              SesgInstance inst;
              if (swap_roles) {
                fees[m] = c1;
                inst = SesgInstance::from_capacities(many, std::vector<Rational>{p}, fees);
              } else {
                fees[0] = c1;
                inst = SesgInstance::from_capacities(std::vector<Rational>{p}, many, fees);
              }
              const auto closed = clan_closed_form(inst);
              c.expect(closed.has_value(), tag + " closed form applies");
              if (closed)
                c.equal(*closed, eps_hat(build_game(inst)).value, tag + " closed form vs eps^");
              ++branches[branch_of(m, p, Rational(q), c1)];
            });
          }
        }
  for (const auto &[k, v] : branches)
    c.expect(v > 0, "branch " + k + " covered");
  c.note(coverage_line(branches));
  return c.report();
}

} // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  ok &= criterion_fixtures();
  ok &= criterion_shares();
  ok &= criterion_classification();

  const std::vector<RandomCase> cases = random_cases();
  Criterion certs("5 certificate soundness");
  ok &= criterion_oracles(cases, certs);
  ok &= certs.report();
  ok &= criterion_clan_forms();

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "elapsed " << seconds << " s\n";
  return ok ? 0 : 1;
}
