#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ecgame/game.hpp"
#include "ecgame/lp.hpp"
#include "ecgame/sesg.hpp"

namespace ecgame {

/// Dual multipliers λ_S of the least-core program, keyed by coalition.
using DualWeights = std::map<Coalition, Rational>;

struct CoreMembership {
  bool contains = false;
  std::optional<Coalition> violated;  ///< proper S with x(S) < v(S) + ε
  Rational efficiency_gap;            ///< v(N) - x(N)
};

/// x ∈ C_ε(N, v): x(N) = v(N) and x(S) >= v(S) + ε on every proper S.
CoreMembership eps_core_contains(const Game &game, const Allocation &x, const Rational &eps);

struct EpsHat {
  Rational value;
  std::vector<Coalition> argmin;  ///< every minimiser, increasing bit order
};

/// min over proper S ∋ a of (v(N) - v(S)) / (|N| - |S ∩ U|). Needs |U| >= 1.
EpsHat eps_hat(const Game &game);

/// Largest-cardinality member of the argmin set (first in bit order on ties).
Coalition largest_minimizer(const EpsHat &hat);

struct LeastCoreLp {
  Rational eps_star;
  Allocation primal;
  DualWeights dual;           ///< nonzero multipliers only
  lp::CertificateCheck check;
  int pivots = 0;
};

/// Least-core program over (x_U, ε) with x_a eliminated. `rows`, when given,
/// receives the coalition behind each row.
lp::LinearProgram least_core_program(const Game &game, std::vector<Coalition> *rows = nullptr);

/// Solves the least-core program exactly; the primal allocation and the dual
/// multipliers are re-verified before returning.
LeastCoreLp least_core_lp(const Game &game);

struct DualCheck {
  bool feasible = false;
  Rational objective;  ///< Σ λ_S (v(N) - v(S)) over S ∋ a
};

/// Feasibility of λ for the dual of the least-core program.
DualCheck verify_least_core_dual(const Game &game, const DualWeights &weights);

/// λ̂: weight 1/(|N \ Ŝ| + 1) on Ŝ and on every {i} with i ∉ Ŝ.
DualWeights dual_certificate_hat(const Game &game, const Coalition &s_hat);

/// λ_{i} = 1/|N| on every singleton.
DualWeights singleton_dual(const Game &game);

struct NoFeeBounds {
  Rational lower;
  Rational upper;
};

/// Leave-one-out bounds for a fee-free (balanced) game.
NoFeeBounds bounds_no_fees(const Game &game0);

struct FeeBounds {
  bool applicable = false;            ///< core nonempty
  bool monotone = false;              ///< precondition of `lower_mono`
  std::optional<Rational> eps0_star;  ///< present when the fee-free game is known
  std::optional<Rational> sandwich_lower;  ///< ε*₀ - max fee (strict)
  std::optional<Rational> lower_mono;      ///< (v(N) - max leave-one-out) / |N|
  std::optional<Rational> upper;           ///< includes ε*₀ when known
  std::optional<Rational> upper_loose;     ///< min{v(N)/|N|, leave-one-out gap / 2}
};

FeeBounds bounds_with_fees(const Game &game, const FeeStructure *fees);

struct UnbalancedBounds {
  Rational eps_tilde;  ///< (v(N) - max over proper S ∋ a) / 2
  Rational eps_bar;    ///< min{v(N)/|N|, (v(N) - max leave-one-out) / 2}
};

/// Throws ValidationError when the game is balanced.
UnbalancedBounds bounds_unbalanced(const Game &game);

/// min{v(N)/|N|, (v(N) - max leave-one-out) / 2}; defined for every game.
Rational eps_bar(const Game &game);

struct Exactness {
  bool exact = false;
  Coalition s_hat;
  std::optional<int> k;                 ///< user outside a leave-one-out Ŝ
  std::optional<Coalition> violated;    ///< coalition breaking the k-system
  std::optional<Allocation> x_check;    ///< ε̂ to k, zero to the other users
};

/// Leave-one-out test of ε* = ε̂ for unbalanced games. Throws
/// ValidationError when the game is balanced.
Exactness unbalanced_exactness(const Game &game, const EpsHat &hat);

struct LeastCoreReport {
  Rational eps_star;
  EpsHat hat;
  Coalition s_hat;
  std::optional<Coalition> s_min;  ///< intersection of the argmin set when exact
  bool balanced = false;
  bool formula_exact = false;

  FeeBounds fee_bounds;                        ///< balanced games
  std::optional<NoFeeBounds> no_fee_bounds;    ///< fee-free game, when known
  std::optional<UnbalancedBounds> unbalanced;  ///< unbalanced games
  std::optional<Exactness> exactness;          ///< unbalanced games
  Rational eps_bar;

  Allocation primal_cert;
  DualWeights dual_cert;
  DualWeights hat_cert;
  Rational hat_objective;
  int pivots = 0;
};

/// LP ground truth plus every closed form, with all certificates checked.
/// Throws ConsistencyError when a closed form contradicts the LP.
LeastCoreReport analyze_least_core(const Game &game, const FeeStructure *fees = nullptr);

/// Closed form of ε* for a monotone single-producer (or single-consumer)
/// SESG whose other side has equal capacities; nullopt outside that family.
std::optional<Rational> clan_closed_form(const SesgInstance &inst);

} // namespace ecgame
