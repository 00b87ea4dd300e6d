#pragma once

#include <optional>
#include <span>

#include "ecgame/game.hpp"
#include "ecgame/sesg.hpp"

namespace ecgame {

/// Size guards of the brute-force sweeps (|N|).
inline constexpr int kSuperadditivityLimit = 14;
inline constexpr int kConvexityLimit = 12;
inline constexpr int kSubgameSweepLimit = 10;

/// Disjoint (or arbitrary, for convexity) pair violating the inequality.
struct PairWitness {
  Coalition s;
  Coalition t;
};

/// v(S ∪ {player}) < v(S).
struct MonotonicityWitness {
  Coalition s;
  int player = 0;
};

struct SuperadditivityResult {
  bool holds = true;
  std::optional<PairWitness> witness;
};

struct MonotonicityResult {
  bool holds = true;
  std::optional<MonotonicityWitness> witness;
};

struct ConvexityResult {
  bool holds = true;
  std::optional<PairWitness> witness;
};

struct BalanceResult {
  bool holds = true;
  std::optional<Coalition> witness;  ///< S ∋ a with v(S) > v(N)
};

struct ClanResult {
  bool applicable = false;           ///< false when the game is not monotonic
  std::optional<Coalition> clan;
  std::optional<int> big_boss;       ///< set when the clan is a singleton
};

struct EgalitarianMembership {
  bool users_share_in_core = false;  ///< (v(N)/|U|, ..., v(N)/|U|, 0)
  bool egalitarian_in_core = false;  ///< (v(N)/|N|, ..., v(N)/|N|)
};

struct PropertyReport {
  SuperadditivityResult superadditive;
  MonotonicityResult monotonic;
  std::optional<ConvexityResult> convex;  ///< absent above kConvexityLimit
  Coalition veto_set;
  ClanResult clan;
  BalanceResult balanced;
  bool totally_balanced = false;
  EgalitarianMembership egalitarian;
};

bool violates_superadditivity(const Game &game, const Coalition &s, const Coalition &t);
bool violates_supermodularity(const Game &game, const Coalition &s, const Coalition &t);
bool violates_monotonicity(const Game &game, const Coalition &s, int player);

SuperadditivityResult check_superadditive(const Game &game);
MonotonicityResult check_monotonic(const Game &game);
ConvexityResult check_convex(const Game &game);

/// Maximal T such that v(S) = 0 whenever T ⊄ S (intersection of every
/// coalition with nonzero value; N for the zero game).
Coalition veto_set(const Game &game);

/// Clan test on the maximal veto set (on {a} when that set is all of N).
ClanResult check_clan(const Game &game);

/// Closed-form monotonicity test for SESG instances, driven by the number
/// of producers and consumers and by the fees.
bool sesg_monotone_char(const SesgInstance &inst);

/// Closed-form big-boss test; nullopt unless the instance is monotone, has
/// at least two producers and two consumers, and total supply ≠ demand.
std::optional<bool> sesg_bigboss_char(const SesgInstance &inst);

/// Monotonicity of the fee-adjusted game apply_admission_fees(game0, fees),
/// decided from per-user fee caps and per-coalition aggregator gains of the
/// fee-free game. Requires |N| <= kSuperadditivityLimit.
bool mono_char_with_fees(const Game &game0, std::span<const Rational> fees);

/// v(S) <= v(N) for every S ∋ a; also re-verifies (0, ..., 0, v(N)) ∈ C(N, v).
BalanceResult check_balanced(const Game &game);

/// Totally balanced iff monotonic for these veto games.
bool check_totally_balanced(const Game &game);

/// Independent cross-check: solves a core-emptiness LP on every subgame.
/// Throws ValidationError above kSubgameSweepLimit.
bool totally_balanced_by_subgames(const Game &game);

/// Cost-side balancedness condition c(U \ S) <= v0(N) - v0(S) on every S ∋ a.
bool fee_balance_condition(const FeeStructure &fees);

/// Closed-form conditions on the users-only and egalitarian allocations.
EgalitarianMembership egalitarian_membership(const Game &game);
/// Same question answered by direct core membership tests.
EgalitarianMembership egalitarian_membership_direct(const Game &game);

PropertyReport classify(const Game &game);

} // namespace ecgame
