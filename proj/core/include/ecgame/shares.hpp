#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecgame/least_core.hpp"

namespace ecgame {

/// Largest |U| accepted by the exact partition enumeration.
inline constexpr int kPartitionLimit = 10;

enum class PartitionMode { exact, singletons };

struct ShareLp {
  Rational users_total;     ///< optimal x(U)
  Allocation certificate;   ///< optimal allocation, x_a = v(N) - x(U)
  DualWeights dual;         ///< nonzero multipliers of the share program
  lp::CertificateCheck check;
};

/// Least-core polytope at `eps_star` written over x_U; the objective is x(U)
/// when `maximize_users`, -x(U) otherwise.
lp::LinearProgram share_program(const Game &game, const Rational &eps_star, bool maximize_users,
                                std::vector<Coalition> *rows = nullptr);

/// max x(U) over the least core; m_a = v(N) - M_U.
ShareLp max_users_share(const Game &game, const Rational &eps_star);
/// min x(U) over the least core; M_a = v(N) - min x(U).
ShareLp min_users_share(const Game &game, const Rational &eps_star);

struct ShareDualCheck {
  bool feasible = false;
  Rational objective;
};

/// Feasibility of λ for the dual of the max-x(U) share program.
ShareDualCheck verify_share_dual(const Game &game, const Rational &eps_star, const DualWeights &weights);

/// Intersection of the argmin set; nullopt unless ε* = ε̂.
std::optional<Coalition> s_min(const Game &game, const LeastCoreReport &report);

struct EqualityVerdict {
  bool equal = false;
  Coalition intersection;   ///< S_min (balanced) or ⋂𝒫* (unbalanced)
  std::optional<int> k;     ///< unbalanced case only
  std::string explanation;
};

/// m_a = M_a decided from the argmin structure; nullopt when ε* < ε̂.
std::optional<EqualityVerdict> equality_characterization(const Game &game, const LeastCoreReport &report);

struct PartitionBound {
  Rational value;
  std::vector<Coalition> blocks;  ///< aggregator-free blocks of the minimising partition
};

/// Lower bound on m_a from a partition of U: the minimum over all partitions
/// (exact, |U| <= kPartitionLimit) or the singleton partition.
PartitionBound partition_lower_bound(const Game &game, const Rational &eps_star, PartitionMode mode);

/// 0/1 multipliers on N \ B for every block B of `blocks`.
DualWeights partition_dual(const Game &game, const std::vector<Coalition> &blocks);

struct SharesReport {
  Rational max_share;       ///< M_a
  Rational min_share;       ///< m_a
  Rational max_users;       ///< M_U
  std::optional<Rational> max_share_closed_form;
  std::optional<Coalition> s_min;
  std::optional<EqualityVerdict> equality;
  bool lp_equal = false;    ///< m_a == M_a from the programs
  std::optional<PartitionBound> partition_bound;
  PartitionBound singleton_bound;
  std::optional<bool> partition_tight;
  std::optional<bool> partition_dual_ok;  ///< checked when the exact bound is tight
  Allocation max_share_cert;  ///< attains M_a
  Allocation min_share_cert;  ///< attains m_a
  DualWeights min_share_dual;
};

/// Both share programs, closed forms and bounds, cross-checked against each
/// other. Throws ConsistencyError on any disagreement.
SharesReport analyze_shares(const Game &game, const LeastCoreReport &lc, PartitionMode mode);

} // namespace ecgame
