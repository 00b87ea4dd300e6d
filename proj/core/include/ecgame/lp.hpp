#pragma once

#include <string_view>
#include <vector>

#include "ecgame/rational.hpp"

namespace ecgame::lp {

enum class Relation { less_equal, equal };

struct Row {
  std::vector<Rational> coefficients;
  Relation relation = Relation::less_equal;
  Rational rhs;
};

/// maximize objective·x subject to rows, all variables free.
class LinearProgram {
public:
  explicit LinearProgram(std::vector<Rational> objective);

  void add_row(std::vector<Rational> coefficients, Relation relation, Rational rhs);
  void add_less_equal(std::vector<Rational> coefficients, Rational rhs) {
    add_row(std::move(coefficients), Relation::less_equal, std::move(rhs));
  }

  int n_variables() const noexcept { return static_cast<int>(objective_.size()); }
  int n_rows() const noexcept { return static_cast<int>(rows_.size()); }
  const std::vector<Rational> &objective() const noexcept { return objective_; }
  const Row &row(int i) const { return rows_.at(i); }
  const std::vector<Row> &rows() const noexcept { return rows_; }

private:
  std::vector<Rational> objective_;
  std::vector<Row> rows_;
};

enum class Status { optimal, unbounded, infeasible };

std::string_view to_string(Status status);

struct Solution {
  Status status = Status::infeasible;
  std::vector<Rational> primal;  ///< one per variable (optimal only)
  std::vector<Rational> dual;    ///< one per row, >= 0 on ≤ rows (optimal only)
  Rational objective_value;
  int pivots = 0;
};

/// Upper bound on the number of rows accepted by solve().
inline constexpr int kMaxRows = 1 << 20;

/// Two-phase simplex with Bland's rule in exact arithmetic. The primal is
/// solved through its dual standard form, so the tableau has one row per
/// variable and one column per constraint. An optimal answer is re-verified
/// (feasibility of both sides, equal objectives, complementary slackness)
/// before it is returned; a failed check throws ConsistencyError.
Solution solve(const LinearProgram &program);

struct CertificateCheck {
  bool primal_feasible = false;
  bool dual_feasible = false;
  bool objectives_match = false;
  bool complementary_slackness = false;

  bool ok() const noexcept {
    return primal_feasible && dual_feasible && objectives_match && complementary_slackness;
  }
};

/// Exact check of an optimal primal/dual pair against `program`.
CertificateCheck verify_certificate(const LinearProgram &program, const Solution &solution);

} // namespace ecgame::lp
