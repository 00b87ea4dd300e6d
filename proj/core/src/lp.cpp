#include "ecgame/lp.hpp"

#include <string>

#include "ecgame/errors.hpp"

namespace ecgame::lp {

LinearProgram::LinearProgram(std::vector<Rational> objective) : objective_(std::move(objective)) {
  if (objective_.empty())
    throw ValidationError("linear program needs at least one variable");
}

void LinearProgram::add_row(std::vector<Rational> coefficients, Relation relation, Rational rhs) {
  if (coefficients.size() != objective_.size())
    throw ValidationError("row width " + std::to_string(coefficients.size()) +
                          " differs from the number of variables " +
                          std::to_string(objective_.size()));
  if (rows_.size() >= static_cast<std::size_t>(kMaxRows))
    throw ValidationError("linear program exceeds " + std::to_string(kMaxRows) + " rows");
  rows_.push_back({std::move(coefficients), relation, std::move(rhs)});
}

std::string_view to_string(Status status) {
  switch (status) {
  case Status::optimal:
    return "optimal";
  case Status::unbounded:
    return "unbounded";
  case Status::infeasible:
    return "infeasible";
  }
  return "?";
}

namespace {

/// min cost·y  s.t.  matrix·y = rhs, y >= 0, stored column-major by caller
/// convention: column j holds the coefficients of y_j across all rows.
struct StandardForm {
  int rows = 0;
  std::vector<std::vector<Rational>> columns;
  std::vector<Rational> cost;
  std::vector<Rational> rhs;
};

struct StandardResult {
  Status status = Status::infeasible;
  std::vector<Rational> y;
  /// Simplex multipliers π with cost_j - π·column_j >= 0 for every column.
  std::vector<Rational> multipliers;
  int pivots = 0;
};

class Tableau {
public:
  explicit Tableau(const StandardForm &form)
      : rows_(form.rows), structural_(static_cast<int>(form.columns.size())),
        width_(structural_ + rows_ + 1), cells_(static_cast<std::size_t>(rows_) * width_),
        objective_(width_), basis_(rows_), sign_(rows_, 1) {
    for (int r = 0; r < rows_; ++r) {
      sign_[r] = form.rhs[r].sign() < 0 ? -1 : 1;
      const Rational s(sign_[r]);
      for (int j = 0; j < structural_; ++j) {
        const Rational &a = form.columns[j][r];
        if (a.sign() != 0)
          at(r, j) = s * a;
      }
      at(r, structural_ + r) = Rational(1);
      at(r, rhs_col()) = s * form.rhs[r];
      basis_[r] = structural_ + r;
    }
  }

  StandardResult run(const std::vector<Rational> &cost) {
    StandardResult result;

    // Phase 1: minimise the sum of artificials.
    for (int j = 0; j < width_; ++j)
      objective_[j] = Rational(0);
    for (int r = 0; r < rows_; ++r)
      for (int j = 0; j < structural_; ++j)
        if (at(r, j).sign() != 0)
          objective_[j] -= at(r, j);
    for (int r = 0; r < rows_; ++r)
      objective_[rhs_col()] -= at(r, rhs_col());

    if (!iterate(result.pivots))
      throw ConsistencyError("phase 1 of the simplex method reported unboundedness");
    if (objective_[rhs_col()].sign() != 0) {
      result.status = Status::infeasible;
      return result;
    }

    // Drive zero-level artificials out of the basis; rows where that is
    // impossible are redundant and keep their artificial at zero.
    for (int r = 0; r < rows_; ++r) {
      if (basis_[r] < structural_)
        continue;
      for (int j = 0; j < structural_; ++j) {
        if (at(r, j).sign() != 0) {
          pivot(r, j);
          ++result.pivots;
          break;
        }
      }
    }

    // Phase 2.
    for (int j = 0; j < width_; ++j)
      objective_[j] = j < structural_ ? cost[j] : Rational(0);
    for (int r = 0; r < rows_; ++r) {
      const int b = basis_[r];
      if (b >= structural_ || cost[b].sign() == 0)
        continue;
      for (int j = 0; j < width_; ++j)
        if (at(r, j).sign() != 0)
          objective_[j] -= cost[b] * at(r, j);
    }

    if (!iterate(result.pivots)) {
      result.status = Status::unbounded;
      return result;
    }

    result.status = Status::optimal;
    result.y.assign(structural_, Rational(0));
    for (int r = 0; r < rows_; ++r)
      if (basis_[r] < structural_)
        result.y[basis_[r]] = at(r, rhs_col());
    // The reduced cost of artificial k is -π'_k for the sign-adjusted rows.
    result.multipliers.resize(rows_);
    for (int r = 0; r < rows_; ++r)
      result.multipliers[r] = Rational(-sign_[r]) * objective_[structural_ + r];
    return result;
  }

private:
  Rational &at(int r, int c) { return cells_[static_cast<std::size_t>(r) * width_ + c]; }
  int rhs_col() const { return width_ - 1; }

  /// Bland's rule over structural columns. Returns false on unboundedness.
  bool iterate(int &pivots) {
    for (;;) {
      int entering = -1;
      for (int j = 0; j < structural_; ++j) {
        if (objective_[j].sign() < 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0)
        return true;

      int leaving = -1;
      Rational best_ratio;
      for (int r = 0; r < rows_; ++r) {
        const Rational &a = at(r, entering);
        if (a.sign() <= 0)
          continue;
        Rational ratio = at(r, rhs_col()) / a;
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (leaving < 0)
        return false;
      pivot(leaving, entering);
      ++pivots;
    }
  }

  void pivot(int row, int col) {
    const Rational inv = Rational(1) / at(row, col);
    for (int j = 0; j < width_; ++j)
      if (at(row, j).sign() != 0)
        at(row, j) *= inv;
    auto eliminate = [&](Rational *target) {
      const Rational factor = target[col];
      if (factor.sign() == 0)
        return;
      for (int j = 0; j < width_; ++j) {
        const Rational &p = at(row, j);
        if (p.sign() != 0)
          target[j] -= factor * p;
      }
    };
    for (int r = 0; r < rows_; ++r)
      if (r != row)
        eliminate(&at(r, 0));
    eliminate(objective_.data());
    basis_[row] = col;
  }

  int rows_;
  int structural_;
  int width_;
  std::vector<Rational> cells_;
  std::vector<Rational> objective_;
  std::vector<int> basis_;
  std::vector<int> sign_;
};

StandardResult solve_standard(const StandardForm &form) {
  Tableau tableau(form);
  return tableau.run(form.cost);
}

} // namespace

Solution solve(const LinearProgram &program) {
  const int n = program.n_variables();
  const int m = program.n_rows();

  // Dual standard form: one column per ≤ row, two per equality row.
  StandardForm dual;
  dual.rows = n;
  dual.rhs = program.objective();
  std::vector<int> first_column(m);
  for (int i = 0; i < m; ++i) {
    const Row &row = program.row(i);
    first_column[i] = static_cast<int>(dual.columns.size());
    dual.columns.push_back(row.coefficients);
    dual.cost.push_back(row.rhs);
    if (row.relation == Relation::equal) {
      std::vector<Rational> negated(row.coefficients.size());
      for (std::size_t k = 0; k < negated.size(); ++k)
        negated[k] = -row.coefficients[k];
      dual.columns.push_back(std::move(negated));
      dual.cost.push_back(-row.rhs);
    }
  }

  StandardResult res = solve_standard(dual);
  Solution out;
  out.pivots = res.pivots;

  if (res.status == Status::unbounded) {
    out.status = Status::infeasible;
    return out;
  }
  if (res.status == Status::infeasible) {
    // The primal is feasible iff min b·y over {Aᵀy = 0, y >= 0} is bounded.
    StandardForm homogeneous = dual;
    homogeneous.rhs.assign(n, Rational(0));
    StandardResult probe = solve_standard(homogeneous);
    out.pivots += probe.pivots;
    out.status = probe.status == Status::unbounded ? Status::infeasible : Status::unbounded;
    return out;
  }

  out.status = Status::optimal;
  out.primal = std::move(res.multipliers);
  out.dual.resize(m);
  for (int i = 0; i < m; ++i) {
    const int c = first_column[i];
    out.dual[i] = res.y[c];
    if (program.row(i).relation == Relation::equal)
      out.dual[i] -= res.y[c + 1];
  }
  out.objective_value = Rational(0);
  for (int k = 0; k < n; ++k)
    out.objective_value += program.objective()[k] * out.primal[k];

  CertificateCheck check = verify_certificate(program, out);
  if (!check.ok())
    throw ConsistencyError("simplex produced an invalid optimality certificate");
  return out;
}

CertificateCheck verify_certificate(const LinearProgram &program, const Solution &solution) {
  CertificateCheck check;
  const int n = program.n_variables();
  const int m = program.n_rows();
  if (solution.status != Status::optimal || static_cast<int>(solution.primal.size()) != n ||
      static_cast<int>(solution.dual.size()) != m)
    return check;

  check.primal_feasible = true;
  check.dual_feasible = true;
  check.complementary_slackness = true;
  std::vector<Rational> reduced(program.objective());
  Rational dual_objective(0);
  for (int i = 0; i < m; ++i) {
    const Row &row = program.row(i);
    const Rational &y = solution.dual[i];
    Rational lhs(0);
    for (int k = 0; k < n; ++k) {
      if (row.coefficients[k].sign() == 0)
        continue;
      lhs += row.coefficients[k] * solution.primal[k];
      if (y.sign() != 0)
        reduced[k] -= row.coefficients[k] * y;
    }
    const Rational slack = row.rhs - lhs;
    if (row.relation == Relation::equal) {
      check.primal_feasible &= slack.sign() == 0;
    } else {
      check.primal_feasible &= slack.sign() >= 0;
      check.dual_feasible &= y.sign() >= 0;
      check.complementary_slackness &= (y * slack).sign() == 0;
    }
    dual_objective += row.rhs * y;
  }
  for (const Rational &r : reduced)
    check.dual_feasible &= r.sign() == 0;

  Rational primal_objective(0);
  for (int k = 0; k < n; ++k)
    primal_objective += program.objective()[k] * solution.primal[k];
  check.objectives_match =
      primal_objective == dual_objective && primal_objective == solution.objective_value;
  return check;
}

} // namespace ecgame::lp
