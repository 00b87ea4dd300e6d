#pragma once

// Brute-force reference computations used by the tests. They share only the
// Rational type with the library.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ecgame/rational.hpp"

namespace oracle {

using ecgame::Rational;

struct Sesg {
  std::vector<Rational> p;  // producers, users 1..|p|
  std::vector<Rational> q;  // consumers, users |p|+1..
  std::vector<Rational> c;  // one fee per user
  Rational k{1};            // alpha + gamma - beta

  int users() const { return static_cast<int>(p.size() + q.size()); }

  // members: 0-based user indices, aggregator implied present
  Rational value(unsigned mask) const {
    int count = 0;
    Rational supply(0), demand(0), fee(0);
    for (int i = 0; i < users(); ++i) {
      if (!((mask >> i) & 1U))
        continue;
      ++count;
      if (i < static_cast<int>(p.size()))
        supply += p[i];
      else
        demand += q[i - p.size()];
      fee += c[i];
    }
    if (count < 2)
      return Rational(0);
    return k * std::min(supply, demand) - fee;
  }
};

inline std::string path(const std::string &name) {
  return std::string(ECGAME_EXAMPLES_DIR) + "/" + name;
}

// Solves A z = b by Gauss-Jordan elimination; nullopt when singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col].sign() != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0)
      return std::nullopt;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].sign() == 0)
        continue;
      const Rational f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c)
        a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (int i = 0; i < n; ++i)
    b[i] /= a[i][i];
  return b;
}

// max objective·z over {A z <= b} by enumerating every basis of the rows.
// Only suitable for a handful of variables; assumes the optimum is a vertex.
inline std::optional<Rational> vertex_max(const std::vector<std::vector<Rational>> &a,
                                          const std::vector<Rational> &b,
                                          const std::vector<Rational> &objective) {
  const int rows = static_cast<int>(a.size());
  const int m = static_cast<int>(objective.size());
  std::optional<Rational> best;
  std::vector<int> pick(m);
  for (int i = 0; i < m; ++i)
    pick[i] = i;
  while (true) {
    std::vector<std::vector<Rational>> sub;
    std::vector<Rational> rhs;
    for (int r : pick) {
      sub.push_back(a[r]);
      rhs.push_back(b[r]);
    }
    if (auto z = solve_square(sub, rhs)) {
      bool feasible = true;
      for (int r = 0; r < rows && feasible; ++r) {
        Rational lhs(0);
        for (int j = 0; j < m; ++j)
          lhs += a[r][j] * (*z)[j];
        feasible = lhs <= b[r];
      }
      if (feasible) {
        Rational value(0);
        for (int j = 0; j < m; ++j)
          value += objective[j] * (*z)[j];
        if (!best || value > *best)
          best = value;
      }
    }
    int i = m - 1;
    while (i >= 0 && pick[i] == rows - m + i)
      --i;
    if (i < 0)
      break;
    ++pick[i];
    for (int j = i + 1; j < m; ++j)
      pick[j] = pick[j - 1] + 1;
  }
  return best;
}

// Value table indexed by user mask (aggregator present) -> least-core value
// by vertex enumeration over (x_1..x_n, eps) with x_a eliminated.
inline Rational least_core_value(int n, const std::vector<Rational> &v) {
  const unsigned all = (1U << n) - 1;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (unsigned s = 1; s <= all; ++s) {  // x(S) >= eps for aggregator-free S
    std::vector<Rational> row(n + 1, Rational(0));
    for (int i = 0; i < n; ++i)
      if ((s >> i) & 1U)
        row[i] = Rational(-1);
    row[n] = Rational(1);
    a.push_back(row);
    b.push_back(Rational(0));
  }
  for (unsigned s = 0; s < all; ++s) {  // x(N\S) + eps <= v(N) - v(S)
    std::vector<Rational> row(n + 1, Rational(0));
    for (int i = 0; i < n; ++i)
      if (!((s >> i) & 1U))
        row[i] = Rational(1);
    row[n] = Rational(1);
    a.push_back(row);
    b.push_back(v[all] - v[s]);
  }
  std::vector<Rational> objective(n + 1, Rational(0));
  objective[n] = Rational(1);
  return *vertex_max(a, b, objective);
}

// Maximum users' total over the least core at eps (vertex enumeration).
inline Rational max_users_total(int n, const std::vector<Rational> &v, const Rational &eps) {
  const unsigned all = (1U << n) - 1;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (unsigned s = 1; s <= all; ++s) {
    std::vector<Rational> row(n, Rational(0));
    for (int i = 0; i < n; ++i)
      if ((s >> i) & 1U)
        row[i] = Rational(-1);
    a.push_back(row);
    b.push_back(-eps);
  }
  for (unsigned s = 0; s < all; ++s) {
    std::vector<Rational> row(n, Rational(0));
    for (int i = 0; i < n; ++i)
      if (!((s >> i) & 1U))
        row[i] = Rational(1);
    a.push_back(row);
    b.push_back(v[all] - v[s] - eps);
  }
  return *vertex_max(a, b, std::vector<Rational>(n, Rational(1)));
}

inline std::vector<Rational> table(const Sesg &inst) {
  std::vector<Rational> v(std::size_t{1} << inst.users());
  for (unsigned s = 0; s < v.size(); ++s)
    v[s] = inst.value(s);
  return v;
}

}  // namespace oracle
