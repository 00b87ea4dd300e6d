#include <doctest.h>

#include <algorithm>
#include <random>

#include "ecgame/errors.hpp"
#include "ecgame/least_core.hpp"
#include "ecgame/lp.hpp"
#include "ecgame/sesg.hpp"
#include "oracles.hpp"

using namespace ecgame;
using lp::LinearProgram;
using lp::Relation;
using lp::Status;

TEST_CASE("single bound") {
  LinearProgram p({Rational(1)});
  p.add_less_equal({Rational(1)}, Rational(0));
  const lp::Solution s = lp::solve(p);
  REQUIRE(s.status == Status::optimal);
  CHECK(s.objective_value == Rational(0));
  CHECK(s.dual[0] == Rational(1));
  CHECK(lp::verify_certificate(p, s).ok());
}

TEST_CASE("textbook maximum with a fractional vertex") {
  // max 3x + 2y, x + y <= 4, x + 3y <= 6, x <= 3, x, y >= 0
  LinearProgram p({Rational(3), Rational(2)});
  p.add_less_equal({Rational(1), Rational(1)}, Rational(4));
  p.add_less_equal({Rational(1), Rational(3)}, Rational(6));
  p.add_less_equal({Rational(1), Rational(0)}, Rational(3));
  p.add_less_equal({Rational(-1), Rational(0)}, Rational(0));
  p.add_less_equal({Rational(0), Rational(-1)}, Rational(0));
  const lp::Solution s = lp::solve(p);
  REQUIRE(s.status == Status::optimal);
  CHECK(s.objective_value == Rational(11));
  CHECK(s.primal[0] == Rational(3));
  CHECK(s.primal[1] == Rational(1));
  CHECK(lp::verify_certificate(p, s).ok());

  LinearProgram q({Rational(1), Rational(1)});
  q.add_less_equal({Rational(2), Rational(1)}, Rational(3));
  q.add_less_equal({Rational(1), Rational(2)}, Rational(3));
  const lp::Solution t = lp::solve(q);
  CHECK(t.objective_value == Rational(2));
  CHECK(t.primal[0] == Rational(1));
}

TEST_CASE("equality rows and free variables") {
  // max x - y, x + y = 1, x <= 5, y >= -2  ->  x = 3, y = -2
  LinearProgram p({Rational(1), Rational(-1)});
  p.add_row({Rational(1), Rational(1)}, Relation::equal, Rational(1));
  p.add_less_equal({Rational(1), Rational(0)}, Rational(5));
  p.add_less_equal({Rational(0), Rational(-1)}, Rational(2));
  const lp::Solution s = lp::solve(p);
  REQUIRE(s.status == Status::optimal);
  CHECK(s.objective_value == Rational(5));
  CHECK(s.primal[0] == Rational(3));
  CHECK(s.primal[1] == Rational(-2));
  CHECK(lp::verify_certificate(p, s).ok());
}

TEST_CASE("unbounded and infeasible are statuses") {
  LinearProgram u({Rational(1), Rational(0)});
  u.add_less_equal({Rational(0), Rational(1)}, Rational(1));
  CHECK(lp::solve(u).status == Status::unbounded);

  LinearProgram i({Rational(1)});
  i.add_less_equal({Rational(1)}, Rational(-1));
  i.add_less_equal({Rational(-1)}, Rational(-1));
  CHECK(lp::solve(i).status == Status::infeasible);

  LinearProgram both({Rational(1), Rational(1)});
  both.add_row({Rational(1), Rational(0)}, Relation::equal, Rational(1));
  both.add_row({Rational(1), Rational(0)}, Relation::equal, Rational(2));
  CHECK(lp::solve(both).status == Status::infeasible);
}

TEST_CASE("degenerate program terminates") {
  // Beale's cycling example, written with explicit sign rows.
  LinearProgram p({Rational(3, 4), Rational(-20), Rational(1, 2), Rational(-6)});
  p.add_less_equal({Rational(1, 4), Rational(-8), Rational(-1), Rational(9)}, Rational(0));
  p.add_less_equal({Rational(1, 2), Rational(-12), Rational(-1, 2), Rational(3)}, Rational(0));
  p.add_less_equal({Rational(0), Rational(0), Rational(1), Rational(0)}, Rational(1));
  for (int j = 0; j < 4; ++j) {
    std::vector<Rational> row(4, Rational(0));
    row[j] = Rational(-1);
    p.add_less_equal(row, Rational(0));
  }
  const lp::Solution s = lp::solve(p);
  REQUIRE(s.status == Status::optimal);
  CHECK(s.objective_value == Rational(5, 4));
  CHECK(lp::verify_certificate(p, s).ok());
}

TEST_CASE("certificate check rejects tampered duals") {
  LinearProgram p({Rational(1)});
  p.add_less_equal({Rational(1)}, Rational(2));
  lp::Solution s = lp::solve(p);
  s.dual[0] = Rational(2);
  CHECK_FALSE(lp::verify_certificate(p, s).ok());
}

TEST_CASE("malformed programs") {
  CHECK_THROWS_AS(LinearProgram(std::vector<Rational>{}), ValidationError);
  LinearProgram p({Rational(1), Rational(1)});
  CHECK_THROWS_AS(p.add_less_equal({Rational(1)}, Rational(0)), ValidationError);
}

TEST_CASE("least-core program of example 7") {
  const std::vector<Rational> p{7, 8, 10}, q{5, 8, 10}, c{1, 4, 5, 3, 4, 1};
  const Game g = build_game(SesgInstance::from_capacities(p, q, c));
  const lp::Solution s = lp::solve(least_core_program(g));
  REQUIRE(s.status == Status::optimal);
  CHECK(s.objective_value == Rational(-2, 3));
}

TEST_CASE("optimum is invariant under row permutations") {
  std::mt19937_64 rng(11);
  const std::vector<Rational> p{6, 9, 9}, q{7, 2, 3}, c{1, 0, 0, 3, 5, 2};
  const Game g = build_game(SesgInstance::from_capacities(p, q, c));
  const LinearProgram base = least_core_program(g);
  const Rational reference = lp::solve(base).objective_value;
  CHECK(reference == Rational(-2));
  std::vector<lp::Row> rows = base.rows();
  for (int round = 0; round < 5; ++round) {
    std::shuffle(rows.begin(), rows.end(), rng);
    LinearProgram shuffled(base.objective());
    for (const lp::Row &r : rows)
      shuffled.add_row(r.coefficients, r.relation, r.rhs);
    const lp::Solution s = lp::solve(shuffled);
    CHECK(s.objective_value == reference);
    CHECK(lp::verify_certificate(shuffled, s).ok());
  }
}

TEST_CASE("solver agrees with vertex enumeration on small programs") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-4, 4), rhs(0, 9);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 2;
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (int j = 0; j < n; ++j) {  // box keeps it bounded
      std::vector<Rational> up(n, Rational(0)), down(n, Rational(0));
      up[j] = Rational(1);
      down[j] = Rational(-1);
      a.push_back(up);
      b.push_back(Rational(10));
      a.push_back(down);
      b.push_back(Rational(10));
    }
    for (int r = 0; r < 4; ++r) {
      std::vector<Rational> row;
      for (int j = 0; j < n; ++j)
        row.push_back(Rational(coef(rng)));
      a.push_back(row);
      b.push_back(Rational(rhs(rng)));
    }
    std::vector<Rational> obj;
    for (int j = 0; j < n; ++j)
      obj.push_back(Rational(coef(rng)));
    LinearProgram p(obj);
    for (std::size_t r = 0; r < a.size(); ++r)
      p.add_less_equal(a[r], b[r]);
    const lp::Solution s = lp::solve(p);
    REQUIRE(s.status == Status::optimal);
    CHECK(s.objective_value == *oracle::vertex_max(a, b, obj));
    CHECK(lp::verify_certificate(p, s).ok());
  }
}
