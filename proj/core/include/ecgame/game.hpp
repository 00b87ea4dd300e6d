#pragma once

#include <span>
#include <vector>

#include "ecgame/coalition.hpp"
#include "ecgame/rational.hpp"

namespace ecgame {

/// Payoff vector ordered (x_1, ..., x_|U|, x_a).
class Allocation {
public:
  Allocation() = default;
  explicit Allocation(std::vector<Rational> payoffs);
  /// Zero payoffs for every user and `aggregator_share` for a.
  static Allocation aggregator_takes_all(int n_users, const Rational &aggregator_share);
  /// Every user gets `user_share`, the aggregator the remainder of `total`.
  static Allocation uniform_users(int n_users, const Rational &user_share, const Rational &total);

  int n_users() const noexcept { return static_cast<int>(payoffs_.size()) - 1; }
  int n_players() const noexcept { return static_cast<int>(payoffs_.size()); }

  const Rational &operator[](int player) const { return payoffs_.at(player); }
  Rational &operator[](int player) { return payoffs_.at(player); }
  const Rational &aggregator_share() const { return payoffs_.back(); }
  std::span<const Rational> payoffs() const noexcept { return payoffs_; }

  /// x(S); x(∅) = 0.
  Rational sum(const Coalition &s) const;
  Rational users_total() const;

  friend bool operator==(const Allocation &, const Allocation &) = default;

private:
  std::vector<Rational> payoffs_;
};

/// Veto TU game on N = U ∪ {a}: values are stored for every coalition that
/// contains the aggregator, indexed by the user bits of the coalition. Every
/// coalition without a is worth zero.
///
/// Immutable after construction.
class Game {
public:
  Game() = default;
  /// `values_with_aggregator[m]` is v({a} ∪ users(m)); size must be 2^n_users.
  Game(int n_users, std::vector<Rational> values_with_aggregator);
  static Game zero(int n_users);

  int n_users() const noexcept { return n_users_; }
  int n_players() const noexcept { return n_users_ + 1; }
  int aggregator() const noexcept { return n_users_; }

  /// v(S); 0 when a ∉ S.
  const Rational &value(const Coalition &s) const;
  const Rational &value_with_aggregator(PlayerMask users) const { return values_.at(users); }
  const Rational &grand_value() const { return values_.back(); }

  Coalition grand() const { return Coalition::grand(n_players()); }
  Coalition aggregator_only() const { return Coalition::aggregator_only(n_players()); }

  std::span<const Rational> table() const noexcept { return values_; }

  /// Same game restricted to the subgame on T (with a ∈ T), users renumbered
  /// in increasing index order.
  Game subgame(const Coalition &t) const;

private:
  void check_size(const Coalition &s) const;

  int n_users_ = 0;
  std::vector<Rational> values_{Rational(0)};
};

/// v(S).
Rational value(const Game &game, const Coalition &s);
/// M^v(i) = v(N) - v(N \ {i}).
Rational marginal_contribution(const Game &game, int player);
/// e(S, x) = v(S) - x(S).
Rational excess(const Game &game, const Allocation &x, const Coalition &s);

/// v(S) - c(S ∩ U) on every S ∋ a with at least two users; other entries
/// of `fee_free` are kept as they are.
Game apply_admission_fees(const Game &fee_free, std::span<const Rational> fees);

/// Throws ValidationError when the game exceeds `limit` players.
void require_players_at_most(const Game &game, int limit, const char *what);

} // namespace ecgame
