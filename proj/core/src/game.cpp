#include "ecgame/game.hpp"

#include <string>

#include "ecgame/errors.hpp"

namespace ecgame {

Allocation::Allocation(std::vector<Rational> payoffs) : payoffs_(std::move(payoffs)) {
  if (payoffs_.empty())
    throw std::invalid_argument("allocation needs at least the aggregator payoff");
}

Allocation Allocation::aggregator_takes_all(int n_users, const Rational &aggregator_share) {
  std::vector<Rational> p(static_cast<std::size_t>(n_users) + 1, Rational(0));
  p.back() = aggregator_share;
  return Allocation(std::move(p));
}

Allocation Allocation::uniform_users(int n_users, const Rational &user_share,
                                     const Rational &total) {
  std::vector<Rational> p(static_cast<std::size_t>(n_users) + 1, user_share);
  p.back() = total - user_share * Rational(n_users);
  return Allocation(std::move(p));
}

Rational Allocation::sum(const Coalition &s) const {
  if (s.n_players() != n_players())
    throw std::out_of_range("coalition and allocation disagree on |N|");
  Rational total(0);
  for (int p = 0; p < n_players(); ++p)
    if ((s.bits() >> p) & 1U)
      total += payoffs_[p];
  return total;
}

Rational Allocation::users_total() const {
  Rational total(0);
  for (int i = 0; i < n_users(); ++i)
    total += payoffs_[i];
  return total;
}

Game::Game(int n_users, std::vector<Rational> values_with_aggregator)
    : n_users_(n_users), values_(std::move(values_with_aggregator)) {
  if (n_users < 0 || n_users + 1 > kPlayerLimit)
    throw ValidationError("game with " + std::to_string(n_users + 1) + " players exceeds the cap of " +
                          std::to_string(kPlayerLimit));
  if (values_.size() != (std::size_t{1} << n_users))
    throw ValidationError("value table has " + std::to_string(values_.size()) +
                          " entries, expected " + std::to_string(std::size_t{1} << n_users));
}

Game Game::zero(int n_users) {
  return Game(n_users, std::vector<Rational>(std::size_t{1} << n_users, Rational(0)));
}

void Game::check_size(const Coalition &s) const {
  if (s.n_players() != n_players())
    throw std::out_of_range("coalition over " + std::to_string(s.n_players()) +
                            " players used with a game of " + std::to_string(n_players()));
}

const Rational &Game::value(const Coalition &s) const {
  static const Rational kZero(0);
  check_size(s);
  if (!s.has_aggregator())
    return kZero;
  return values_[s.user_bits()];
}

Game Game::subgame(const Coalition &t) const {
  check_size(t);
  if (!t.has_aggregator())
    throw std::invalid_argument("subgame must contain the aggregator");
  std::vector<int> users;
  for (int i = 0; i < n_users_; ++i)
    if (t.contains(i))
      users.push_back(i);
  const int k = static_cast<int>(users.size());
  std::vector<Rational> values(std::size_t{1} << k);
  for (PlayerMask m = 0; m < (PlayerMask{1} << k); ++m) {
    PlayerMask original = 0;
    for (int j = 0; j < k; ++j)
      if ((m >> j) & 1U)
        original |= PlayerMask{1} << users[j];
    values[m] = values_[original];
  }
  return Game(k, std::move(values));
}

Rational value(const Game &game, const Coalition &s) { return game.value(s); }

Rational marginal_contribution(const Game &game, int player) {
  const Coalition grand = game.grand();
  return game.grand_value() - game.value(grand.without(player));
}

Rational excess(const Game &game, const Allocation &x, const Coalition &s) {
  return game.value(s) - x.sum(s);
}

Game apply_admission_fees(const Game &fee_free, std::span<const Rational> fees) {
  const int n = fee_free.n_users();
  if (static_cast<int>(fees.size()) != n)
    throw ValidationError("fee vector length differs from the number of users");
  std::vector<Rational> values(fee_free.table().begin(), fee_free.table().end());
  for (PlayerMask m = 0; m < values.size(); ++m) {
    if (std::popcount(m) < 2)
      continue;
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1U)
        values[m] -= fees[i];
  }
  return Game(n, std::move(values));
}

void require_players_at_most(const Game &game, int limit, const char *what) {
  if (game.n_players() > limit)
    throw ValidationError(std::string(what) + " supports at most " + std::to_string(limit) +
                          " players, game has " + std::to_string(game.n_players()));
}

} // namespace ecgame
