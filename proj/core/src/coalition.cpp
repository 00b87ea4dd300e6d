#include "ecgame/coalition.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace ecgame {

int max_players() {
  if (const char *env = std::getenv("ECGAME_MAX_PLAYERS")) {
    char *end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0)
      return static_cast<int>(std::min<long>(value, kPlayerLimit));
  }
  return kPlayerLimit;
}

Coalition::Coalition(PlayerMask bits, int n_players) : bits_(bits), n_players_(n_players) {
  if (n_players < 1 || n_players > 31)
    throw std::out_of_range("coalition over " + std::to_string(n_players) + " players");
  if ((bits & ~full_mask()) != 0)
    throw std::out_of_range("coalition references a player outside N");
}

Coalition Coalition::grand(int n_players) {
  return Coalition((PlayerMask{1} << n_players) - 1, n_players);
}

Coalition Coalition::singleton(int player, int n_players) {
  if (player < 0 || player >= n_players)
    throw std::out_of_range("player index " + std::to_string(player) + " outside N");
  return Coalition(PlayerMask{1} << player, n_players);
}

Coalition Coalition::with_aggregator(PlayerMask users, int n_players) {
  return Coalition(users | (PlayerMask{1} << (n_players - 1)), n_players);
}

Coalition Coalition::of(std::initializer_list<int> players, int n_players) {
  Coalition c = empty(n_players);
  for (int p : players)
    c = c.with(p);
  return c;
}

bool Coalition::contains(int player) const {
  if (player < 0 || player >= n_players_)
    throw std::out_of_range("player index " + std::to_string(player) + " outside N");
  return (bits_ >> player) & 1U;
}

Coalition Coalition::with(int player) const {
  return Coalition(bits_ | singleton(player, n_players_).bits_, n_players_);
}

Coalition Coalition::without(int player) const {
  return Coalition(bits_ & ~singleton(player, n_players_).bits_, n_players_);
}

std::vector<int> Coalition::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (int p = 0; p < n_players_; ++p)
    if ((bits_ >> p) & 1U)
      out.push_back(p);
  return out;
}

std::string Coalition::to_string() const {
  std::vector<std::string> names;
  names.reserve(n_users());
  for (int i = 0; i < n_users(); ++i)
    names.push_back(std::to_string(i + 1));
  return to_string(names);
}

std::string Coalition::to_string(const std::vector<std::string> &user_names) const {
  std::string out = "{";
  bool first = true;
  auto emit = [&](const std::string &label) {
    if (!first)
      out += ',';
    out += label;
    first = false;
  };
  if (has_aggregator())
    emit("a");
  for (int i = 0; i < n_users(); ++i)
    if ((bits_ >> i) & 1U)
      emit(i < static_cast<int>(user_names.size()) ? user_names[i] : std::to_string(i + 1));
  return out + "}";
}

} // namespace ecgame
