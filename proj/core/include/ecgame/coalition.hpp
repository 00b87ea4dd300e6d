#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ecgame {

using PlayerMask = std::uint32_t;

/// Hard ceiling of the enumeration algorithms (|N| = |U| + 1).
inline constexpr int kPlayerLimit = 24;

/// Effective player cap: kPlayerLimit unless ECGAME_MAX_PLAYERS lowers it
/// (values above kPlayerLimit are clamped).
int max_players();

/// A subset of N = U ∪ {a}. Users occupy bits 0..n_users-1 and the
/// aggregator sits at bit n_users.
class Coalition {
public:
  Coalition() = default;
  /// Throws std::out_of_range if bits reference players outside N.
  Coalition(PlayerMask bits, int n_players);

  static Coalition empty(int n_players) { return Coalition(0, n_players); }
  static Coalition grand(int n_players);
  static Coalition singleton(int player, int n_players);
  static Coalition aggregator_only(int n_players) { return singleton(n_players - 1, n_players); }
  /// S = users ∪ {a}.
  static Coalition with_aggregator(PlayerMask users, int n_players);
  static Coalition of(std::initializer_list<int> players, int n_players);

  PlayerMask bits() const noexcept { return bits_; }
  int n_players() const noexcept { return n_players_; }
  int n_users() const noexcept { return n_players_ - 1; }
  int aggregator() const noexcept { return n_players_ - 1; }

  bool contains(int player) const;
  bool has_aggregator() const noexcept { return (bits_ >> aggregator()) & 1U; }
  PlayerMask user_bits() const noexcept { return bits_ & user_mask(); }
  PlayerMask user_mask() const noexcept { return (PlayerMask{1} << n_users()) - 1; }

  int size() const noexcept { return std::popcount(bits_); }
  int user_count() const noexcept { return std::popcount(user_bits()); }
  bool is_empty() const noexcept { return bits_ == 0; }
  bool is_grand() const noexcept { return bits_ == full_mask(); }
  /// Nonempty and different from N.
  bool is_proper() const noexcept { return bits_ != 0 && bits_ != full_mask(); }

  Coalition with(int player) const;
  Coalition without(int player) const;
  Coalition complement() const { return Coalition(full_mask() & ~bits_, n_players_); }
  bool subset_of(const Coalition &other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  bool disjoint(const Coalition &other) const noexcept { return (bits_ & other.bits_) == 0; }

  Coalition operator|(const Coalition &rhs) const { return Coalition(bits_ | rhs.bits_, n_players_); }
  Coalition operator&(const Coalition &rhs) const { return Coalition(bits_ & rhs.bits_, n_players_); }
  Coalition operator-(const Coalition &rhs) const { return Coalition(bits_ & ~rhs.bits_, n_players_); }

  std::vector<int> members() const;

  /// "{a,1,4}" with 1-based user positions; `user_names` overrides the labels.
  std::string to_string() const;
  std::string to_string(const std::vector<std::string> &user_names) const;

  friend bool operator==(const Coalition &, const Coalition &) = default;
  friend bool operator<(const Coalition &lhs, const Coalition &rhs) noexcept {
    return lhs.bits_ < rhs.bits_;
  }

private:
  PlayerMask full_mask() const noexcept { return (PlayerMask{1} << n_players_) - 1; }

  PlayerMask bits_ = 0;
  int n_players_ = 1;
};

/// Calls fn(Coalition) for every S ⊆ N with a ∈ S, including N itself.
template <class Fn> void for_each_with_aggregator(int n_users, Fn &&fn) {
  const int n_players = n_users + 1;
  const PlayerMask count = PlayerMask{1} << n_users;
  for (PlayerMask users = 0; users < count; ++users)
    fn(Coalition::with_aggregator(users, n_players));
}

/// Calls fn(Coalition) for every nonempty S ⊆ U (the a-free proper coalitions).
template <class Fn> void for_each_without_aggregator(int n_users, Fn &&fn) {
  const int n_players = n_users + 1;
  const PlayerMask count = PlayerMask{1} << n_users;
  for (PlayerMask users = 1; users < count; ++users)
    fn(Coalition(users, n_players));
}

/// Calls fn(Coalition) for every S ⊆ N, including ∅ and N.
template <class Fn> void for_each_coalition(int n_players, Fn &&fn) {
  const PlayerMask count = PlayerMask{1} << n_players;
  for (PlayerMask bits = 0; bits < count; ++bits)
    fn(Coalition(bits, n_players));
}

} // namespace ecgame

template <> struct std::hash<ecgame::Coalition> {
  std::size_t operator()(const ecgame::Coalition &c) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{c.bits()} << 8) | unsigned(c.n_players()));
  }
};
