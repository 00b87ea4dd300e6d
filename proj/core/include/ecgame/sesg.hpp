#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecgame/game.hpp"

namespace ecgame {

enum class Role { producer, consumer };

std::string_view to_string(Role role);

struct SesgUser {
  int id = 0;          ///< external identifier, any positive integer
  Role role = Role::producer;
  Rational capacity;   ///< p_i for producers, q_i for consumers
  Rational fee;        ///< admission fee c_i
};

/// Single time step energy sharing instance. Users are stored in a dense
/// order (their player index); ids are only kept for reporting.
class SesgInstance {
public:
  SesgInstance() = default;
  /// Validates: distinct positive ids, capacities > 0, fees >= 0, gamma > 0,
  /// alpha + gamma - beta > 0. Throws ValidationError otherwise.
  SesgInstance(Rational alpha, Rational beta, Rational gamma, std::vector<SesgUser> users);

  /// Producers (capacity p) then consumers (capacity q); ids 1, 2, ... in order,
  /// alpha + gamma - beta normalised to 1.
  static SesgInstance from_capacities(std::span<const Rational> producers,
                                      std::span<const Rational> consumers,
                                      std::span<const Rational> fees);

  const Rational &alpha() const noexcept { return alpha_; }
  const Rational &beta() const noexcept { return beta_; }
  const Rational &gamma() const noexcept { return gamma_; }
  /// alpha + gamma - beta.
  Rational exchange_coefficient() const { return alpha_ + gamma_ - beta_; }

  int n_users() const noexcept { return static_cast<int>(users_.size()); }
  int n_players() const noexcept { return n_users() + 1; }
  std::span<const SesgUser> users() const noexcept { return users_; }
  const SesgUser &user(int index) const { return users_.at(index); }

  /// Dense index of a user id, or nullopt.
  std::optional<int> index_of(int id) const;
  std::vector<Rational> fees() const;
  std::vector<std::string> user_labels() const;

  PlayerMask producer_mask() const noexcept { return producers_; }
  PlayerMask consumer_mask() const noexcept { return consumers_; }
  int producer_count() const noexcept { return std::popcount(producers_); }
  int consumer_count() const noexcept { return std::popcount(consumers_); }

  /// Sum of capacities over the users in `mask`.
  Rational capacity_sum(PlayerMask mask) const;
  Rational fee_sum(PlayerMask mask) const;
  Rational max_fee() const;
  bool fee_free() const;

private:
  Rational alpha_{1};
  Rational beta_{0};
  Rational gamma_{0};
  std::vector<SesgUser> users_;
  PlayerMask producers_ = 0;
  PlayerMask consumers_ = 0;
};

/// Closed-form characteristic function: for a ∈ S and |S ∩ U| >= 2,
/// (alpha+gamma-beta) * min(p(S ∩ U1), q(S ∩ U2)) - c(S ∩ U); 0 otherwise.
/// Applied to S = N as well.
Rational sesg_value(const SesgInstance &inst, const Coalition &s);

/// Tabulates sesg_value over every coalition containing a.
/// Throws ValidationError above max_players().
Game build_game(const SesgInstance &inst);

/// Same instance with every fee set to zero; build_game of it is v0.
SesgInstance strip_fees(const SesgInstance &inst);

/// Fee-free companion game together with the fees that turn it into v.
struct FeeStructure {
  Game fee_free;
  std::vector<Rational> fees;
};

FeeStructure fee_structure(const SesgInstance &inst);

} // namespace ecgame
