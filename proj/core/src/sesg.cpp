#include "ecgame/sesg.hpp"

#include <set>

#include "ecgame/errors.hpp"

namespace ecgame {

std::string_view to_string(Role role) {
  return role == Role::producer ? "producer" : "consumer";
}

SesgInstance::SesgInstance(Rational alpha, Rational beta, Rational gamma,
                           std::vector<SesgUser> users)
    : alpha_(alpha), beta_(beta), gamma_(gamma), users_(std::move(users)) {
  if (gamma_.sign() <= 0)
    throw ValidationError("gamma must be positive, got " + gamma_.to_string());
  if (exchange_coefficient().sign() <= 0)
    throw ValidationError("alpha + gamma - beta must be positive, got " +
                          exchange_coefficient().to_string());
  if (users_.size() + 1 > static_cast<std::size_t>(kPlayerLimit))
    throw ValidationError("instance has " + std::to_string(users_.size()) +
                          " users, exceeding the player cap");
  std::set<int> seen;
  for (std::size_t i = 0; i < users_.size(); ++i) {
    const SesgUser &u = users_[i];
    if (u.id <= 0)
      throw ValidationError("user id must be a positive integer, got " + std::to_string(u.id));
    if (!seen.insert(u.id).second)
      throw ValidationError("duplicate user id " + std::to_string(u.id));
    if (u.capacity.sign() <= 0)
      throw ValidationError("user " + std::to_string(u.id) + " has nonpositive capacity " +
                            u.capacity.to_string());
    if (u.fee.sign() < 0)
      throw ValidationError("user " + std::to_string(u.id) + " has negative fee " +
                            u.fee.to_string());
    (u.role == Role::producer ? producers_ : consumers_) |= PlayerMask{1} << i;
  }
}

SesgInstance SesgInstance::from_capacities(std::span<const Rational> producers,
                                           std::span<const Rational> consumers,
                                           std::span<const Rational> fees) {
  if (fees.size() != producers.size() + consumers.size())
    throw ValidationError("one fee per user is required");
  std::vector<SesgUser> users;
  int id = 1;
  for (const Rational &p : producers) {
    users.push_back({id, Role::producer, p, fees[id - 1]});
    ++id;
  }
  for (const Rational &q : consumers) {
    users.push_back({id, Role::consumer, q, fees[id - 1]});
    ++id;
  }
  return SesgInstance(Rational(1), Rational(1), Rational(1), std::move(users));
}

std::optional<int> SesgInstance::index_of(int id) const {
  for (std::size_t i = 0; i < users_.size(); ++i)
    if (users_[i].id == id)
      return static_cast<int>(i);
  return std::nullopt;
}

std::vector<Rational> SesgInstance::fees() const {
  std::vector<Rational> out;
  out.reserve(users_.size());
  for (const SesgUser &u : users_)
    out.push_back(u.fee);
  return out;
}

std::vector<std::string> SesgInstance::user_labels() const {
  std::vector<std::string> out;
  out.reserve(users_.size());
  for (const SesgUser &u : users_)
    out.push_back(std::to_string(u.id));
  return out;
}

Rational SesgInstance::capacity_sum(PlayerMask mask) const {
  Rational total(0);
  for (std::size_t i = 0; i < users_.size(); ++i)
    if ((mask >> i) & 1U)
      total += users_[i].capacity;
  return total;
}

Rational SesgInstance::fee_sum(PlayerMask mask) const {
  Rational total(0);
  for (std::size_t i = 0; i < users_.size(); ++i)
    if ((mask >> i) & 1U)
      total += users_[i].fee;
  return total;
}

Rational SesgInstance::max_fee() const {
  Rational best(0);
  for (const SesgUser &u : users_)
    best = max(best, u.fee);
  return best;
}

bool SesgInstance::fee_free() const {
  for (const SesgUser &u : users_)
    if (u.fee.sign() != 0)
      return false;
  return true;
}

Rational sesg_value(const SesgInstance &inst, const Coalition &s) {
  if (s.n_players() != inst.n_players())
    throw std::out_of_range("coalition references users outside the instance");
  if (!s.has_aggregator() || s.user_count() < 2)
    return Rational(0);
  const PlayerMask users = s.user_bits();
  Rational supply = inst.capacity_sum(users & inst.producer_mask());
  Rational demand = inst.capacity_sum(users & inst.consumer_mask());
  return inst.exchange_coefficient() * min(supply, demand) - inst.fee_sum(users);
}

Game build_game(const SesgInstance &inst) {
  if (inst.n_players() > max_players())
    throw ValidationError("instance has " + std::to_string(inst.n_players()) +
                          " players, cap is " + std::to_string(max_players()));
  const int n = inst.n_users();
  std::vector<Rational> values(std::size_t{1} << n);
  for_each_with_aggregator(n, [&](const Coalition &s) { values[s.user_bits()] = sesg_value(inst, s); });
  return Game(n, std::move(values));
}

SesgInstance strip_fees(const SesgInstance &inst) {
  std::vector<SesgUser> users(inst.users().begin(), inst.users().end());
  for (SesgUser &u : users)
    u.fee = Rational(0);
  return SesgInstance(inst.alpha(), inst.beta(), inst.gamma(), std::move(users));
}

FeeStructure fee_structure(const SesgInstance &inst) {
  return {build_game(strip_fees(inst)), inst.fees()};
}

} // namespace ecgame
