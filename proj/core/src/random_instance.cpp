#include "ecgame/random_instance.hpp"

#include <random>

#include "ecgame/errors.hpp"

namespace ecgame {

SesgInstance random_instance(const GeneratorOptions &options) {
  if (options.producers < 0 || options.consumers < 0)
    throw ValidationError("user counts must be nonnegative");
  if (options.max_capacity < 1)
    throw ValidationError("max capacity must be at least 1");
  if (options.max_fee < 0)
    throw ValidationError("max fee must be nonnegative");
  if (options.producers + options.consumers + 1 > max_players())
    throw ValidationError("too many users for the player cap");

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> capacity(1, options.max_capacity);
  std::uniform_int_distribution<int> fee(0, options.max_fee);

  std::vector<SesgUser> users;
  const int total = options.producers + options.consumers;
  for (int i = 0; i < total; ++i) {
    SesgUser u;
    u.id = i + 1;
    u.role = i < options.producers ? Role::producer : Role::consumer;
    u.capacity = Rational(capacity(rng));
    users.push_back(u);
  }
  for (SesgUser &u : users)
    u.fee = Rational(fee(rng));
  return SesgInstance(Rational(1), Rational(1), Rational(1), std::move(users));
}

} // namespace ecgame
