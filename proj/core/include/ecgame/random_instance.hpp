#pragma once

#include <cstdint>

#include "ecgame/sesg.hpp"

namespace ecgame {

struct GeneratorOptions {
  int producers = 2;
  int consumers = 2;
  int max_capacity = 10;  ///< capacities drawn from [1, max_capacity]
  int max_fee = 0;        ///< fees drawn from [0, max_fee]
  std::uint64_t seed = 0;
};

/// Deterministic SESG instance with alpha = beta = gamma = 1, producers first.
/// Throws ValidationError on nonsensical options.
SesgInstance random_instance(const GeneratorOptions &options);

} // namespace ecgame
