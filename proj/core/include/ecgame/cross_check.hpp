#pragma once

#include <string>
#include <vector>

#include "ecgame/game.hpp"
#include "ecgame/sesg.hpp"

namespace ecgame {

enum class CheckStatus { passed, failed, skipped };

std::string_view to_string(CheckStatus status);

struct CheckOutcome {
  std::string name;
  CheckStatus status = CheckStatus::passed;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckOutcome> checks;

  bool ok() const;
  int count(CheckStatus status) const;
};

/// Runs every closed form against its brute-force or LP counterpart.
/// `inst`, when given, must be the instance the game was built from and
/// enables the SESG-specific checks. Size-guarded checks are skipped.
VerifyReport verify_game(const Game &game, const SesgInstance *inst = nullptr);

} // namespace ecgame
