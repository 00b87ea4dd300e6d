#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecgame/game.hpp"
#include "ecgame/sesg.hpp"

namespace ecgame::cli {

/// Parsed instance file: an SESG description or a raw value table.
struct Instance {
  std::optional<SesgInstance> sesg;
  Game game;
  std::vector<std::string> labels;  ///< external user ids, by player index
};

/// Reads a JSON (or YAML) instance. Errors are ValidationError with a
/// "origin:line: message" prefix.
Instance parse_instance_text(const std::string &text, const std::string &origin);
Instance parse_instance_file(const std::string &path);

/// JSON text of an SESG instance in the file format, newline terminated.
std::string render_instance(const SesgInstance &inst);

/// "a,1,3": the aggregator token first, then user labels by increasing id.
std::string coalition_key(const Coalition &s, const std::vector<std::string> &labels);

} // namespace ecgame::cli
