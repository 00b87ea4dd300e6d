#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ecgame/cross_check.hpp"
#include "ecgame/least_core.hpp"
#include "ecgame/properties.hpp"
#include "ecgame/shares.hpp"

namespace ecgame::cli {

using Json = nlohmann::ordered_json;

enum class Method { formula, lp, both };

/// Rationals are rendered as "num/den" strings, coalitions as "a,1,3" keys.
Json to_json(const Rational &value);
Json to_json(const Allocation &x, const std::vector<std::string> &labels);
Json to_json(const DualWeights &weights, const std::vector<std::string> &labels);

Json properties_json(const Game &game, const PropertyReport &report,
                     const std::vector<std::string> &labels);
/// Formula-only fields are filled for Method::formula and Method::both, LP
/// fields for Method::lp and Method::both.
Json least_core_json(const LeastCoreReport &report, Method method,
                     const std::vector<std::string> &labels);
Json shares_json(const SharesReport &report, const std::vector<std::string> &labels);
Json verify_json(const VerifyReport &report);

/// Indented "key: value" rendering of a report.
void print_human(std::ostream &out, const Json &report, int indent = 0);

} // namespace ecgame::cli
