#include "ecgame_cli/report.hpp"

#include "ecgame_cli/instance_io.hpp"

namespace ecgame::cli {

namespace {

template <class T> Json optional_json(const std::optional<T> &value) {
  return value ? to_json(*value) : Json(nullptr);
}

std::string player_label(int player, int n_users, const std::vector<std::string> &labels) {
  return player == n_users ? "a" : labels.at(player);
}

Json coalitions_json(const std::vector<Coalition> &family, const std::vector<std::string> &labels) {
  Json out = Json::array();
  for (const Coalition &s : family)
    out.push_back(coalition_key(s, labels));
  return out;
}

} // namespace

Json to_json(const Rational &value) { return value.to_fraction_string(); }

Json to_json(const Allocation &x, const std::vector<std::string> &labels) {
  Json out = Json::object();
  for (int i = 0; i < x.n_players(); ++i)
    out[player_label(i, x.n_users(), labels)] = to_json(x[i]);
  return out;
}

Json to_json(const DualWeights &weights, const std::vector<std::string> &labels) {
  Json out = Json::object();
  for (const auto &[s, w] : weights)
    out[coalition_key(s, labels)] = to_json(w);
  return out;
}

Json properties_json(const Game &game, const PropertyReport &r, const std::vector<std::string> &labels) {
  auto key = [&](const Coalition &s) { return coalition_key(s, labels); };
  Json j;
  j["n_users"] = game.n_users();
  j["grand_value"] = to_json(game.grand_value());

  Json sa{{"holds", r.superadditive.holds}};
  if (r.superadditive.witness)
    sa["witness"] = {key(r.superadditive.witness->s), key(r.superadditive.witness->t)};
  j["superadditive"] = sa;

  Json mono{{"holds", r.monotonic.holds}};
  if (r.monotonic.witness)
    mono["witness"] = {{"coalition", key(r.monotonic.witness->s)},
                       {"player", player_label(r.monotonic.witness->player, game.n_users(), labels)}};
  j["monotonic"] = mono;

  if (r.convex) {
    Json cx{{"holds", r.convex->holds}};
    if (r.convex->witness)
      cx["witness"] = {key(r.convex->witness->s), key(r.convex->witness->t)};
    j["convex"] = cx;
  } else {
    j["convex"] = nullptr;
  }

  j["veto_set"] = key(r.veto_set);
  Json clan{{"applicable", r.clan.applicable}};
  clan["clan"] = r.clan.clan ? Json(key(*r.clan.clan)) : Json(nullptr);
  clan["big_boss"] =
      r.clan.big_boss ? Json(player_label(*r.clan.big_boss, game.n_users(), labels)) : Json(nullptr);
  j["clan"] = clan;

  Json bal{{"holds", r.balanced.holds}};
  if (r.balanced.witness)
    bal["witness"] = key(*r.balanced.witness);
  j["balanced"] = bal;
  j["totally_balanced"] = r.totally_balanced;
  j["egalitarian"] = {{"users_share_in_core", r.egalitarian.users_share_in_core},
                      {"egalitarian_in_core", r.egalitarian.egalitarian_in_core}};
  return j;
}

Json least_core_json(const LeastCoreReport &r, Method method, const std::vector<std::string> &labels) {
  auto key = [&](const Coalition &s) { return coalition_key(s, labels); };
  Json j;
  j["method"] = method == Method::formula ? "formula" : method == Method::lp ? "lp" : "both";
  j["balanced"] = r.balanced;

  if (method != Method::formula) {
    j["eps_star"] = to_json(r.eps_star);
  } else if (r.balanced || (r.exactness && r.exactness->exact)) {
    j["eps_star"] = to_json(r.hat.value);
  } else {
    j["eps_star"] = nullptr;
  }

  if (method != Method::lp) {
    j["eps_hat"] = to_json(r.hat.value);
    j["argmin"] = coalitions_json(r.hat.argmin, labels);
    j["s_hat"] = key(r.s_hat);
    j["eps_bar"] = to_json(r.eps_bar);
    if (r.balanced) {
      const FeeBounds &b = r.fee_bounds;
      j["bounds"] = {{"lower_mono", optional_json(b.lower_mono)},
                     {"monotone", b.monotone},
                     {"upper", optional_json(b.upper)},
                     {"upper_loose", optional_json(b.upper_loose)},
                     {"eps0_star", optional_json(b.eps0_star)},
                     {"sandwich_lower", optional_json(b.sandwich_lower)}};
      if (r.no_fee_bounds)
        j["bounds"]["fee_free"] = {{"lower", to_json(r.no_fee_bounds->lower)},
                                   {"upper", to_json(r.no_fee_bounds->upper)}};
    } else {
      j["bounds"] = {{"eps_tilde", to_json(r.unbalanced->eps_tilde)},
                     {"strict_lower", to_json(Rational(2) * r.unbalanced->eps_tilde)},
                     {"eps_bar", to_json(r.unbalanced->eps_bar)}};
      const Exactness &e = *r.exactness;
      Json ex{{"exact", e.exact}, {"s_hat", key(e.s_hat)}};
      ex["k"] = e.k ? Json(labels.at(*e.k)) : Json(nullptr);
      ex["violated"] = e.violated ? Json(key(*e.violated)) : Json(nullptr);
      if (e.x_check)
        ex["x_check"] = to_json(*e.x_check, labels);
      j["exactness"] = ex;
    }
    j["hat_certificate"] = {{"weights", to_json(r.hat_cert, labels)},
                            {"objective", to_json(r.hat_objective)}};
  }

  if (method != Method::formula) {
    j["primal_certificate"] = to_json(r.primal_cert, labels);
    j["dual_certificate"] = to_json(r.dual_cert, labels);
    j["pivots"] = r.pivots;
  }
  if (method == Method::both) {
    j["formula_exact"] = r.formula_exact;
    j["s_min"] = r.s_min ? Json(key(*r.s_min)) : Json(nullptr);
  }
  return j;
}

Json shares_json(const SharesReport &r, const std::vector<std::string> &labels) {
  auto key = [&](const Coalition &s) { return coalition_key(s, labels); };
  Json j;
  j["M_a"] = to_json(r.max_share);
  j["m_a"] = to_json(r.min_share);
  j["M_U"] = to_json(r.max_users);
  j["M_a_closed_form"] = optional_json(r.max_share_closed_form);
  j["s_min"] = r.s_min ? Json(key(*r.s_min)) : Json(nullptr);
  j["equal"] = r.lp_equal;
  if (r.equality) {
    j["equality"] = {{"equal", r.equality->equal},
                     {"intersection", key(r.equality->intersection)},
                     {"explanation", r.equality->explanation}};
  } else {
    j["equality"] = nullptr;
  }
  if (r.partition_bound) {
    j["partition_bound"] = {{"value", to_json(r.partition_bound->value)},
                            {"partition", coalitions_json(r.partition_bound->blocks, labels)},
                            {"tight", *r.partition_tight}};
    if (r.partition_dual_ok)
      j["partition_bound"]["dual_ok"] = *r.partition_dual_ok;
  } else {
    j["partition_bound"] = nullptr;
  }
  j["singleton_bound"] = to_json(r.singleton_bound.value);
  j["max_share_certificate"] = to_json(r.max_share_cert, labels);
  j["min_share_certificate"] = to_json(r.min_share_cert, labels);
  j["min_share_dual"] = to_json(r.min_share_dual, labels);
  return j;
}

Json verify_json(const VerifyReport &report) {
  Json j;
  j["ok"] = report.ok();
  j["passed"] = report.count(CheckStatus::passed);
  j["failed"] = report.count(CheckStatus::failed);
  j["skipped"] = report.count(CheckStatus::skipped);
  Json checks = Json::array();
  for (const CheckOutcome &c : report.checks)
    checks.push_back({{"name", c.name}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}});
  j["checks"] = checks;
  return j;
}

void print_human(std::ostream &out, const Json &report, int indent) {
  const std::string pad(indent, ' ');
  for (auto it = report.begin(); it != report.end(); ++it) {
    const Json &v = it.value();
    const std::string name = report.is_array() ? "-" : it.key() + ":";
    if (v.is_object() && !v.empty()) {
      out << pad << name << "\n";
      print_human(out, v, indent + 2);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << pad << name << "\n";
      print_human(out, v, indent + 2);
    } else if (v.is_string()) {
      out << pad << name << " " << v.get<std::string>() << "\n";
    } else if (v.is_array()) {
      std::string line;
      for (const Json &e : v)
        line += (line.empty() ? "" : " ") + (e.is_string() ? e.get<std::string>() : e.dump());
      out << pad << name << " [" << line << "]\n";
    } else {
      out << pad << name << " " << (v.is_null() ? "n/a" : v.dump()) << "\n";
    }
  }
}

} // namespace ecgame::cli
