#include "ecgame_cli/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>
#include <yaml-cpp/yaml.h>

#include "ecgame/errors.hpp"

namespace ecgame::cli {

namespace {

class Reader {
public:
  explicit Reader(std::string origin) : origin_(std::move(origin)) {}

  [[noreturn]] void fail(const YAML::Node &node, const std::string &message) const {
    const YAML::Mark mark = node.Mark();
    std::string where = origin_;
    if (mark.line >= 0)
      where += ":" + std::to_string(mark.line + 1);
    throw ValidationError(where + ": " + message);
  }

  const YAML::Node field(const YAML::Node &map, const char *key) const {
    const YAML::Node node = map[key];
    if (!node)
      fail(map, std::string("missing field '") + key + "'");
    return node;
  }

  std::string scalar(const YAML::Node &node, const std::string &what) const {
    if (!node.IsScalar())
      fail(node, what + " must be a scalar");
    return node.Scalar();
  }

  Rational rational(const YAML::Node &node, const std::string &what) const {
    const std::string text = scalar(node, what);
    try {
      return Rational::parse(text);
    } catch (const std::exception &e) {
      fail(node, what + " '" + text + "' is not an integer or num/den rational");
    }
  }

  int integer(const YAML::Node &node, const std::string &what) const {
    const std::string text = scalar(node, what);
    try {
      std::size_t used = 0;
      const int value = std::stoi(text, &used);
      if (used == text.size())
        return value;
    } catch (const std::exception &) {
    }
    fail(node, what + " '" + text + "' is not an integer");
  }

private:
  std::string origin_;
};

Instance parse_sesg(const Reader &r, const YAML::Node &root) {
  auto coefficient = [&](const char *key, int fallback) {
    const YAML::Node node = root[key];
    return node ? r.rational(node, key) : Rational(fallback);
  };
  const Rational alpha = coefficient("alpha", 1);
  const Rational beta = coefficient("beta", 1);
  const Rational gamma = coefficient("gamma", 1);

  const YAML::Node list = r.field(root, "users");
  if (!list.IsSequence())
    r.fail(list, "'users' must be a list");
  std::vector<SesgUser> users;
  std::set<int> ids;
  for (const YAML::Node &entry : list) {
    if (!entry.IsMap())
      r.fail(entry, "each user must be an object");
    SesgUser u;
    u.id = r.integer(r.field(entry, "id"), "user id");
    if (u.id <= 0)
      r.fail(entry["id"], "user id must be a positive integer");
    if (!ids.insert(u.id).second)
      r.fail(entry["id"], "duplicate user id " + std::to_string(u.id));
    const std::string role = r.scalar(r.field(entry, "role"), "role");
    if (role == "producer")
      u.role = Role::producer;
    else if (role == "consumer")
      u.role = Role::consumer;
    else
      r.fail(entry["role"], "role must be 'producer' or 'consumer', got '" + role + "'");
    u.capacity = r.rational(r.field(entry, "capacity"), "capacity");
    if (u.capacity.sign() <= 0)
      r.fail(entry["capacity"], "capacity must be positive");
    u.fee = entry["fee"] ? r.rational(entry["fee"], "fee") : Rational(0);
    if (u.fee.sign() < 0)
      r.fail(entry["fee"], "fee must be nonnegative");
    users.push_back(u);
  }

  Instance out;
  try {
    out.sesg = SesgInstance(alpha, beta, gamma, std::move(users));
  } catch (const ValidationError &e) {
    r.fail(root, e.what());
  }
  out.labels = out.sesg->user_labels();
  out.game = build_game(*out.sesg);
  return out;
}

Instance parse_table(const Reader &r, const YAML::Node &root) {
  const YAML::Node size = r.field(root, "n_users");
  const int n = r.integer(size, "n_users");
  if (n < 0 || n + 1 > max_players())
    r.fail(size, "n_users must be between 0 and " + std::to_string(max_players() - 1));
  const YAML::Node values = r.field(root, "values");
  if (!values.IsMap())
    r.fail(values, "'values' must be an object");

  std::map<PlayerMask, Rational> table;
  for (const auto &kv : values) {
    const std::string key = r.scalar(kv.first, "coalition key");
    PlayerMask users = 0;
    bool aggregator = false;
    std::stringstream tokens(key);
    std::string token;
    while (std::getline(tokens, token, ',')) {
      token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
      if (token == "a") {
        if (aggregator)
          r.fail(kv.first, "coalition key '" + key + "' repeats 'a'");
        aggregator = true;
        continue;
      }
      int id = 0;
      try {
        std::size_t used = 0;
        id = std::stoi(token, &used);
        if (used != token.size())
          id = 0;
      } catch (const std::exception &) {
      }
      if (id < 1 || id > n)
        r.fail(kv.first, "coalition key '" + key + "' has unknown user '" + token + "'");
      const PlayerMask bit = PlayerMask{1} << (id - 1);
      if (users & bit)
        r.fail(kv.first, "coalition key '" + key + "' repeats user " + token);
      users |= bit;
    }
    if (!aggregator)
      r.fail(kv.first, "coalition key '" + key + "' lacks the aggregator 'a'");
    if (table.count(users))
      r.fail(kv.first, "coalition key '" + key + "' defined twice");
    table.emplace(users, r.rational(kv.second, "value of " + key));
  }

  std::vector<Rational> dense(std::size_t{1} << n);
  for (PlayerMask users = 0; users < dense.size(); ++users) {
    auto it = table.find(users);
    if (it == table.end())
      r.fail(values, "missing coalition value " +
                         coalition_key(Coalition::with_aggregator(users, n + 1), {}));
    dense[users] = it->second;
  }
  Instance out;
  out.game = Game(n, std::move(dense));
  for (int i = 1; i <= n; ++i)
    out.labels.push_back(std::to_string(i));
  return out;
}

} // namespace

Instance parse_instance_text(const std::string &text, const std::string &origin) {
  Reader r(origin);
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception &e) {
    throw ValidationError(origin + ":" + std::to_string(e.mark.line + 1) + ": " + e.msg);
  }
  if (!root.IsMap())
    r.fail(root, "instance must be an object");
  const std::string kind = r.scalar(r.field(root, "kind"), "kind");
  if (kind == "sesg")
    return parse_sesg(r, root);
  if (kind == "table")
    return parse_table(r, root);
  r.fail(root["kind"], "kind must be 'sesg' or 'table', got '" + kind + "'");
}

Instance parse_instance_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance_text(buffer.str(), path);
}

std::string render_instance(const SesgInstance &inst) {
  nlohmann::ordered_json j;
  j["kind"] = "sesg";
  j["alpha"] = inst.alpha().to_string();
  j["beta"] = inst.beta().to_string();
  j["gamma"] = inst.gamma().to_string();
  j["users"] = nlohmann::ordered_json::array();
  for (const SesgUser &u : inst.users())
    j["users"].push_back({{"id", u.id},
                          {"role", std::string(to_string(u.role))},
                          {"capacity", u.capacity.to_string()},
                          {"fee", u.fee.to_string()}});
  return j.dump(2) + "\n";
}

std::string coalition_key(const Coalition &s, const std::vector<std::string> &labels) {
  std::vector<std::pair<long long, std::string>> members;
  for (int i = 0; i < s.n_users(); ++i) {
    if (!s.contains(i))
      continue;
    const std::string label = i < static_cast<int>(labels.size()) ? labels[i] : std::to_string(i + 1);
    members.emplace_back(std::stoll(label), label);
  }
  std::sort(members.begin(), members.end());
  std::string out = s.has_aggregator() ? "a" : "";
  for (const auto &[id, label] : members)
    out += (out.empty() ? "" : ",") + label;
  return out;
}

} // namespace ecgame::cli
