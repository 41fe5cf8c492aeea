#include "rps/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rps/error.hpp"

namespace rps {

namespace {

using Json = nlohmann::ordered_json;

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::int64_t require_integer(const Json& value, const std::string& what) {
  if (value.is_number_integer()) return value.get<std::int64_t>();
  fail(ErrorKind::ParseError, what + " must be an integer");
}

RawSet parse_set(const Json& node, const std::string& what) {
  if (!node.is_object()) fail(ErrorKind::ParseError, what + " must be an object");
  if (!node.contains("set") || !node["set"].is_array()) {
    fail(ErrorKind::ParseError, what + " needs a \"set\" array");
  }
  if (!node.contains("value")) {
    fail(ErrorKind::ParseError, what + " needs a \"value\"");
  }
  RawSet out;
  for (const Json& member : node["set"]) {
    out.members.push_back(
        static_cast<int>(require_integer(member, what + " member")));
  }
  out.value = require_integer(node["value"], what + " value");
  return out;
}

Rational parse_table_value(const Json& node, const std::string& what) {
  if (node.is_string()) return parse_ratio(node.get<std::string>());
  if (node.is_number_integer()) return Rational(node.get<std::int64_t>());
  fail(ErrorKind::ParseError, what + " must be a \"num/den\" string");
}

}  // namespace

RawInstance parse_instance_json(const std::string& text) {
  const Json root = parse_text(text);
  if (!root.is_object()) fail(ErrorKind::ParseError, "instance must be an object");
  if (!root.contains("players")) {
    fail(ErrorKind::ParseError, "missing \"players\"");
  }
  RawInstance raw;
  raw.players = require_integer(root["players"], "\"players\"");
  if (root.contains("rewards")) {
    if (!root["rewards"].is_array()) {
      fail(ErrorKind::ParseError, "\"rewards\" must be an array");
    }
    std::size_t i = 0;
    for (const Json& node : root["rewards"]) {
      raw.rewards.push_back(
          parse_set(node, "reward #" + std::to_string(++i)));
    }
  }
  if (root.contains("penalties")) {
    if (!root["penalties"].is_array()) {
      fail(ErrorKind::ParseError, "\"penalties\" must be an array");
    }
    std::size_t j = 0;
    for (const Json& node : root["penalties"]) {
      raw.penalties.push_back(
          parse_set(node, "penalty #" + std::to_string(++j)));
    }
  }
  return raw;
}

RawInstance load_instance_file(const std::string& path) {
  return parse_instance_json(read_file(path));
}

std::string instance_to_json(const RpsInstance& instance) {
  Json root;
  root["players"] = instance.player_count();
  root["rewards"] = Json::array();
  for (const WeightedSet& set : instance.rewards()) {
    root["rewards"].push_back({{"set", set.members}, {"value", set.weight}});
  }
  root["penalties"] = Json::array();
  for (const WeightedSet& set : instance.penalties()) {
    root["penalties"].push_back({{"set", set.members}, {"value", set.weight}});
  }
  return root.dump();
}

GameTable parse_game_table_json(const std::string& text) {
  const Json root = parse_text(text);
  if (!root.is_object()) fail(ErrorKind::ParseError, "table must be an object");
  if (!root.contains("players")) {
    fail(ErrorKind::ParseError, "missing \"players\"");
  }
  const std::int64_t players = require_integer(root["players"], "\"players\"");
  if (players < 1 || players > kMaxMaskPlayers) {
    fail(ErrorKind::InvalidTable,
         "unsupported player count " + std::to_string(players));
  }
  if (!root.contains("values") || !root["values"].is_object()) {
    fail(ErrorKind::ParseError, "missing \"values\" object");
  }

  const int n = static_cast<int>(players);
  const std::size_t size = std::size_t{1} << n;
  std::vector<Rational> values(size);
  std::vector<bool> seen(size, false);
  for (const auto& [key, node] : root["values"].items()) {
    const Coalition coalition = Coalition::parse(n, key);
    const Mask mask = coalition.mask();
    if (seen[mask]) {
      fail(ErrorKind::InvalidTable,
           "coalition {" + coalition.to_string() + "} listed twice");
    }
    seen[mask] = true;
    values[mask] = parse_table_value(node, "value of {" + key + "}");
  }
  for (std::size_t m = 0; m < size; ++m) {
    if (!seen[m]) {
      fail(ErrorKind::InvalidTable,
           "missing coalition {" +
               Coalition::from_mask(n, static_cast<Mask>(m)).to_string() +
               "}");
    }
  }
  return GameTable(n, std::move(values));
}

GameTable load_game_table_file(const std::string& path) {
  return parse_game_table_json(read_file(path));
}

std::string game_table_to_json(const GameTable& table) {
  Json values = Json::object();
  for (std::size_t m = 0; m < table.coalition_count(); ++m) {
    const Coalition coalition =
        Coalition::from_mask(table.player_count(), static_cast<Mask>(m));
    values[coalition.to_string()] =
        ratio_string(table.value(static_cast<Mask>(m)));
  }
  Json root;
  root["players"] = table.player_count();
  root["values"] = std::move(values);
  return root.dump();
}

std::string payments_to_json(const PaymentVector& payments) {
  Json list = Json::array();
  for (const Rational& q : payments) list.push_back(ratio_string(q));
  Json root;
  root["payments"] = std::move(list);
  return root.dump();
}

PaymentVector parse_payment_list(const std::string& comma_separated) {
  std::vector<Rational> values;
  if (!comma_separated.empty()) {
    std::size_t pos = 0;
    while (pos <= comma_separated.size()) {
      std::size_t comma = comma_separated.find(',', pos);
      if (comma == std::string::npos) comma = comma_separated.size();
      values.push_back(
          parse_ratio(std::string_view(comma_separated)
                          .substr(pos, comma - pos)));
      pos = comma + 1;
    }
  }
  return PaymentVector(std::move(values));
}

std::string core_check_to_json(const CoreCheck& check) {
  Json root;
  if (check.in_core) {
    root["status"] = "in_core";
  } else {
    root["status"] = "violation";
    root["property"] =
        check.violated == CoreCheck::Property::Efficiency ? "EFF" : "CR";
    root["coalition"] = check.witness.members();
    root["gap"] = ratio_string(check.gap);
  }
  return root.dump();
}

}  // namespace rps
