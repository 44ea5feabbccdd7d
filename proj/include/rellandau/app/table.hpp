#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace rellandau::app {

using Cell = std::variant<long long, double, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

// Header row plus one line per row, '\n' terminated. Cells containing commas,
// quotes or newlines are quoted.
std::string to_csv(const Table& table);

nlohmann::ordered_json to_json(const Table& table);

std::uint64_t fnv1a64(std::string_view bytes);
std::string checksum(std::string_view bytes);

struct RunManifest {
  std::string command;
  std::vector<std::string> arguments;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::string version;
  std::string checksum;

  nlohmann::ordered_json to_json() const;
};

}  // namespace rellandau::app
