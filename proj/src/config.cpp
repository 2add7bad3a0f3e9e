#include "oco/config.hpp"

#include <fstream>
#include <istream>

#include "oco/errors.hpp"

namespace oco {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

ConfigMap parse_config(std::istream& in) {
  ConfigMap out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ContractError("config line " + std::to_string(lineno) + " is not 'key = value'");
    }
    const std::string key = trim(body.substr(0, eq));
    if (key.empty()) throw ContractError("config line " + std::to_string(lineno) + " has no key");
    out[key] = trim(body.substr(eq + 1));
  }
  return out;
}

ConfigMap read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config '" + path + "'");
  return parse_config(in);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    auto comma = value.find(',', start);
    if (comma == std::string::npos) comma = value.size();
    const std::string item = trim(value.substr(start, comma - start));
    if (!item.empty()) out.push_back(item);
    start = comma + 1;
  }
  return out;
}

}  // namespace oco
