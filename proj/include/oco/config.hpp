#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace oco {

using ConfigMap = std::map<std::string, std::string>;

// One `key = value` per line; blank lines and lines starting with '#' are skipped.
ConfigMap parse_config(std::istream& in);
ConfigMap read_config_file(const std::string& path);

std::vector<std::string> split_list(const std::string& value);

}  // namespace oco
