#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ils {

// Reads a nested key/value config file. `.json` files are parsed as JSON; anything
// else as a TOML subset: `[section]` / `[a.b]` headers, `key = value` with numbers,
// booleans, quoted strings and flat arrays, and `#` comments.
nlohmann::json read_config_file(const std::filesystem::path& path);
nlohmann::json parse_toml_subset(const std::string& text, const std::string& origin = "<string>");

// Dotted key paths of every leaf in `j` ("weights.lambda_ils", ...).
std::vector<std::string> leaf_keys(const nlohmann::json& j);

// Sets the leaf at `dotted_key` from its textual form, converting to the type of the
// existing value. Throws ConfigError naming the key when it does not exist.
void set_leaf(nlohmann::json& j, const std::string& dotted_key, const std::string& text);

// Merges `overlay` into `base`; every overlay leaf must already exist in `base`.
void merge_known(nlohmann::json& base, const nlohmann::json& overlay, const std::string& prefix = "");

// Environment variable for a dotted key: PREFIX + upper-cased key with '.' -> '_'.
std::string env_name(const std::string& prefix, const std::string& dotted_key);

// Applies every PREFIX_* variable that names a leaf of `j`; returns the keys applied.
std::vector<std::string> apply_env_overrides(nlohmann::json& j, const std::string& prefix,
                                             const std::map<std::string, std::string>& env);
std::map<std::string, std::string> current_environment();

}  // namespace ils
