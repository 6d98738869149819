#include "run_config.hpp"

#include <fstream>
#include <stdexcept>

namespace vortexlab::cli {

void add_common_flags(CLI::App& sub, CommonOptions& o) {
  sub.add_option("--config", o.config_path, "Flat JSON config file; flags override its keys");
  sub.add_option("--out", o.out_path, "Output path (stdout when omitted)");
  sub.add_option("--format", o.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub.add_option("--seed", o.seed, "Reserved; accepted and ignored");
}

ConfigMerge::ConfigMerge(const std::string& path) {
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
  try {
    in >> cfg_;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("config: '" + path + "' is not valid JSON: " + e.what());
  }
  if (!cfg_.is_object()) throw std::runtime_error("config: top level must be a JSON object");
}

const nlohmann::json& ConfigMerge::fetch(const CLI::App& sub, const std::string& key,
                                         bool& use) {
  known_.insert(key);
  static const nlohmann::json null;
  if (!cfg_.contains(key)) {
    use = false;
    return null;
  }
  // A flag given on the command line wins over the config value.
  use = sub.get_option("--" + key)->count() == 0;
  return cfg_.at(key);
}

void ConfigMerge::apply(const CLI::App& sub, const std::string& key, double& var) {
  bool use = false;
  const auto& v = fetch(sub, key, use);
  if (!use) return;
  if (!v.is_number()) throw std::runtime_error("config: key '" + key + "' must be a number");
  var = v.get<double>();
}

void ConfigMerge::apply(const CLI::App& sub, const std::string& key, int& var) {
  bool use = false;
  const auto& v = fetch(sub, key, use);
  if (!use) return;
  if (!v.is_number_integer())
    throw std::runtime_error("config: key '" + key + "' must be an integer");
  var = v.get<int>();
}

void ConfigMerge::apply(const CLI::App& sub, const std::string& key, long long& var) {
  bool use = false;
  const auto& v = fetch(sub, key, use);
  if (!use) return;
  if (!v.is_number_integer())
    throw std::runtime_error("config: key '" + key + "' must be an integer");
  var = v.get<long long>();
}

void ConfigMerge::apply(const CLI::App& sub, const std::string& key, std::string& var) {
  bool use = false;
  const auto& v = fetch(sub, key, use);
  if (!use) return;
  if (!v.is_string()) throw std::runtime_error("config: key '" + key + "' must be a string");
  var = v.get<std::string>();
}

void ConfigMerge::finish() const {
  for (const auto& item : cfg_.items())
    if (!known_.count(item.key()))
      throw std::runtime_error("config: unknown key '" + item.key() + "' for this subcommand");
}

}  // namespace vortexlab::cli
