#pragma once

// Flat-JSON config loading with flag precedence: a key in the config file
// fills a parameter only when the same-named flag was not given on the
// command line. Unknown config keys are rejected so typos fail loudly.

#include <set>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

namespace vortexlab::cli {

struct CommonOptions {
  std::string config_path;
  std::string out_path;
  std::string format = "csv";
  long long seed = 0;  // reserved: no stochastic paths yet
};

void add_common_flags(CLI::App& sub, CommonOptions& o);

class ConfigMerge {
 public:
  explicit ConfigMerge(const std::string& path);

  void apply(const CLI::App& sub, const std::string& key, double& var);
  void apply(const CLI::App& sub, const std::string& key, int& var);
  void apply(const CLI::App& sub, const std::string& key, long long& var);
  void apply(const CLI::App& sub, const std::string& key, std::string& var);

  // Call after all apply() calls: throws on config keys nothing consumed.
  void finish() const;

 private:
  const nlohmann::json& fetch(const CLI::App& sub, const std::string& key, bool& use);

  nlohmann::json cfg_ = nlohmann::json::object();
  std::set<std::string> known_;
};

}  // namespace vortexlab::cli
