#pragma once

#include <functional>
#include <json.hpp>
#include <string>
#include <vector>

namespace blockcheck::verify {

// One executed check: a claim, the inputs it was run on, the expected value
// (frozen table entry or law), and what the library actually computed.
struct CheckRecord {
  std::string id;
  std::string module_name;
  std::string claim;
  nlohmann::json inputs;
  nlohmann::json expected;
  nlohmann::json computed;
  bool pass = false;
};

// Runs the full check catalog, or just one module's slice when only_module
// is nonempty. Record order is deterministic.
std::vector<CheckRecord> run_checks(const std::string& only_module = "");

// Runs only the checks whose id satisfies the predicate; checks that do not
// match are never executed.
std::vector<CheckRecord> run_checks_matching(
    const std::function<bool(const std::string&)>& id_predicate);

std::vector<std::string> module_names();

}  // namespace blockcheck::verify
