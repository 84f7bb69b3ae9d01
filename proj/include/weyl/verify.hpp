#ifndef WEYL_VERIFY_HPP
#define WEYL_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace weyl {
namespace verify {

struct CheckResult {
  std::string name;
  std::vector<std::string> tags;
  bool pass = false;
  std::string detail;
  double millis = 0.0;
};

/// Runs every verification suite whose name or tag contains `filter`
/// (empty filter = all). Stochastic suites derive their streams from
/// `seed`.
std::vector<CheckResult> run(const std::string& filter = "", std::uint64_t seed = 42);

std::vector<std::string> suite_names();

}  // namespace verify
}  // namespace weyl

#endif  // WEYL_VERIFY_HPP
