#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace gbds {

  //! A named family of checks with a count and the first few failures.
  struct CheckFamily {
    explicit CheckFamily(std::string n) : name(std::move(n)) {}

    std::string              name;
    std::size_t              checked = 0;
    std::vector<std::string> failures;

    void fail(std::string msg) {
      if (failures.size() < 20) {
        failures.push_back(std::move(msg));
      } else if (failures.size() == 20) {
        failures.push_back("…");
      }
    }
    bool passed() const noexcept {
      return failures.empty();
    }
  };

  struct SuiteReport {
    std::string              name;
    std::vector<CheckFamily> families;

    bool passed() const {
      return std::all_of(families.begin(), families.end(), [](auto const& f) { return f.passed(); });
    }
  };

}  // namespace gbds
