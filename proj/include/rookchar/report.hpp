#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rookchar {

  // Outcome of an exhaustive property run. Only the first few violations
  // keep their detail text.
  struct SuiteReport {
    static constexpr std::size_t max_details = 20;

    std::string              name;
    std::size_t              checked    = 0;
    std::size_t              violations = 0;
    std::vector<std::string> details;

    bool passed() const noexcept {
      return violations == 0;
    }

    void record(bool ok, std::string const& detail_if_bad) {
      ++checked;
      if (!ok) {
        ++violations;
        if (details.size() < max_details) {
          details.push_back(detail_if_bad);
        }
      }
    }

    template <typename MakeDetail>
    void record_lazy(bool ok, MakeDetail&& make_detail) {
      ++checked;
      if (!ok) {
        ++violations;
        if (details.size() < max_details) {
          details.push_back(make_detail());
        }
      }
    }

    std::string summary() const {
      return name + ": " + (passed() ? "pass" : "FAIL") + " (" + std::to_string(checked)
             + " checked, " + std::to_string(violations) + " violations)";
    }
  };

}  // namespace rookchar
