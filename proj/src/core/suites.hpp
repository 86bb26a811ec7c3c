#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gblx {

struct suite_report {
  std::string name;
  uint64_t seed = 0;
  long checked = 0;
  long failures = 0;
  std::string first_failure;  // empty when clean
  double elapsed_ms = 0;
};

// The nine property sweeps over the built-in corpus, in canonical order.
std::vector<std::string> suite_names();

// `filter` restricts the corpus to algebras whose name contains it; an
// unknown name is errc::not_found.  A filter that excludes everything
// yields checked == 0, which callers should treat as a usage error.
suite_report run_suite(const std::string& name, uint64_t seed, const std::string& filter = "");

}  // namespace gblx
