#pragma once

#include <string>

#include "sdpt/error.hpp"

namespace sdpt_test {

// Kind of the Error a callable throws, or "" when it does not throw.
template <typename F>
std::string error_kind(F&& f) {
  try {
    f();
  } catch (const sdpt::Error& e) {
    return e.kind();
  }
  return "";
}

}  // namespace sdpt_test
