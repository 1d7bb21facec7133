#ifndef ORBIDT_TEST_HELPERS_HPP
#define ORBIDT_TEST_HELPERS_HPP

#include <optional>
#include <utility>

#include "orbidt/error.hpp"

namespace orbidt::testing {

template <class Fn>
std::optional<errc> thrown_code(Fn&& fn) {
  try {
    std::forward<Fn>(fn)();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace orbidt::testing

#endif
