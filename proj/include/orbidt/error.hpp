#ifndef ORBIDT_ERROR_HPP
#define ORBIDT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace orbidt {

enum class errc {
  usage,
  arity_mismatch,
  zero_weight,
  bracket_vanishes,
  neutral_zero,
  pairing_failure,
  duality_violation,
  invalid_slicing,
  out_of_bound,
  domain_error,
  exp_domain,
  log_domain,
  non_kappa_content,
  division_by_zero,
  calabi_yau_violation,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace orbidt

#endif
