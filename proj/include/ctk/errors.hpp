#ifndef CTK_ERRORS_HPP
#define CTK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ctk {

/// Failure categories surfaced by the library.  The CLI maps these to exit
/// code 2; NotRealizable is a result value, not an Error.
enum class Errc {
  duplicate_action,
  reflexive_pair,
  ser_not_in_sim,
  unknown_action,
  parse_error,
  not_a_step,
  alphabet_mismatch,
  cap_exceeded,
  not_indivisible,
  already_indivisible,
  independent_pair,
  bottom_on_non_ssm_pair,
  empty_possible_set,
  not_allowed_step,
  unknown_node,
  duplicate_node,
  step_not_enabled,
  not_radical,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace ctk

#endif
