#include "ctk/errors.hpp"

namespace ctk {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::duplicate_action: return "DuplicateAction";
    case Errc::reflexive_pair: return "ReflexivePair";
    case Errc::ser_not_in_sim: return "SerNotInSim";
    case Errc::unknown_action: return "UnknownAction";
    case Errc::parse_error: return "ParseError";
    case Errc::not_a_step: return "NotAStep";
    case Errc::alphabet_mismatch: return "AlphabetMismatch";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::not_indivisible: return "NotIndivisible";
    case Errc::already_indivisible: return "AlreadyIndivisible";
    case Errc::independent_pair: return "IndependentPair";
    case Errc::bottom_on_non_ssm_pair: return "BottomOnNonSsmPair";
    case Errc::empty_possible_set: return "EmptyPossibleSet";
    case Errc::not_allowed_step: return "NotAllowedStep";
    case Errc::unknown_node: return "UnknownNode";
    case Errc::duplicate_node: return "DuplicateNode";
    case Errc::step_not_enabled: return "StepNotEnabled";
    case Errc::not_radical: return "NotRadical";
  }
  return "Error";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace ctk
