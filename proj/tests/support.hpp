#ifndef CTK_TESTS_SUPPORT_HPP
#define CTK_TESTS_SUPPORT_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ctk/alphabet.hpp"
#include "ctk/stepseq.hpp"

namespace ctk_tests {

inline std::string load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string data_file(const std::string& name) {
  return std::string(CTK_DATA_DIR) + "/" + name;
}

/// The four-action alphabet used by most walkthrough tests; identical to
/// tests/data/walkthrough.alph.
inline const ctk::ComtraceAlphabet& walkthrough_alphabet() {
  static const ctk::ComtraceAlphabet alphabet = ctk::ComtraceAlphabet::validate({
      {"a", "b", "c", "d"},
      {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"a", "d"}, {"c", "d"}},
      {{"d", "a"}, {"c", "d"}, {"b", "c"}, {"a", "b"}, {"b", "a"}},
  });
  return alphabet;
}

inline ctk::StepSequence seq(const ctk::ComtraceAlphabet& alphabet, const std::string& text) {
  return ctk::parse_stepseq(alphabet, text);
}

/// Shorthand: parse against the walkthrough alphabet.
inline ctk::StepSequence seq(const std::string& text) {
  return ctk::parse_stepseq(walkthrough_alphabet(), text);
}

}  // namespace ctk_tests

#endif
