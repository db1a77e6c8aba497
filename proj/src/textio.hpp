#ifndef CTK_SRC_TEXTIO_HPP
#define CTK_SRC_TEXTIO_HPP

// Internal helpers for the line-oriented text formats.

#include <string>
#include <string_view>
#include <vector>

namespace ctk::detail {

struct Line {
  int number = 0;  // 1-based, for diagnostics
  std::vector<std::string> tokens;
};

/// Splits text into lines, strips '#' comments, tokenises on whitespace and
/// drops blank lines.
std::vector<Line> tokenize_lines(std::string_view text);

std::string where(const Line& line);

}  // namespace ctk::detail

#endif
