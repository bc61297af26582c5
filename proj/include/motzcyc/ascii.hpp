#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "motzcyc/errors.hpp"
#include "motzcyc/path.hpp"

namespace motzcyc {

// Draws the path with one text row per unit of height: a U step from height h
// prints '/' on row h, a D step landing on height h prints '\' on row h, an L
// step at height h prints '_' on row h. Rows are emitted top-down and
// right-stripped, so e.g. "ULUDLD" renders as the two lines " _/\_" and
// "/    \" (top row first). The drawing is information-preserving;
// read_ascii inverts it exactly.
inline std::string render_ascii(const MotzkinPath& m) {
  const int n = m.size();
  if (n == 0) return "";
  int max_row = 0;
  std::vector<int> row(static_cast<std::size_t>(n));
  int h = 0;
  for (int i = 0; i < n; ++i) {
    const Step s = m.steps()[static_cast<std::size_t>(i)];
    row[static_cast<std::size_t>(i)] = (s == Step::Down) ? h - 1 : h;
    max_row = std::max(max_row, row[static_cast<std::size_t>(i)]);
    h += rise(s);
  }
  std::vector<std::string> lines(static_cast<std::size_t>(max_row) + 1,
                                 std::string(static_cast<std::size_t>(n), ' '));
  for (int i = 0; i < n; ++i) {
    const Step s = m.steps()[static_cast<std::size_t>(i)];
    const char glyph = s == Step::Up ? '/' : (s == Step::Down ? '\\' : '_');
    // lines[0] is the top row (height max_row).
    lines[static_cast<std::size_t>(max_row - row[static_cast<std::size_t>(i)])]
         [static_cast<std::size_t>(i)] = glyph;
  }
  std::string out;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    std::string& line = lines[li];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    if (li) out.push_back('\n');
    out += line;
  }
  return out;
}

// Inverse of render_ascii. Accepts trailing spaces on lines and trailing
// newlines; anything structurally off (stray glyph, wrong height, two glyphs
// in one column) is an error.
inline MotzkinPath read_ascii(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == ' '))
    text.remove_suffix(1);
  if (text.empty()) return MotzkinPath();

  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  for (auto& line : lines)
    while (!line.empty() && line.back() == ' ') line.remove_suffix(1);

  const int rows = static_cast<int>(lines.size());
  std::size_t width = 0;
  for (auto line : lines) width = std::max(width, line.size());

  std::vector<Step> steps;
  steps.reserve(width);
  int h = 0;
  for (std::size_t col = 0; col < width; ++col) {
    char glyph = 0;
    int glyph_row = -1;  // height row, 0 = bottom line
    for (int li = 0; li < rows; ++li) {
      const char c = col < lines[static_cast<std::size_t>(li)].size()
                         ? lines[static_cast<std::size_t>(li)][col]
                         : ' ';
      if (c == ' ') continue;
      if (glyph != 0)
        throw Error("malformed drawing: column " + std::to_string(col + 1) +
                    " holds more than one stroke");
      glyph = c;
      glyph_row = rows - 1 - li;
    }
    if (glyph == 0)
      throw Error("malformed drawing: column " + std::to_string(col + 1) +
                  " holds no stroke");
    Step s;
    int expected_row;
    switch (glyph) {
      case '/': s = Step::Up; expected_row = h; break;
      case '\\': s = Step::Down; expected_row = h - 1; break;
      case '_': s = Step::Level; expected_row = h; break;
      default:
        throw InvalidCharacterError(static_cast<int>(col) + 1, glyph);
    }
    if (glyph_row != expected_row)
      throw Error("malformed drawing: stroke in column " +
                  std::to_string(col + 1) + " sits at the wrong height");
    steps.push_back(s);
    h += rise(s);
  }
  return MotzkinPath(std::move(steps));
}

}  // namespace motzcyc
