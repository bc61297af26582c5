#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "motzcyc/descent_set.hpp"
#include "motzcyc/errors.hpp"
#include "motzcyc/shape.hpp"

namespace motzcyc {

// How SkewTableau::parse should read dotless text (text with '.' cells is
// always explicit). Auto tries the three-row-strip reading first — that is
// the native shape of this domain — and falls back to a left-justified
// straight shape.
enum class ShapeHint { Auto, Straight, Strip };

// A standard Young tableau of skew shape: entries 1..n, rows increase left to
// right, columns increase top to bottom. Entries are stored per row, filled
// cells only, left to right.
//
// Text form: rows are '|'-separated, cells comma-separated. Three-row-strip
// and straight shapes print filled cells only ("2,5|3,6|1,4"); any other
// skew shape prints its inner cells as dots (".,.,1,4,7|2,3,6,8|5,9") so the
// shape survives the round trip.
class SkewTableau {
 public:
  SkewTableau() = default;

  SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows)
      : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.rows())
      throw ShapeError("tableau has " + std::to_string(rows_.size()) +
                       " rows, shape has " + std::to_string(shape_.rows()));
    const int n = shape_.cells();
    for (int r = 1; r <= shape_.rows(); ++r)
      if (static_cast<int>(row(r).size()) != shape_.row_cells(r))
        throw ShapeError("row " + std::to_string(r) + " holds " +
                         std::to_string(row(r).size()) + " entries, shape wants " +
                         std::to_string(shape_.row_cells(r)));
    // Entries must be exactly 1..n.
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& entries : rows_)
      for (int v : entries) {
        if (v < 1 || v > n)
          throw NotStandardError("entry " + std::to_string(v) +
                                 " outside 1.." + std::to_string(n));
        if (seen[static_cast<std::size_t>(v)]++)
          throw NotStandardError("entry " + std::to_string(v) + " repeats");
      }
    // Rows increase (entries are stored adjacently), columns increase.
    for (int r = 1; r <= shape_.rows(); ++r) {
      const auto& entries = row(r);
      for (std::size_t j = 1; j < entries.size(); ++j)
        if (entries[j - 1] >= entries[j])
          throw NotStandardError("row " + std::to_string(r) +
                                 " does not increase");
    }
    for (int r = 1; r < shape_.rows(); ++r)
      for (int c = shape_.inner(r + 1) + 1; c <= shape_.outer(r + 1); ++c)
        if (shape_.contains(r, c) && at(r, c) >= at(r + 1, c))
          throw NotStandardError("column " + std::to_string(c) +
                                 " does not increase");
  }

  const SkewShape& shape() const { return shape_; }
  int size() const { return shape_.cells(); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  const std::vector<int>& row(int r) const {
    return rows_[static_cast<std::size_t>(r) - 1];
  }

  // j-th filled entry of row r (both 1-based).
  int entry(int r, int j) const {
    return rows_[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(j) - 1];
  }

  // Entry at absolute column c of row r; requires shape().contains(r, c).
  int at(int r, int c) const {
    return entry(r, c - shape_.inner(r));
  }

  // Row holding `value` (1-based; value must be in 1..n).
  int row_of(int value) const {
    return cell_of(value).first;
  }

  // (row, absolute column) of `value`.
  std::pair<int, int> cell_of(int value) const {
    for (int r = 1; r <= shape_.rows(); ++r) {
      const auto& entries = row(r);
      for (std::size_t j = 0; j < entries.size(); ++j)
        if (entries[j] == value)
          return {r, shape_.inner(r) + static_cast<int>(j) + 1};
    }
    throw Error("tableau has no entry " + std::to_string(value));
  }

  std::string str() const {
    const bool dotless = shape_.straight() || as_three_row_strip(shape_).has_value();
    std::string out;
    for (int r = 1; r <= shape_.rows(); ++r) {
      if (r > 1) out.push_back('|');
      bool first = true;
      auto put = [&](const std::string& cell) {
        if (!first) out.push_back(',');
        out += cell;
        first = false;
      };
      if (!dotless)
        for (int d = 0; d < shape_.inner(r); ++d) put(".");
      for (int v : row(r)) put(std::to_string(v));
    }
    return out;
  }

  static SkewTableau parse(std::string_view text, ShapeHint hint = ShapeHint::Auto);

  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

namespace detail {

struct ParsedRow {
  int dots = 0;
  std::vector<int> entries;
};

inline std::vector<ParsedRow> split_tableau_text(std::string_view text) {
  std::vector<ParsedRow> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t bar = text.find('|', pos);
    const std::string_view row_text =
        text.substr(pos, bar == std::string_view::npos ? bar : bar - pos);
    ParsedRow row;
    if (!row_text.empty()) {
      std::size_t rpos = 0;
      while (rpos <= row_text.size()) {
        const std::size_t comma = row_text.find(',', rpos);
        std::string_view tok = row_text.substr(
            rpos, comma == std::string_view::npos ? comma : comma - rpos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (tok == ".") {
          if (!row.entries.empty())
            throw TableauParseError("dot cell after an entry");
          ++row.dots;
        } else {
          if (tok.empty()) throw TableauParseError("empty cell");
          int value = 0;
          for (char c : tok) {
            if (c < '0' || c > '9')
              throw TableauParseError("bad cell \"" + std::string(tok) + "\"");
            value = value * 10 + (c - '0');
          }
          row.entries.push_back(value);
        }
        if (comma == std::string_view::npos) break;
        rpos = comma + 1;
      }
    }
    rows.push_back(std::move(row));
    if (bar == std::string_view::npos) break;
    pos = bar + 1;
  }
  // "" parses as the empty tableau, not as one empty row.
  if (rows.size() == 1 && rows[0].dots == 0 && rows[0].entries.empty())
    rows.clear();
  return rows;
}

}  // namespace detail

inline SkewTableau SkewTableau::parse(std::string_view text, ShapeHint hint) {
  auto parsed = detail::split_tableau_text(text);
  bool any_dots = false;
  for (const auto& row : parsed) any_dots |= row.dots > 0;

  std::vector<std::vector<int>> entries;
  entries.reserve(parsed.size());
  for (auto& row : parsed) entries.push_back(std::move(row.entries));

  if (any_dots) {
    std::vector<int> outer, inner;
    for (std::size_t r = 0; r < parsed.size(); ++r) {
      inner.push_back(parsed[r].dots);
      outer.push_back(parsed[r].dots + static_cast<int>(entries[r].size()));
    }
    try {
      return SkewTableau(SkewShape(std::move(outer), std::move(inner)),
                         std::move(entries));
    } catch (const ShapeError& e) {
      throw TableauParseError(std::string("tableau \"") + std::string(text) +
                              "\": " + e.what());
    }
  }

  // Dotless: infer the shape from the row lengths.
  auto strip_shape = [&]() -> std::optional<SkewShape> {
    if (entries.empty()) return SkewShape();
    std::vector<std::size_t> len;
    for (const auto& row : entries) len.push_back(row.size());
    try {
      if (len.size() == 1)
        return SkewShape({static_cast<int>(len[0])}, {});
      if (len.size() == 2 && len[0] == len[1] && len[0] > 0)
        return SkewShape({static_cast<int>(len[0]), static_cast<int>(len[1])}, {});
      if (len.size() == 3 && len[0] == len[1])
        return three_row_strip(2 * static_cast<int>(len[0]) + static_cast<int>(len[2]),
                               static_cast<int>(len[0]));
    } catch (const ShapeError&) {
      return std::nullopt;
    }
    return std::nullopt;
  }();

  if (hint != ShapeHint::Straight && strip_shape) {
    try {
      auto rows_copy = entries;
      return SkewTableau(*strip_shape, std::move(rows_copy));
    } catch (const NotStandardError&) {
      if (hint == ShapeHint::Strip) throw;
      // Auto: fall through to the straight reading.
    }
  }
  if (hint == ShapeHint::Strip)
    throw WrongShapeError("tableau \"" + std::string(text) +
                          "\" is not a three-row strip");

  std::vector<int> outer;
  for (const auto& row : entries) outer.push_back(static_cast<int>(row.size()));
  try {
    return SkewTableau(SkewShape(std::move(outer), {}), std::move(entries));
  } catch (const ShapeError& e) {
    throw TableauParseError(std::string("tableau \"") + std::string(text) +
                            "\": " + e.what());
  }
}

// Des(T) = { i in [n-1] : i+1 sits in a lower row than i }.
inline DescentSet descent_set_syt(const SkewTableau& t) {
  const int n = t.size();
  std::vector<int> row_of(static_cast<std::size_t>(n) + 1, 0);
  for (int r = 1; r <= t.shape().rows(); ++r)
    for (int v : t.row(r)) row_of[static_cast<std::size_t>(v)] = r;
  std::vector<int> d;
  for (int i = 1; i < n; ++i)
    if (row_of[static_cast<std::size_t>(i) + 1] > row_of[static_cast<std::size_t>(i)])
      d.push_back(i);
  return DescentSet(n, std::move(d));
}

// All standard fillings of `shape`, by backtracking over values 1..n placed
// at addable cells scanned in row-major order — a deterministic enumeration.
inline std::vector<SkewTableau> enumerate_syt(const SkewShape& shape) {
  const int n = shape.cells();
  const int rows = shape.rows();
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(rows));
  for (int r = 1; r <= rows; ++r)
    grid[static_cast<std::size_t>(r) - 1].assign(
        static_cast<std::size_t>(shape.outer(r)), 0);

  auto cell = [&](int r, int c) -> int& {
    return grid[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1];
  };
  auto addable = [&](int r, int c) {
    if (cell(r, c) != 0) return false;
    if (c - 1 > shape.inner(r) && cell(r, c - 1) == 0) return false;  // west empty
    if (r > 1 && shape.contains(r - 1, c) && cell(r - 1, c) == 0) return false;
    return true;
  };

  std::vector<SkewTableau> out;
  auto rec = [&](auto&& self, int value) -> void {
    if (value > n) {
      std::vector<std::vector<int>> filled(static_cast<std::size_t>(rows));
      for (int r = 1; r <= rows; ++r)
        for (int c = shape.inner(r) + 1; c <= shape.outer(r); ++c)
          filled[static_cast<std::size_t>(r) - 1].push_back(cell(r, c));
      out.emplace_back(shape, std::move(filled));
      return;
    }
    for (int r = 1; r <= rows; ++r)
      for (int c = shape.inner(r) + 1; c <= shape.outer(r); ++c)
        if (addable(r, c)) {
          cell(r, c) = value;
          self(self, value + 1);
          cell(r, c) = 0;
        }
  };
  rec(rec, 1);
  return out;
}

}  // namespace motzcyc
