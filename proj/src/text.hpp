#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "stirlingb/errors.hpp"

namespace stirlingb::detail {

/// Minimal cursor over user-supplied text forms; all failures are ValidationErrors.
class TextCursor {
public:
  TextCursor(std::string_view text, std::string_view what) : text_(text), what_(what) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool consume(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  int integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
    // from_chars rejects a leading '+'.
    if (start < text_.size() && text_[start] == '+') ++start;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + text_.size(), value);
    if (ec != std::errc{}) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }
  /// Comma-separated integers up to (not including) `close`; may be empty.
  std::vector<int> integer_list(char close) {
    std::vector<int> out;
    if (peek(close)) return out;
    out.push_back(integer());
    while (consume(',')) out.push_back(integer());
    return out;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ValidationError("cannot parse " + std::string(what_) + " '" + std::string(text_) +
                          "' at offset " + std::to_string(pos_) + ": " + why);
  }

private:
  std::string_view text_;
  std::string_view what_;
  std::size_t pos_ = 0;
};

inline std::string join_ints(const std::vector<int>& values, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace stirlingb::detail
