#include "dp2/divisor_parse.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "dp2/error.hpp"

namespace dp2 {

namespace {

std::string normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    const unsigned char ch = static_cast<unsigned char>(text[k]);
    // U+2212 MINUS SIGN
    if (ch == 0xE2 && k + 2 < text.size() && static_cast<unsigned char>(text[k + 1]) == 0x88 &&
        static_cast<unsigned char>(text[k + 2]) == 0x92) {
      out.push_back('-');
      k += 2;
      continue;
    }
    if (!std::isspace(ch)) out.push_back(static_cast<char>(ch));
  }
  return out;
}

[[noreturn]] void fail(std::string_view text, const std::string& why) {
  throw ParseError("cannot parse divisor '" + std::string(text) + "': " + why);
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(whole, "bad integer '" + std::string(s) + "'");
  return v;
}

DivClass parse_vector(const std::string& s, std::string_view whole) {
  DivClass d;
  std::size_t start = 0;
  int k = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    const std::string_view field(s.data() + start, (comma == std::string::npos ? s.size() : comma) - start);
    if (k >= kRank) fail(whole, "expected 8 coordinates");
    d[k++] = parse_int(field, whole);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (k != kRank) fail(whole, "expected 8 coordinates, got " + std::to_string(k));
  return d;
}

int digit(char c, std::string_view whole) {
  if (c < '1' || c > '7') fail(whole, "point index must be 1..7");
  return c - '0';
}

DivClass parse_token(std::string_view tok, std::string_view whole) {
  if (tok == "H") return anticanonical();
  if (tok == "K") return canonical_class();
  if (tok == "L") return line();
  if (tok == "F") return twist_class();
  if (tok == "0") return DivClass{};
  if (tok.size() == 2 && tok[0] == 'E') return exceptional_point(digit(tok[1], whole));
  if (tok.size() == 2 && tok[0] == 'D') return cubic_double_at(digit(tok[1], whole));
  if (tok.size() == 3 && (tok[0] == 'L' || tok[0] == 'C')) {
    int i = digit(tok[1], whole);
    int j = digit(tok[2], whole);
    if (i == j) fail(whole, "repeated index in '" + std::string(tok) + "'");
    if (i > j) std::swap(i, j);
    return tok[0] == 'L' ? line_through(i, j) : conic_missing(i, j);
  }
  fail(whole, "unknown token '" + std::string(tok) + "'");
}

DivClass parse_symbolic(const std::string& s, std::string_view whole) {
  DivClass total;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    std::int64_t sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail(whole, "expected '+' or '-'");
    }
    first = false;

    std::size_t num_end = pos;
    while (num_end < s.size() && std::isdigit(static_cast<unsigned char>(s[num_end]))) ++num_end;
    std::int64_t multiplier = 1;
    bool has_number = num_end > pos;
    std::size_t tok_start = num_end;
    if (has_number) {
      // a bare "0" term is the zero class, not a multiplier
      if (num_end == s.size() || s[num_end] == '+' || s[num_end] == '-') {
        tok_start = pos;
      } else {
        multiplier = parse_int(std::string_view(s).substr(pos, num_end - pos), whole);
        if (s[num_end] == '*') ++tok_start;
      }
    }
    std::size_t tok_end = tok_start;
    while (tok_end < s.size() && s[tok_end] != '+' && s[tok_end] != '-') ++tok_end;
    if (tok_end == tok_start) fail(whole, "missing term");
    total += (sign * multiplier) * parse_token(std::string_view(s).substr(tok_start, tok_end - tok_start), whole);
    pos = tok_end;
  }
  if (first) fail(whole, "empty expression");
  return total;
}

}  // namespace

DivClass parse_divisor(std::string_view text) {
  const std::string s = normalize(text);
  if (s.empty()) fail(text, "empty input");
  if (s.find(',') != std::string::npos) return parse_vector(s, text);
  return parse_symbolic(s, text);
}

}  // namespace dp2
