#include "tlforge/parse.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace tlforge {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Parses one signed real starting at pos; advances pos past it. A bare
// sign followed by 'i' counts as +/-1 (handled by the caller).
double parse_real(const std::string& s, std::size_t& pos) {
  const char* begin = s.c_str() + pos;
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin) throw std::invalid_argument("complex literal: expected a number in '" + s + "'");
  pos += static_cast<std::size_t>(end - begin);
  return v;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const std::string s{strip(text)};
  if (s.empty()) throw std::invalid_argument("complex literal: empty string");

  double re = 0.0, im = 0.0;
  std::size_t pos = 0;
  bool have_term = false;

  while (pos < s.size()) {
    // each term: [sign] (digits [i] | i)
    double sign = 1.0;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1.0 : 1.0;
      // a sign directly before 'i' with no digits means unit imaginary
    }
    if ((s[pos] == '+' || s[pos] == '-') && pos + 1 < s.size() &&
        (s[pos + 1] == 'i' || s[pos + 1] == 'I')) {
      im += sign;
      pos += 2;
      have_term = true;
      continue;
    }
    if (s[pos] == 'i' || s[pos] == 'I') {
      im += 1.0;
      pos += 1;
      have_term = true;
      continue;
    }
    const double v = parse_real(s, pos);
    if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'I')) {
      im += v;
      pos += 1;
    } else {
      re += v;
    }
    have_term = true;
  }
  if (!have_term) throw std::invalid_argument("complex literal: no value in '" + s + "'");
  if (!std::isfinite(re) || !std::isfinite(im))
    throw std::invalid_argument("complex literal: value not finite in '" + s + "'");
  return {re, im};
}

std::vector<Complex> parse_complex_list(std::string_view text) {
  std::vector<Complex> out;
  std::size_t start = 0;
  const std::string s{text};
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::string_view piece =
        std::string_view(s).substr(start, comma == std::string::npos ? std::string::npos
                                                                     : comma - start);
    out.push_back(parse_complex(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_complex(Complex z) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

}  // namespace tlforge
