#include <charconv>
#include <cmath>

#include "sparrow/csv.hpp"

namespace sparrow {

std::string format_fixed(double value, int decimals) {
  char buf[512];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::fixed, decimals);
  if (ec != std::errc()) return std::isnan(value) ? "nan" : "inf";
  std::string s(buf, ptr);
  // "-0.000000" after rounding a tiny negative.
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) {
    s.erase(0, 1);
  }
  return s;
}

CsvWriter::CsvWriter(std::initializer_list<std::string_view> header) {
  bool first = true;
  for (auto h : header) {
    if (!first) out_ += ',';
    first = false;
    out_ += h;
  }
  out_ += '\n';
}

}  // namespace sparrow
