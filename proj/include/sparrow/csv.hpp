#pragma once

#include <concepts>
#include <initializer_list>
#include <string>
#include <string_view>
#include <type_traits>

namespace sparrow {

// Locale-independent fixed-point formatting; negative zero prints as zero.
std::string format_fixed(double value, int decimals = 6);

/// Minimal CSV builder: LF line endings, doubles at 6 decimals, integers
/// verbatim, bools as 0/1. Fields are not quoted; callers keep them plain.
class CsvWriter {
 public:
  explicit CsvWriter(std::initializer_list<std::string_view> header);

  template <typename... Fields>
  void row(const Fields&... fields) {
    bool first = true;
    (append(fields, first), ...);
    out_ += '\n';
  }

  const std::string& str() const noexcept { return out_; }

 private:
  template <typename T>
  void append(const T& v, bool& first) {
    if (!first) out_ += ',';
    first = false;
    if constexpr (std::is_same_v<T, bool>) {
      out_ += v ? '1' : '0';
    } else if constexpr (std::is_floating_point_v<T>) {
      out_ += format_fixed(static_cast<double>(v));
    } else if constexpr (std::is_integral_v<T>) {
      out_ += std::to_string(v);
    } else {
      out_ += std::string_view(v);
    }
  }

  std::string out_;
};

}  // namespace sparrow
