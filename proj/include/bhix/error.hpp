// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bhix {

enum class errc {
  out_of_range_vertex,
  self_loop,
  malformed_header,
  truncated_bits,
  trailing_garbage,
  invalid_params,
  no_convergence,
  disconnected,
  too_large,
  too_small,
  non_positive_p,
  disconnected_result,
  invalid_input,
  unsupported_family,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::out_of_range_vertex: return "OutOfRangeVertex";
    case errc::self_loop: return "SelfLoop";
    case errc::malformed_header: return "MalformedHeader";
    case errc::truncated_bits: return "TruncatedBits";
    case errc::trailing_garbage: return "TrailingGarbage";
    case errc::invalid_params: return "InvalidParams";
    case errc::no_convergence: return "NoConvergence";
    case errc::disconnected: return "Disconnected";
    case errc::too_large: return "TooLarge";
    case errc::too_small: return "TooSmall";
    case errc::non_positive_p: return "NonPositiveP";
    case errc::disconnected_result: return "DisconnectedResult";
    case errc::invalid_input: return "InvalidInput";
    case errc::unsupported_family: return "UnsupportedFamily";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace bhix
