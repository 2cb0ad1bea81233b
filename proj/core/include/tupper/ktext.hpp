#pragma once

#include <string>
#include <string_view>

#include "tupper/bigint.hpp"

namespace tupper {

enum class KBase { dec, hex };

// k files hold a single nonnegative value: optional whitespace, then either
// bare decimal digits or an 0x-prefixed hex string, then optional trailing
// whitespace. Empty input and stray characters are ParseErrors.
BigInt parse_k(std::string_view text);

// Single line, no digit separators; hex output carries the 0x prefix.
std::string emit_k(const BigInt& k, KBase base);

}  // namespace tupper
