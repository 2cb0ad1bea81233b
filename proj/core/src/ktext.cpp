#include "tupper/ktext.hpp"

#include <cctype>

#include "tupper/errors.hpp"

namespace tupper {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

}  // namespace

BigInt parse_k(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && is_space(text[begin])) ++begin;
    while (end > begin && is_space(text[end - 1])) --end;
    std::string_view body = text.substr(begin, end - begin);
    if (body.empty()) {
        throw ParseError("k value: empty input");
    }

    const bool hex = body.size() >= 2 && body[0] == '0' && (body[1] == 'x' || body[1] == 'X');
    if (hex) {
        body.remove_prefix(2);
        if (body.empty()) {
            throw ParseError("k value: no digits after 0x");
        }
    }

    BigInt value = 0;
    if (hex) {
        for (const char c : body) {
            int digit;
            if (c >= '0' && c <= '9') {
                digit = c - '0';
            } else if (c >= 'a' && c <= 'f') {
                digit = c - 'a' + 10;
            } else if (c >= 'A' && c <= 'F') {
                digit = c - 'A' + 10;
            } else {
                throw ParseError("k value: invalid hex digit '" + std::string(1, c) + "'");
            }
            value <<= 4;
            value += digit;
        }
        return value;
    }

    // Chunked decimal accumulation; also sidesteps the big-integer string
    // constructor treating a leading 0 as an octal prefix.
    constexpr int chunk_digits = 18;
    constexpr std::int64_t chunk_scale = 1000000000000000000LL;  // 10^18
    std::int64_t chunk = 0;
    int in_chunk = 0;
    for (const char c : body) {
        if (c < '0' || c > '9') {
            throw ParseError("k value: invalid decimal digit '" + std::string(1, c) + "'");
        }
        chunk = chunk * 10 + (c - '0');
        if (++in_chunk == chunk_digits) {
            value = value * chunk_scale + chunk;
            chunk = 0;
            in_chunk = 0;
        }
    }
    for (int i = 0; i < in_chunk; ++i) {
        value *= 10;
    }
    value += chunk;
    return value;
}

std::string emit_k(const BigInt& k, KBase base) {
    if (k.sign() < 0) {
        throw std::invalid_argument("emit_k: value must be nonnegative");
    }
    if (base == KBase::hex) {
        return "0x" + k.str(0, std::ios_base::hex);
    }
    return k.str();
}

}  // namespace tupper
