#include "tupper/codec.hpp"

#include <iterator>
#include <limits>
#include <stdexcept>
#include <string>

#include "tupper/errors.hpp"

namespace tupper {

namespace {

// Coefficients R^n, R^(n-1), ..., R for axes 1..n; the colour offset j takes
// the units place.
std::vector<BigInt> axis_coefficients(const GridParams& params) {
    std::vector<BigInt> coeff(static_cast<std::size_t>(params.rank));
    BigInt power = params.radix;
    for (std::size_t i = coeff.size(); i-- > 0;) {
        coeff[i] = power;
        power *= params.radix;
    }
    return coeff;
}

void check_cell(const GridParams& params, std::span<const std::int64_t> cell) {
    if (cell.size() != static_cast<std::size_t>(params.rank)) {
        throw std::out_of_range("cell tuple has " + std::to_string(cell.size()) +
                                " coordinates, expected " + std::to_string(params.rank));
    }
    for (std::size_t i = 0; i < cell.size(); ++i) {
        if (cell[i] < 0 || cell[i] >= params.dims[i]) {
            throw std::out_of_range("cell coordinate " + std::to_string(cell[i]) +
                                    " outside [0, " + std::to_string(params.dims[i]) +
                                    ") on axis " + std::to_string(i + 1));
        }
    }
}

void check_color(const GridParams& params, int color) {
    if (color < 1 || color > params.colors) {
        throw std::out_of_range("colour index " + std::to_string(color) + " outside {1..." +
                                std::to_string(params.colors) + "}");
    }
}

BigInt position_of(const std::vector<BigInt>& coeff,
                   std::span<const std::int64_t> cell,
                   int color) {
    BigInt position = color;
    for (std::size_t i = 0; i < cell.size(); ++i) {
        position += coeff[i] * cell[i];
    }
    return position;
}

// bit_set/bit_test address bits by unsigned index; anything beyond that
// could not be materialized anyway.
unsigned checked_bit_position(const BigInt& position) {
    if (position > std::numeric_limits<unsigned>::max()) {
        throw std::length_error("bit position " + position.str() +
                                " is too large to materialize");
    }
    return static_cast<unsigned>(position);
}

std::size_t lattice_cell_count(const GridParams& params) {
    std::size_t total = 1;
    for (std::int64_t extent : params.dims) {
        total *= static_cast<std::size_t>(extent);
    }
    return total;
}

}  // namespace

BigInt EncodedNumber::quotient() const {
    if (k.sign() < 0) {
        throw std::invalid_argument("encoded number must be nonnegative");
    }
    return floor_div(k, params.radix);
}

BigInt bit_index(const GridParams& params,
                 std::span<const std::int64_t> cell,
                 int color) {
    check_cell(params, cell);
    check_color(params, color);
    return position_of(axis_coefficients(params), cell, color);
}

EncodedNumber encode(const ColorField& field) {
    const GridParams& params = field.params();
    const auto coeff = axis_coefficients(params);

    BigInt quotient = 0;
    std::vector<std::int64_t> cell(static_cast<std::size_t>(params.rank), 0);
    std::size_t flat = 0;
    do {
        const std::uint8_t color = field.at_flat(flat++);
        if (color != 0) {
            boost::multiprecision::bit_set(
                quotient, checked_bit_position(position_of(coeff, cell, color)));
        }
    } while (next_cell(cell, params.dims));

    return EncodedNumber{params, quotient * params.radix};
}

bool quotient_bit(const GridParams& params,
                  const BigInt& quotient,
                  std::span<const std::int64_t> cell,
                  int color) {
    const BigInt position = bit_index(params, cell, color);
    if (quotient.is_zero() || position > boost::multiprecision::msb(quotient)) {
        return false;
    }
    return boost::multiprecision::bit_test(quotient, static_cast<unsigned>(position));
}

bool decode_cell(const EncodedNumber& enc,
                 std::span<const std::int64_t> cell,
                 int color) {
    return quotient_bit(enc.params, enc.quotient(), cell, color);
}

DecodedColors decode_field(const EncodedNumber& enc) {
    const GridParams& params = enc.params;
    const BigInt quotient = enc.quotient();
    const auto coeff = axis_coefficients(params);
    const std::size_t top_bit =
        quotient.is_zero() ? 0 : boost::multiprecision::msb(quotient);

    DecodedColors decoded{params, {}};
    decoded.sets.resize(lattice_cell_count(params));

    std::vector<std::int64_t> cell(static_cast<std::size_t>(params.rank), 0);
    std::size_t flat = 0;
    do {
        BigInt base = 0;
        for (std::size_t i = 0; i < cell.size(); ++i) {
            base += coeff[i] * cell[i];
        }
        auto& set = decoded.sets[flat++];
        for (int color = 1; color <= params.colors; ++color) {
            const BigInt position = base + color;
            if (!quotient.is_zero() && position <= top_bit &&
                boost::multiprecision::bit_test(quotient, static_cast<unsigned>(position))) {
                set.push_back(color);
            }
        }
    } while (next_cell(cell, params.dims));

    return decoded;
}

ColorField to_field(const DecodedColors& decoded, MultiColorPolicy policy) {
    ColorField field(decoded.params);
    if (decoded.sets.size() != field.cell_count()) {
        throw std::invalid_argument("decoded colour sets do not match the grid size");
    }

    std::vector<std::int64_t> cell(static_cast<std::size_t>(decoded.params.rank), 0);
    std::size_t flat = 0;
    do {
        const auto& set = decoded.sets[flat];
        if (set.size() > 1 && policy == MultiColorPolicy::strict) {
            throw MultiColorError({cell.begin(), cell.end()}, set);
        }
        if (!set.empty()) {
            field.set_flat(flat, static_cast<std::uint8_t>(set.front()));
        }
        ++flat;
    } while (next_cell(cell, decoded.params.dims));

    return field;
}

ValidationReport validate_encoded(const EncodedNumber& enc) {
    const GridParams& params = enc.params;
    ValidationReport report;
    report.divisible = (enc.k % params.radix).is_zero();
    report.residues_ok = true;
    report.digits_ok = true;

    const BigInt quotient = enc.quotient();
    if (quotient.is_zero()) {
        return report;
    }

    std::vector<std::uint8_t> bytes;
    boost::multiprecision::export_bits(quotient, std::back_inserter(bytes), 8,
                                       /*msv_first=*/false);

    for (std::size_t byte_i = 0; byte_i < bytes.size(); ++byte_i) {
        if (bytes[byte_i] == 0) continue;
        for (int bit = 0; bit < 8; ++bit) {
            if (!(bytes[byte_i] >> bit & 1)) continue;
            const BigInt position = BigInt(byte_i) * 8 + bit;

            bool bad = false;
            const BigInt residue = position % params.radix;
            if (residue < 1 || residue > params.colors) {
                report.residues_ok = false;
                bad = true;
            } else {
                // Peel base-R digits m_n, ..., m_1; anything left above them
                // means the position escapes the grid entirely.
                BigInt rest = position / params.radix;
                for (std::size_t axis = static_cast<std::size_t>(params.rank); axis-- > 0;) {
                    if (rest % params.radix >= params.dims[axis]) {
                        bad = true;
                        break;
                    }
                    rest /= params.radix;
                }
                if (!rest.is_zero()) {
                    bad = true;
                }
                if (bad) {
                    report.digits_ok = false;
                }
            }
            if (bad && !report.first_bad_bit) {
                report.first_bad_bit = position;
            }
        }
    }
    return report;
}

}  // namespace tupper
