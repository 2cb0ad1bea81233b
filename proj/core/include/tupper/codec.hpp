#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tupper/bigint.hpp"
#include "tupper/field.hpp"
#include "tupper/params.hpp"

namespace tupper {

// The natural number k of an encoding instance together with its geometry.
// encode() output always satisfies R | k; arbitrary nonnegative k values are
// accepted everywhere so that any number can be browsed as an image.
struct EncodedNumber {
    GridParams params;
    BigInt k;

    // floor(k / R), the number whose binary digits carry the cell/colour
    // memberships. Used even when R does not divide k.
    BigInt quotient() const;

    friend bool operator==(const EncodedNumber&, const EncodedNumber&) = default;
};

// Position of the (cell, colour) membership bit inside floor(k/R):
//
//   R^n*m_1 + R^(n-1)*m_2 + ... + R*m_n + j
//
// The first coordinate takes the highest power R^n; the colour offset j is
// the units digit. Distinct (cell, j) pairs give distinct positions because
// every digit is below R. Preconditions: 0 <= m_i < A_i, 1 <= j <= m.
BigInt bit_index(const GridParams& params,
                 std::span<const std::int64_t> cell,
                 int color);

// Packs a colour field into k: sets one bit of the quotient per painted
// cell, then multiplies by R once. Independent of cell iteration order.
EncodedNumber encode(const ColorField& field);

// Tests membership bit (cell, color) of floor(k/R). For encode() output this
// equals (cell is painted with color); for arbitrary k it reports whatever
// bit happens to be set.
bool decode_cell(const EncodedNumber& enc,
                 std::span<const std::int64_t> cell,
                 int color);

// Same test against a precomputed quotient; avoids re-dividing k in loops.
bool quotient_bit(const GridParams& params,
                  const BigInt& quotient,
                  std::span<const std::int64_t> cell,
                  int color);

// Every colour whose membership bit is set, per cell. Sets are ascending;
// encode() output yields at most one colour per cell.
struct DecodedColors {
    GridParams params;
    std::vector<std::vector<int>> sets;  // flat row-major, first axis slowest

    friend bool operator==(const DecodedColors&, const DecodedColors&) = default;
};

DecodedColors decode_field(const EncodedNumber& enc);

enum class MultiColorPolicy {
    strict,   // more than one colour in a cell is an error
    layered,  // keep the smallest colour index
};

// Collapses per-cell colour sets to a ColorField (empty set -> background).
// Under strict policy a multi-colour cell throws MultiColorError.
ColorField to_field(const DecodedColors& decoded,
                    MultiColorPolicy policy = MultiColorPolicy::strict);

// Structural consequences of the bit layout, reported rather than enforced:
//   divisible    - R | k
//   residues_ok  - every set bit of floor(k/R) has position mod R in {1..m}
//   digits_ok    - the base-R digits above the residue form a cell within dims
// encode() output passes all three.
struct ValidationReport {
    bool divisible = false;
    bool residues_ok = false;
    bool digits_ok = false;
    std::optional<BigInt> first_bad_bit;  // lowest offending bit position

    bool ok() const { return divisible && residues_ok && digits_ok; }
};

ValidationReport validate_encoded(const EncodedNumber& enc);

}  // namespace tupper
