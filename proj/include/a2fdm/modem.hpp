// modem.hpp - square QAM bit mapping and bit-error accounting

#pragma once

#include "a2fdm/types.hpp"
#include <cstdint>
#include <vector>

namespace a2fdm {

using Bits = std::vector<std::uint8_t>;

/**
 * Gray-labelled square QAM alphabet with unit average energy.
 *
 * Point index doubles as the bit label (MSB first): the first half of the
 * bits selects the in-phase level, the second half the quadrature level,
 * each through a reflected Gray code with label 0 on the positive extreme.
 * For 4QAM this puts bits 00 at (+1+j)/sqrt(2).
 */
class Constellation {
public:
    static Constellation make(int order); // 4, 16 or 64

    int order() const { return static_cast<int>(points_.size()); }
    int bits_per_symbol() const { return bits_per_symbol_; }
    const std::vector<Cx>& points() const { return points_; }

    // true when every point has the same modulus (4QAM)
    bool constant_modulus() const { return order() == 4; }

private:
    Constellation() = default;
    std::vector<Cx> points_;
    int bits_per_symbol_ = 0;
};

// bits.size() must be a multiple of bits_per_symbol
CVec map_bits(const Bits& bits, const Constellation& c);

// nearest-point hard decision; ties go to the lowest point index
Bits demap_hard(const CVec& symbols, const Constellation& c);

// Hamming distance; lengths must match
std::uint64_t count_bit_errors(const Bits& a, const Bits& b);

} // namespace a2fdm
