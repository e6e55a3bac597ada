#include "a2fdm/modem.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace a2fdm {
namespace {

// inverse reflected Gray code
unsigned gray_decode(unsigned g) {
    unsigned v = g;
    while (g >>= 1) v ^= g;
    return v;
}

// amplitude for a k-bit Gray label: label 0 sits on the positive extreme,
// adjacent amplitudes differ in exactly one label bit
double pam_level(unsigned gray_label, int k) {
    const int levels = 1 << k;
    const int idx = static_cast<int>(gray_decode(gray_label));
    return static_cast<double>((levels - 1) - 2 * idx);
}

} // namespace

Constellation Constellation::make(int order) {
    if (order != 4 && order != 16 && order != 64)
        throw std::invalid_argument("constellation order must be 4, 16 or 64");

    Constellation c;
    c.bits_per_symbol_ = 0;
    for (int m = order; m > 1; m >>= 1) ++c.bits_per_symbol_;
    const int k = c.bits_per_symbol_ / 2; // bits per axis

    // unit average energy: E = 2*(order-1)/3 for the +/-1, +/-3, ... lattice
    const double scale = 1.0 / std::sqrt(2.0 * (order - 1) / 3.0);

    c.points_.resize(order);
    for (int idx = 0; idx < order; ++idx) {
        const unsigned gi = static_cast<unsigned>(idx) >> k;        // first bits: I
        const unsigned gq = static_cast<unsigned>(idx) & ((1u << k) - 1u);
        c.points_[idx] = scale * Cx(pam_level(gi, k), pam_level(gq, k));
    }
    return c;
}

CVec map_bits(const Bits& bits, const Constellation& c) {
    const int bps = c.bits_per_symbol();
    if (bits.size() % bps != 0)
        throw std::invalid_argument("bit count not divisible by bits/symbol");

    CVec s(bits.size() / bps);
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        unsigned idx = 0;
        for (int b = 0; b < bps; ++b)
            idx = (idx << 1) | (bits[i * bps + b] & 1u);
        s[i] = c.points()[idx];
    }
    return s;
}

Bits demap_hard(const CVec& symbols, const Constellation& c) {
    const int bps = c.bits_per_symbol();
    Bits bits(symbols.size() * bps);
    for (Eigen::Index i = 0; i < symbols.size(); ++i) {
        int best = 0;
        double best_d2 = std::numeric_limits<double>::infinity();
        for (int idx = 0; idx < c.order(); ++idx) {
            const double d2 = std::norm(symbols[i] - c.points()[idx]);
            if (d2 < best_d2) { // strict: ties keep the lowest index
                best_d2 = d2;
                best = idx;
            }
        }
        for (int b = 0; b < bps; ++b)
            bits[i * bps + b] =
                static_cast<std::uint8_t>((best >> (bps - 1 - b)) & 1);
    }
    return bits;
}

std::uint64_t count_bit_errors(const Bits& a, const Bits& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("bit sequences differ in length");
    std::uint64_t errors = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        errors += (a[i] ^ b[i]) & 1u;
    return errors;
}

} // namespace a2fdm
