// metrics.hpp - PAPR, CCDF, BER accumulation and diversity-slope estimation

#pragma once

#include "a2fdm/types.hpp"
#include <cstdint>
#include <vector>

namespace a2fdm {

// max |x_n|^2 / mean |x_n|^2 (linear, >= 1); throws on the zero vector
double papr(const CVec& x);

struct SeriesPoint {
    double x = 0.0;          // snr_db or threshold_db
    double value = 0.0;      // ber or ccdf
    std::uint64_t count = 0; // bit errors / exceedances
    std::uint64_t total = 0; // bits / frames
};

using MetricSeries = std::vector<SeriesPoint>;

struct BerAccumulator {
    std::uint64_t errors = 0;
    std::uint64_t bits = 0;

    void add(std::uint64_t e, std::uint64_t b); // throws if e > b
    void merge(const BerAccumulator& other) { add(other.errors, other.bits); }
    double ber() const { return bits ? double(errors) / double(bits) : 0.0; }
    // binomial normal-approximation standard deviation of the BER estimate
    double sigma() const;
};

// CCDF(t) = fraction of values with 10*log10(value) > t, exact counts kept
MetricSeries ccdf(const std::vector<double>& values,
                  const std::vector<double>& thresholds_db);

// Least-squares slope of log10(ber) vs snr_db over [lo_db, hi_db], reported
// as decades per 10 dB (positive = falling). Needs >= 2 nonzero points.
double diversity_slope(const MetricSeries& ber_series, double lo_db,
                       double hi_db);

} // namespace a2fdm
