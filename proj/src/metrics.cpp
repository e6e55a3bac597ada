#include "a2fdm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace a2fdm {

double papr(const CVec& x) {
    if (x.size() == 0) throw std::invalid_argument("empty sample vector");
    double peak = 0.0, sum = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double p = std::norm(x[i]);
        peak = std::max(peak, p);
        sum += p;
    }
    if (sum == 0.0) throw std::invalid_argument("zero sample vector");
    return peak / (sum / static_cast<double>(x.size()));
}

void BerAccumulator::add(std::uint64_t e, std::uint64_t b) {
    if (e > b) throw std::logic_error("more errors than bits");
    errors += e;
    bits += b;
}

double BerAccumulator::sigma() const {
    if (bits == 0) return 0.0;
    const double p = ber();
    return std::sqrt(p * (1.0 - p) / static_cast<double>(bits));
}

MetricSeries ccdf(const std::vector<double>& values,
                  const std::vector<double>& thresholds_db) {
    if (values.empty()) throw std::invalid_argument("empty value set");
    MetricSeries series;
    series.reserve(thresholds_db.size());
    for (const double t : thresholds_db) {
        std::uint64_t count = 0;
        for (const double v : values)
            if (linear_to_db(v) > t) ++count;
        series.push_back({t, double(count) / double(values.size()), count,
                          values.size()});
    }
    return series;
}

double diversity_slope(const MetricSeries& ber_series, double lo_db,
                       double hi_db) {
    // least squares of log10(ber) on snr_db, reported as decades per 10 dB
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int k = 0;
    for (const auto& pt : ber_series) {
        if (pt.x < lo_db || pt.x > hi_db || pt.value <= 0.0) continue;
        const double y = std::log10(pt.value);
        sx += pt.x;
        sy += y;
        sxx += pt.x * pt.x;
        sxy += pt.x * y;
        ++k;
    }
    if (k < 2)
        throw std::runtime_error(
            "diversity_slope: fewer than 2 nonzero BER points in window");
    const double denom = k * sxx - sx * sx;
    if (denom == 0.0)
        throw std::runtime_error("diversity_slope: degenerate abscissae");
    const double slope = (k * sxy - sx * sy) / denom; // log10(ber) per dB
    return -slope * 10.0;
}

} // namespace a2fdm
