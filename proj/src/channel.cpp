#include "a2fdm/channel.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace a2fdm {

ChannelProfile ChannelProfile::uniform(int paths, int ell_max, double nu_max) {
    ChannelProfile p;
    p.paths = paths;
    p.ell_max = ell_max;
    p.nu_max = nu_max;
    return p;
}

void ChannelProfile::validate() const {
    if (paths < 1) throw std::invalid_argument("path count must be >= 1");
    if (ell_max < paths)
        throw std::invalid_argument("ell_max must be >= L for distinct delays");
    if (nu_max < 0.0) throw std::invalid_argument("nu_max must be >= 0");
    if (!path_power.empty()) {
        if (static_cast<int>(path_power.size()) != paths)
            throw std::invalid_argument("path_power size != L");
        const double sum =
            std::accumulate(path_power.begin(), path_power.end(), 0.0);
        if (std::abs(sum - 1.0) > 1e-12)
            throw std::invalid_argument("path powers must sum to 1");
    }
}

int ChannelRealization::max_delay() const {
    int m = 0;
    for (int d : delay) m = std::max(m, d);
    return m;
}

std::string ChannelRealization::to_text() const {
    std::ostringstream os;
    os.precision(17);
    for (int i = 0; i < path_count(); ++i)
        os << gain[i].real() << ' ' << gain[i].imag() << ' ' << delay[i] << ' '
           << doppler[i] << '\n';
    return os.str();
}

ChannelRealization ChannelRealization::from_text(const std::string& text) {
    ChannelRealization r;
    std::istringstream is(text);
    double re, im, nu;
    int ell;
    while (is >> re >> im >> ell >> nu) {
        r.gain.emplace_back(re, im);
        r.delay.push_back(ell);
        r.doppler.push_back(nu);
    }
    if (r.gain.empty())
        throw std::invalid_argument("no channel paths in text record");
    return r;
}

double doppler_from_kinematics(double speed_mps, double carrier_hz,
                               double subcarrier_spacing_hz) {
    if (speed_mps < 0.0 || carrier_hz <= 0.0 || subcarrier_spacing_hz <= 0.0)
        throw std::invalid_argument("kinematic parameters must be positive");
    return speed_mps * carrier_hz / (3.0e8 * subcarrier_spacing_hz);
}

ChannelRealization sample_realization(const ChannelProfile& profile, Rng& rng,
                                      DopplerMode mode) {
    profile.validate();
    const int L = profile.paths;

    ChannelRealization r;
    r.gain.resize(L);
    r.delay.resize(L);
    r.doppler.resize(L);

    for (int i = 0; i < L; ++i) {
        const double var =
            profile.path_power.empty() ? 1.0 / L : profile.path_power[i];
        r.gain[i] = rng.cgauss(var);
    }

    // distinct delays: partial Fisher-Yates over [1, ell_max]
    std::vector<int> pool(profile.ell_max);
    for (int i = 0; i < profile.ell_max; ++i) pool[i] = i + 1;
    for (int i = 0; i < L; ++i) {
        const auto j =
            i + static_cast<int>(rng.uniform_int(pool.size() - i));
        std::swap(pool[i], pool[j]);
        r.delay[i] = pool[i];
    }

    for (int i = 0; i < L; ++i) {
        const double phi = (2.0 * rng.uniform() - 1.0) * kTwoPi / 2.0;
        double nu = profile.nu_max * std::cos(phi);
        if (mode == DopplerMode::integer) nu = std::round(nu);
        r.doppler[i] = nu;
    }
    return r;
}

CMat channel_matrix(const ChannelRealization& r, int n, double c1) {
    if (r.max_delay() >= n)
        throw std::invalid_argument("path delay must be < N");

    CMat h = CMat::Zero(n, n);
    for (int i = 0; i < r.path_count(); ++i) {
        const int ell = r.delay[i];
        const double f = r.doppler[i] / n;
        for (int row = 0; row < n; ++row) {
            const int col = mod_n(row - ell, n); // Pi^ell: 1 at (row, row-ell)
            Cx v = r.gain[i] * unit_phase(-f * row);
            if (row < ell) // CPP-induced phase
                v *= unit_phase(-c1 * (static_cast<double>(n) * n -
                                       2.0 * n * (ell - row)));
            h(row, col) += v;
        }
    }
    return h;
}

CVec apply_time_domain(const ChannelRealization& r, const CVec& x_cpp,
                       int l_cpp) {
    const int n = static_cast<int>(x_cpp.size()) - l_cpp;
    if (n < 1) throw std::invalid_argument("frame shorter than CPP");
    if (l_cpp < r.max_delay())
        throw std::invalid_argument("CPP shorter than the channel delay spread");

    CVec y = CVec::Zero(x_cpp.size());
    for (int i = 0; i < r.path_count(); ++i) {
        const int ell = r.delay[i];
        const double f = r.doppler[i] / n;
        for (int idx = ell; idx < static_cast<int>(x_cpp.size()); ++idx) {
            const int m = idx - l_cpp; // time index, CPP at negative m
            y[idx] += r.gain[i] * unit_phase(-f * m) * x_cpp[idx - ell];
        }
    }
    return y;
}

CVec add_awgn(const CVec& y, double snr, Rng& rng) {
    if (snr <= 0.0) throw std::invalid_argument("snr must be > 0");
    const double n0 = 1.0 / snr;
    CVec out(y.size());
    for (Eigen::Index i = 0; i < y.size(); ++i) out[i] = y[i] + rng.cgauss(n0);
    return out;
}

} // namespace a2fdm
