// channel.hpp - doubly-selective Rayleigh channel: random realizations,
// time-domain application and the equivalent matrix model

#pragma once

#include "a2fdm/rng.hpp"
#include "a2fdm/types.hpp"
#include <string>
#include <vector>

namespace a2fdm {

enum class DopplerMode { fractional, integer };

struct ChannelProfile {
    int paths = 10;      // L
    int ell_max = 30;    // max integer delay; delays drawn from [1, ell_max]
    double nu_max = 0.0; // max Doppler normalized to subcarrier spacing
    std::vector<double> path_power; // empty means uniform 1/L

    static ChannelProfile uniform(int paths, int ell_max, double nu_max);
    void validate() const;
};

struct ChannelRealization {
    std::vector<Cx> gain;       // h_i
    std::vector<int> delay;     // ell_i, distinct, in [1, ell_max]
    std::vector<double> doppler; // nu_i = alpha_i + beta_i

    int path_count() const { return static_cast<int>(gain.size()); }
    int max_delay() const;

    // one path per line: re(h) im(h) ell nu
    std::string to_text() const;
    static ChannelRealization from_text(const std::string& text);
};

// nu_max = v * fc / (c * delta_f); all arguments strictly positive
double doppler_from_kinematics(double speed_mps, double carrier_hz,
                               double subcarrier_spacing_hz);

// Gains i.i.d. CN(0, path_power), delays distinct uniform in [1, ell_max],
// nu_i = nu_max * cos(phi_i) with phi_i uniform in [-pi, pi]. Integer mode
// rounds each nu_i to the nearest integer.
ChannelRealization sample_realization(const ChannelProfile& profile, Rng& rng,
                                      DopplerMode mode = DopplerMode::fractional);

// H = sum_i h_i Gamma_cpp_i Delta_f_i Pi^ell_i  (dense N x N)
CMat channel_matrix(const ChannelRealization& r, int n, double c1);

// Direct time-varying convolution over the CPP-extended frame. Sample index
// n runs over [-l_cpp, N); the Doppler phase and CPP phase factors use that
// same index so the result matches channel_matrix after strip_cpp.
CVec apply_time_domain(const ChannelRealization& r, const CVec& x_cpp,
                       int l_cpp);

// i.i.d. CN(0, 1/snr) noise per sample (snr linear, per unit-energy symbol)
CVec add_awgn(const CVec& y, double snr, Rng& rng);

} // namespace a2fdm
