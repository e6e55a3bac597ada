// harness.hpp - deterministic Monte Carlo experiment engine
//
// Every trial derives its own random stream from
// trial_seed(master_seed, snr_index, trial_index), and results merge by
// integer addition, so the emitted numbers are identical for any worker
// count. The per-frame pipeline is: draw channel -> map bits -> modulate ->
// add CPP -> channel -> AWGN -> strip CPP -> equalize -> demap -> count.

#pragma once

#include "a2fdm/channel.hpp"
#include "a2fdm/metrics.hpp"
#include "a2fdm/modem.hpp"
#include "a2fdm/transforms.hpp"
#include <cstdint>
#include <vector>

namespace a2fdm {

enum class C1Mode { explicit_value, full_diversity, overlap };
enum class ChannelKind { doubly_selective, awgn };
enum class EqualizerPath { time_domain, dense_heff };

struct ExperimentConfig {
    WaveformSpec spec;
    int order = 4; // constellation order
    ChannelProfile profile = ChannelProfile::uniform(10, 30, 0.0);
    ChannelKind channel = ChannelKind::doubly_selective;
    DopplerMode doppler = DopplerMode::fractional;

    C1Mode c1_mode = C1Mode::explicit_value;
    int overlap_d = 2; // for C1Mode::overlap

    std::vector<double> snr_grid_db; // strictly increasing
    int trials = 100;                // frames per SNR point
    std::uint64_t master_seed = 1;
    int cpp_len = -1;      // -1 means ell_max
    int active_count = -1; // N_A; -1 means all N symbols

    // MMSE route. time_domain solves (H^H H + I/snr) in the sample domain,
    // which is algebraically identical to Eq.-style W^H r on H_eff = A H A^H
    // (A is unitary) but avoids the N^3 effective-channel product per frame.
    // dense_heff is the reference route; a test pins their agreement.
    EqualizerPath equalizer = EqualizerPath::time_domain;

    bool early_stop = false;     // stop a point after early_stop_errors
    int early_stop_errors = 200; // checked at chunk boundaries, so results
                                 // stay worker-count independent
    int workers = 1;

    double resolved_c1() const;
    int resolved_cpp_len() const;
    int resolved_active() const;
    void validate() const;
};

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t snr_index,
                         std::uint64_t trial_index);

// One BER point per SNR grid entry, exact integer error/bit counts attached.
MetricSeries run_ber_sweep(const ExperimentConfig& cfg);

// CCDF of PAPR over random frames of the configured waveform. For IA2FDM
// with a constant-modulus constellation, papr <= mu is asserted on every
// frame (hard invariant).
MetricSeries run_papr_sweep(const ExperimentConfig& cfg, int frames,
                            const std::vector<double>& thresholds_db);

} // namespace a2fdm
