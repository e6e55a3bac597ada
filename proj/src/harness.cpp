#include "a2fdm/harness.hpp"

#include "a2fdm/effective.hpp"
#include "a2fdm/equalize.hpp"
#include <Eigen/Cholesky>
#include <algorithm>
#include <stdexcept>
#include <thread>

namespace a2fdm {
namespace {

constexpr int kChunk = 32; // trials per scheduling chunk (early-stop grain)

struct TrialCount {
    std::uint64_t errors = 0;
    std::uint64_t bits = 0;
};

Bits random_bits(Rng& rng, int count) {
    Bits b(count);
    for (int i = 0; i < count; ++i)
        b[i] = static_cast<std::uint8_t>(rng.next() >> 63);
    return b;
}

// H^H H + I/snr from the path structure, O(L^2 N) instead of a dense GEMM.
// Each path is a scaled diagonal-times-shift, so every (i, j) pair lands on
// the single diagonal offset ell_i - ell_j.
CMat gram_plus_reg(const ChannelRealization& r, int n, double c1, double snr) {
    const int L = r.path_count();
    std::vector<std::vector<Cx>> d(L, std::vector<Cx>(n));
    for (int i = 0; i < L; ++i) {
        const int ell = r.delay[i];
        const double f = r.doppler[i] / n;
        for (int t = 0; t < n; ++t) {
            Cx v = r.gain[i] * unit_phase(-f * t);
            if (t < ell)
                v *= unit_phase(-c1 * (static_cast<double>(n) * n -
                                       2.0 * n * (ell - t)));
            d[i][t] = v;
        }
    }

    CMat g = CMat::Zero(n, n);
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) {
            const int shift = r.delay[i] - r.delay[j];
            for (int m = 0; m < n; ++m) {
                const int row = mod_n(m + r.delay[i], n);
                g(m, mod_n(m + shift, n)) += std::conj(d[i][row]) * d[j][row];
            }
        }
    g.diagonal().array() += 1.0 / snr;
    return g;
}

struct SweepContext {
    ExperimentConfig cfg;
    WaveformSpec wspec;
    Constellation con = Constellation::make(4);
    Transform tf{WaveformSpec{Waveform::ofdm, 1, 1, 0.0, 0.0}};
    int n_active = 0;
    int l_cpp = 0;

    explicit SweepContext(const ExperimentConfig& c)
        : cfg(c), wspec(c.spec), con(Constellation::make(c.order)),
          tf(resolve_spec(c)), n_active(c.resolved_active()),
          l_cpp(c.resolved_cpp_len()) {
        wspec = tf.spec();
    }

    static WaveformSpec resolve_spec(const ExperimentConfig& c) {
        WaveformSpec w = c.spec;
        w.c1 = c.resolved_c1();
        if (w.kind == Waveform::ofdm) w.c1 = 0.0;
        return w;
    }
};

TrialCount run_ber_trial(const SweepContext& ctx, double snr, Rng& rng) {
    const auto& cfg = ctx.cfg;
    const int n = ctx.wspec.n;
    const int bps = ctx.con.bits_per_symbol();

    ChannelRealization real;
    if (cfg.channel == ChannelKind::doubly_selective)
        real = sample_realization(cfg.profile, rng, cfg.doppler);

    const Bits tx_bits = random_bits(rng, ctx.n_active * bps);
    const CVec active_syms = map_bits(tx_bits, ctx.con);
    CVec s = CVec::Zero(n);
    s.head(ctx.n_active) = active_syms;

    const CVec x = ctx.tf.modulate(s);

    CVec s_hat;
    if (cfg.channel == ChannelKind::awgn) {
        const CVec y = add_awgn(x, snr, rng);
        const CVec r = ctx.tf.demodulate(y);
        s_hat = (snr / (1.0 + snr)) * r; // MMSE with H_eff = I
    } else {
        const CVec xc = add_cpp(ctx.wspec, x, ctx.l_cpp);
        const CVec yc = apply_time_domain(real, xc, ctx.l_cpp);
        const CVec y = add_awgn(strip_cpp(yc, ctx.l_cpp), snr, rng);

        if (cfg.equalizer == EqualizerPath::dense_heff) {
            const CMat h_eff =
                effective_channel(ctx.tf.matrix(), real, ctx.wspec.c1);
            s_hat = mmse_equalize(h_eff, ctx.tf.demodulate(y), snr);
        } else {
            // same W^H r, pushed through the unitary A into the time domain
            const CMat h = channel_matrix(real, n, ctx.wspec.c1);
            const CMat g = gram_plus_reg(real, n, ctx.wspec.c1, snr);
            const CVec z = g.llt().solve(CVec(h.adjoint() * y));
            s_hat = ctx.tf.demodulate(z); // A z
        }
    }

    const Bits rx_bits = demap_hard(s_hat.head(ctx.n_active), ctx.con);
    TrialCount out;
    out.errors = count_bit_errors(tx_bits, rx_bits);
    out.bits = tx_bits.size();
    return out;
}

// Run trials [begin, end) split across workers; integer merge keeps the
// result independent of the split.
template <typename TrialFn>
TrialCount run_chunk(const ExperimentConfig& cfg, int snr_index, int begin,
                     int end, TrialFn&& trial) {
    const int count = end - begin;
    const int workers = std::max(1, std::min(cfg.workers, count));

    std::vector<TrialCount> partial(workers);
    std::vector<std::exception_ptr> errors(workers);
    auto body = [&](int w) {
        try {
            for (int t = begin + w; t < end; t += workers) {
                Rng rng(trial_seed(cfg.master_seed, snr_index, t));
                const TrialCount c = trial(rng);
                partial[w].errors += c.errors;
                partial[w].bits += c.bits;
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };

    if (workers == 1) {
        body(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(body, w);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    TrialCount total;
    for (const auto& p : partial) {
        total.errors += p.errors;
        total.bits += p.bits;
    }
    return total;
}

} // namespace

double ExperimentConfig::resolved_c1() const {
    switch (c1_mode) {
        case C1Mode::explicit_value: return spec.c1;
        case C1Mode::full_diversity: return c1_full_diversity(profile.nu_max, spec.n);
        case C1Mode::overlap: return c1_overlap_approx(overlap_d);
    }
    return spec.c1;
}

int ExperimentConfig::resolved_cpp_len() const {
    return cpp_len >= 0 ? cpp_len : profile.ell_max;
}

int ExperimentConfig::resolved_active() const {
    return active_count >= 0 ? active_count : spec.n;
}

void ExperimentConfig::validate() const {
    spec.validate();
    if (order != 4 && order != 16 && order != 64)
        throw std::invalid_argument("unsupported constellation order");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    if (snr_grid_db.empty())
        throw std::invalid_argument("empty SNR grid");
    for (std::size_t i = 1; i < snr_grid_db.size(); ++i)
        if (snr_grid_db[i] <= snr_grid_db[i - 1])
            throw std::invalid_argument("SNR grid must be strictly increasing");
    if (resolved_active() < 1 || resolved_active() > spec.n)
        throw std::invalid_argument("active symbol count out of [1, N]");
    if (channel == ChannelKind::doubly_selective) {
        profile.validate();
        if (profile.ell_max >= spec.n)
            throw std::invalid_argument("ell_max must be < N");
        const int l = resolved_cpp_len();
        if (l < profile.ell_max || l >= spec.n)
            throw std::invalid_argument("CPP length out of [ell_max, N)");
    }
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t snr_index,
                         std::uint64_t trial_index) {
    // splitmix64 finalizer chain over the three inputs; golden-ratio strides
    // keep consecutive indices far apart in state space
    constexpr std::uint64_t phi = 0x9E3779B97F4A7C15ULL;
    std::uint64_t h = mix64(master_seed ^ 0x6A09E667F3BCC909ULL);
    h = mix64(h ^ ((snr_index + 1) * phi));
    h = mix64(h ^ ((trial_index + 1) * phi));
    return h;
}

MetricSeries run_ber_sweep(const ExperimentConfig& cfg) {
    cfg.validate();
    SweepContext ctx(cfg);

    MetricSeries series;
    series.reserve(cfg.snr_grid_db.size());
    for (std::size_t si = 0; si < cfg.snr_grid_db.size(); ++si) {
        const double snr = db_to_linear(cfg.snr_grid_db[si]);
        BerAccumulator acc;
        for (int t0 = 0; t0 < cfg.trials; t0 += kChunk) {
            const int t1 = std::min(cfg.trials, t0 + kChunk);
            const TrialCount c =
                run_chunk(cfg, static_cast<int>(si), t0, t1,
                          [&](Rng& rng) { return run_ber_trial(ctx, snr, rng); });
            acc.add(c.errors, c.bits);
            if (cfg.early_stop &&
                acc.errors >= static_cast<std::uint64_t>(cfg.early_stop_errors))
                break;
        }
        series.push_back(
            {cfg.snr_grid_db[si], acc.ber(), acc.errors, acc.bits});
    }
    return series;
}

MetricSeries run_papr_sweep(const ExperimentConfig& cfg, int frames,
                            const std::vector<double>& thresholds_db) {
    if (frames < 1) throw std::invalid_argument("frames must be >= 1");
    cfg.spec.validate();
    SweepContext ctx(cfg);
    const int bps = ctx.con.bits_per_symbol();
    const bool bound_check =
        ctx.wspec.kind == Waveform::ia2fdm && ctx.con.constant_modulus();

    std::vector<double> values(frames);
    for (int fr = 0; fr < frames; ++fr) {
        Rng rng(trial_seed(cfg.master_seed, 0, fr));
        const Bits bits = random_bits(rng, ctx.n_active * bps);
        CVec s = CVec::Zero(ctx.wspec.n);
        s.head(ctx.n_active) = map_bits(bits, ctx.con);
        const double v = papr(ctx.tf.modulate(s));
        if (bound_check && v > ctx.wspec.mu + 1e-9)
            throw std::logic_error("IA2FDM PAPR exceeded mu");
        values[fr] = v;
    }
    return ccdf(values, thresholds_db);
}

} // namespace a2fdm
