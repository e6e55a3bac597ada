// main.cpp - command-line frontend: ber / papr / channel-demo subcommands,
// CSV emission with a replayable key=value manifest next to every output.

#include "a2fdm/effective.hpp"
#include "a2fdm/harness.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

constexpr const char* kVersion = "1.0.0";

// 10 significant digits, locale-independent, so CSV byte-exactness is
// well-defined across runs and worker counts
std::string fmt(double v) {
    char buf[64];
    const auto res =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 10);
    return std::string(buf, res.ptr);
}

// shortest round-trip representation, for manifest values that must replay
// to the identical double
std::string fmt_exact(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::vector<double> parse_grid(const std::string& text) {
    double lo, step, hi;
    char colon1, colon2;
    std::istringstream is(text);
    if (!(is >> lo >> colon1 >> step >> colon2 >> hi) || colon1 != ':' ||
        colon2 != ':' || step <= 0.0 || hi < lo)
        throw CLI::ValidationError("grid", "expected lo:step:hi with step > 0");
    std::vector<double> grid;
    for (int k = 0;; ++k) {
        const double v = lo + k * step;
        if (v > hi + 1e-9) break;
        grid.push_back(v);
    }
    return grid;
}

struct CommonArgs {
    std::string waveform = "afdm";
    int n = 256;
    int mu = 1;
    std::string c1 = "auto"; // auto | bad:<d> | literal real
    double c2 = 0.0;
    int order = 4;
    int paths = 10;
    int ell_max = 30;
    double nu_max = 0.0;
    std::string doppler = "fractional";
    std::string channel = "fading";
    std::string equalizer = "time-domain";
    int cpp = -1;
    int active = -1;
    std::uint64_t seed = 1;
    int workers = 1;
    std::string preset;
    std::string out;
};

void add_common(CLI::App* cmd, CommonArgs& a, const std::string& default_out) {
    a.out = default_out;
    cmd->add_option("--waveform", a.waveform, "ofdm | afdm | ia2fdm | la2fdm")
        ->check(CLI::IsMember({"ofdm", "afdm", "ia2fdm", "la2fdm"}));
    cmd->add_option("--n", a.n, "subcarrier count");
    cmd->add_option("--mu", a.mu, "sub-block count (A2FDM waveforms)");
    cmd->add_option("--c1", a.c1,
                    "chirp rate: auto (full diversity), bad:<d> (support "
                    "overlap), or a literal value");
    cmd->add_option("--c2", a.c2, "second chirp rate (AFDM only)");
    cmd->add_option("--order", a.order, "QAM order: 4, 16 or 64");
    cmd->add_option("--paths", a.paths, "channel path count L");
    cmd->add_option("--ell-max", a.ell_max, "maximum path delay");
    cmd->add_option("--nu-max", a.nu_max, "maximum normalized Doppler");
    cmd->add_option("--doppler", a.doppler, "fractional | integer")
        ->check(CLI::IsMember({"fractional", "integer"}));
    cmd->add_option("--channel", a.channel, "fading | awgn")
        ->check(CLI::IsMember({"fading", "awgn"}));
    cmd->add_option("--equalizer", a.equalizer,
                    "time-domain (fast) | dense (reference)")
        ->check(CLI::IsMember({"time-domain", "dense"}));
    cmd->add_option("--cpp", a.cpp, "prefix length (-1: ell-max)");
    cmd->add_option("--active", a.active, "activated symbols N_A (-1: all N)");
    cmd->add_option("--seed", a.seed, "master seed");
    cmd->add_option("--workers", a.workers, "worker thread count")
        ->envname("A2FDM_WORKERS");
    cmd->add_option("--preset", a.preset, "table1: 3.5 GHz / 30 kHz / 100 km/h "
                                          "profile, N=256, L=10, 4QAM")
        ->check(CLI::IsMember({"table1"}));
    cmd->add_option("--out", a.out, "output CSV path");
    cmd->configurable();
    cmd->fallthrough(true);
}

a2fdm::ExperimentConfig build_config(const CLI::App* cmd, const CommonArgs& a) {
    CommonArgs r = a;
    if (a.preset == "table1") {
        // preset supplies defaults; explicitly given flags win
        if (!cmd->count("--n")) r.n = 256;
        if (!cmd->count("--paths")) r.paths = 10;
        if (!cmd->count("--order")) r.order = 4;
        if (!cmd->count("--nu-max"))
            r.nu_max =
                a2fdm::doppler_from_kinematics(100.0 / 3.6, 3.5e9, 30.0e3);
    }

    a2fdm::ExperimentConfig cfg;
    cfg.spec.kind = a2fdm::waveform_from_string(r.waveform);
    cfg.spec.n = r.n;
    cfg.spec.mu = cfg.spec.is_a2fdm() ? r.mu : 1;
    cfg.spec.c2 = r.c2;
    cfg.order = r.order;
    cfg.profile = a2fdm::ChannelProfile::uniform(r.paths, r.ell_max, r.nu_max);
    cfg.channel = r.channel == "awgn" ? a2fdm::ChannelKind::awgn
                                      : a2fdm::ChannelKind::doubly_selective;
    cfg.doppler = r.doppler == "integer" ? a2fdm::DopplerMode::integer
                                         : a2fdm::DopplerMode::fractional;
    cfg.equalizer = r.equalizer == "dense" ? a2fdm::EqualizerPath::dense_heff
                                           : a2fdm::EqualizerPath::time_domain;
    cfg.cpp_len = r.cpp;
    cfg.active_count = r.active;
    cfg.master_seed = r.seed;
    cfg.workers = r.workers;

    if (r.c1 == "auto") {
        cfg.c1_mode = a2fdm::C1Mode::full_diversity;
    } else if (r.c1.rfind("bad:", 0) == 0) {
        cfg.c1_mode = a2fdm::C1Mode::overlap;
        cfg.overlap_d = std::stoi(r.c1.substr(4));
    } else {
        cfg.c1_mode = a2fdm::C1Mode::explicit_value;
        std::size_t used = 0;
        cfg.spec.c1 = std::stod(r.c1, &used);
        if (used != r.c1.size())
            throw std::invalid_argument("--c1 expects auto, bad:<d> or a real");
    }
    return cfg;
}

// Flat key=value manifest; re-running `<cmd> --config <manifest>` reproduces
// the CSV byte-exactly. Metadata rides along as comments.
void write_manifest(const std::string& csv_path, const char* subcommand,
                    const CommonArgs& a, const a2fdm::ExperimentConfig& cfg,
                    const std::map<std::string, std::string>& extra,
                    double runtime_s) {
    std::ofstream f(csv_path + ".manifest");
    if (!f) throw std::runtime_error("cannot write manifest for " + csv_path);
    f << "# version " << kVersion << "\n";
    f << "# runtime_seconds " << fmt(runtime_s) << "\n";
    f << "[" << subcommand << "]\n";
    f << "waveform=" << a.waveform << "\n";
    f << "n=" << cfg.spec.n << "\n";
    f << "mu=" << cfg.spec.mu << "\n";
    f << "c1=" << a.c1 << "\n";
    f << "c2=" << fmt_exact(cfg.spec.c2) << "\n";
    f << "order=" << cfg.order << "\n";
    f << "paths=" << cfg.profile.paths << "\n";
    f << "ell-max=" << cfg.profile.ell_max << "\n";
    f << "nu-max=" << fmt_exact(cfg.profile.nu_max) << "\n";
    f << "doppler=" << a.doppler << "\n";
    f << "channel=" << a.channel << "\n";
    f << "equalizer=" << a.equalizer << "\n";
    f << "cpp=" << cfg.cpp_len << "\n";
    f << "active=" << cfg.active_count << "\n";
    f << "seed=" << cfg.master_seed << "\n";
    f << "workers=" << cfg.workers << "\n";
    if (!a.preset.empty()) f << "preset=" << a.preset << "\n";
    for (const auto& [k, v] : extra) f << k << "=" << v << "\n";
    f << "out=" << a.out << "\n";
}

void write_series(const std::string& path, const char* header,
                  const a2fdm::MetricSeries& series) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << header << "\n";
    for (const auto& pt : series)
        f << fmt(pt.x) << ',' << fmt(pt.value) << ',' << pt.count << ','
          << pt.total << "\n";
}

int cmd_ber(const CLI::App* cmd, const CommonArgs& a, const std::string& snr,
            int trials, bool early_stop, int early_stop_errors) {
    auto cfg = build_config(cmd, a);
    cfg.snr_grid_db = parse_grid(snr);
    cfg.trials = trials;
    cfg.early_stop = early_stop;
    cfg.early_stop_errors = early_stop_errors;

    const auto t0 = std::chrono::steady_clock::now();
    const a2fdm::MetricSeries series = a2fdm::run_ber_sweep(cfg);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();

    write_series(a.out, "snr_db,ber,bit_errors,bits", series);
    write_manifest(a.out, "ber", a, cfg,
                   {{"snr", snr},
                    {"trials", std::to_string(trials)},
                    {"early-stop", early_stop ? "true" : "false"},
                    {"early-stop-errors", std::to_string(early_stop_errors)}},
                   secs);
    return 0;
}

int cmd_papr(const CLI::App* cmd, const CommonArgs& a,
             const std::string& thresholds, int frames) {
    auto cfg = build_config(cmd, a);
    cfg.snr_grid_db = {0.0}; // unused by the PAPR sweep, keeps validate happy

    const auto t0 = std::chrono::steady_clock::now();
    const a2fdm::MetricSeries series =
        a2fdm::run_papr_sweep(cfg, frames, parse_grid(thresholds));
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();

    write_series(a.out, "threshold_db,ccdf,count,frames", series);
    write_manifest(a.out, "papr", a, cfg,
                   {{"thresholds", thresholds},
                    {"frames", std::to_string(frames)}},
                   secs);
    return 0;
}

int cmd_channel_demo(const CLI::App* cmd, const CommonArgs& a,
                     double support_threshold) {
    auto cfg = build_config(cmd, a);
    a2fdm::WaveformSpec wspec = cfg.spec;
    wspec.c1 = cfg.resolved_c1();
    if (wspec.kind == a2fdm::Waveform::ofdm) wspec.c1 = 0.0;
    wspec.validate();

    const auto t0 = std::chrono::steady_clock::now();
    a2fdm::Rng rng(a2fdm::trial_seed(cfg.master_seed, 0, 0));
    const a2fdm::ChannelRealization real =
        a2fdm::sample_realization(cfg.profile, rng, cfg.doppler);
    const a2fdm::Transform tf(wspec);
    const a2fdm::CMat h_eff =
        a2fdm::effective_channel(tf.matrix(), real, wspec.c1);

    std::ofstream f(a.out);
    if (!f) throw std::runtime_error("cannot write " + a.out);
    f << "row,col,abs\n";
    for (int p = 0; p < wspec.n; ++p)
        for (int q = 0; q < wspec.n; ++q) {
            const double mag = std::abs(h_eff(p, q));
            if (mag > support_threshold)
                f << p << ',' << q << ',' << fmt(mag) << "\n";
        }

    // per-path banded-support report (99% energy rule)
    for (int i = 0; i < real.path_count(); ++i) {
        const a2fdm::CMat h_i = real.gain[i] *
                                a2fdm::path_component(tf.matrix(), real, i,
                                                      wspec.c1);
        const int eta = a2fdm::eta_index(wspec, real, i);
        const int zeta = a2fdm::select_zeta(h_i, eta);
        std::cout << "path " << i << " delay " << real.delay[i] << " doppler "
                  << fmt(real.doppler[i]) << " eta " << eta << " zeta " << zeta
                  << " width " << (2 * zeta + 1) << "\n";
    }

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    write_manifest(a.out, "channel-demo", a, cfg,
                   {{"threshold", fmt(support_threshold)}}, secs);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"AFDM / A2FDM link-level simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    app.set_config("--config", "",
                   "key=value config or manifest file; flags override");

    CommonArgs ber_args, papr_args, demo_args;
    std::string snr = "0:2:20";
    int trials = 1000;
    bool early_stop = false;
    int early_stop_errors = 200;
    std::string thresholds = "0:0.25:12";
    int frames = 10000;
    double support_threshold = 1e-9;

    CLI::App* ber = app.add_subcommand("ber", "BER vs SNR sweep");
    add_common(ber, ber_args, "ber.csv");
    ber->add_option("--snr", snr, "SNR grid in dB as lo:step:hi");
    ber->add_option("--trials", trials, "frames per SNR point");
    ber->add_flag("--early-stop", early_stop,
                  "stop a point once enough bit errors are collected");
    ber->add_option("--early-stop-errors", early_stop_errors,
                    "bit-error target for --early-stop");

    CLI::App* papr = app.add_subcommand("papr", "PAPR CCDF over random frames");
    add_common(papr, papr_args, "papr.csv");
    papr->add_option("--thresholds", thresholds,
                     "PAPR thresholds in dB as lo:step:hi");
    papr->add_option("--frames", frames, "number of random frames");

    CLI::App* demo = app.add_subcommand(
        "channel-demo", "effective-channel magnitude dump for one realization");
    add_common(demo, demo_args, "heff.csv");
    demo->add_option("--threshold", support_threshold,
                     "magnitude cutoff for emitted entries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // any parse failure is a usage error
    }

    try {
        if (ber->parsed())
            return cmd_ber(ber, ber_args, snr, trials, early_stop,
                           early_stop_errors);
        if (papr->parsed())
            return cmd_papr(papr, papr_args, thresholds, frames);
        return cmd_channel_demo(demo, demo_args, support_threshold);
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
