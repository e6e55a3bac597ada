// effective.hpp - effective end-to-end channel A H A^H, closed-form element
// analysis, banded support windows, and the c1 diversity rules

#pragma once

#include "a2fdm/channel.hpp"
#include "a2fdm/transforms.hpp"
#include <vector>

namespace a2fdm {

// H_i = A Gamma_cpp_i Delta_f_i Pi^ell_i A^H for one unit-gain path
CMat path_component(const CMat& a, const ChannelRealization& r, int path,
                    double c1);

// H_eff = A H A^H. Built as sum_i h_i (A Gamma_i Delta_i Pi^ell_i) times A^H
// so only one dense product is paid.
CMat effective_channel(const CMat& a, const ChannelRealization& r, double c1);

// Which geometric-series length the closed-form element uses. The full_n
// reading (N terms, 1/N prefactor) reproduces the dense H_i of the c2=0
// chirp transform exactly; the subblock_mu reading (mu terms, 1/mu) is kept
// for the |element| <= 1 band-decay analysis. See README for the comparison.
enum class SumTerms { full_n, subblock_mu };

// Closed-form H_i[p,q] = (prefactor) * e^{j 2pi/N (N c1 l^2 - q l)} * F_i(p,q)
Cx closed_form_element(const WaveformSpec& spec, const ChannelRealization& r,
                       int path, int p, int q,
                       SumTerms terms = SumTerms::full_n);

// eta_i = round(nu_i + 2 N c1 ell_i) reduced into [0, N)
int eta_index(const WaveformSpec& spec, const ChannelRealization& r, int path);

// Per-path banded column windows of width 2*zeta+1 centered at
// q = (p + eta_i) mod N; zeta = 0 gives the integer-Doppler singleton.
class BandedSupport {
public:
    BandedSupport(const WaveformSpec& spec, const ChannelRealization& r,
                  int zeta);

    int zeta() const { return zeta_; }
    int eta(int path) const { return eta_[path]; }
    int center(int path, int row) const;
    std::vector<int> window(int path, int row) const; // wraps mod N
    bool contains(int path, int row, int col) const;

private:
    int n_;
    int zeta_;
    std::vector<int> eta_;
};

BandedSupport banded_support(const WaveformSpec& spec,
                             const ChannelRealization& r, int zeta);

// Smallest zeta whose window captures at least energy_fraction of every
// row's energy of the dense per-path component h_i_dense (the oracle).
int select_zeta(const CMat& h_i_dense, int eta, double energy_fraction = 0.99);

// c1 = (2 nu_max + 1) / (2 N gap); strictly above the full-diversity bound
double c1_full_diversity(double nu_max, int n, int min_delay_gap = 1);

// exact overlap value (dN + nu_i - nu_j) / (2N (ell_j - ell_i))
double c1_overlap_exact(int d, double nu_i, double nu_j, int ell_i, int ell_j,
                        int n);

// the d/(2*gap) approximation used for the "bad c1" sweeps
double c1_overlap_approx(int d, int min_delay_gap = 1);

// min(N_mu, L) for A2FDM kinds; L for AFDM/OFDM (1 if overlap_c1)
int predicted_diversity_order(const WaveformSpec& spec, int paths,
                              bool overlap_c1 = false);

} // namespace a2fdm
