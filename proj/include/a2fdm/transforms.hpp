// transforms.hpp - DAFT / DA2FT transform matrices, modulation and the
// chirp-periodic prefix
//
// Sign convention used throughout: the DFT matrix F has entries
// F[m,n] = exp(-j*2*pi*m*n/N)/sqrt(N) and the chirp diagonals are
// Lambda_c = diag(exp(-j*2*pi*c*n^2)). With A = Lambda_c2 * F * Lambda_c1
// (AFDM) the modulator x = A^H s then evaluates to
//   x_n = (1/sqrt(N)) sum_m exp(+j*2*pi*(c1 n^2 + mn/N + c2 m^2)) s_m,
// and the A2FDM sub-block DFT F_{N_mu} uses the same forward sign, which
// makes the interleaved/localized closed-form sample generators below agree
// with the dense A^H s product. This is the one place the convention lives.

#pragma once

#include "a2fdm/modem.hpp"
#include "a2fdm/types.hpp"

namespace a2fdm {

enum class Waveform { ofdm, afdm, ia2fdm, la2fdm };
enum class Mapping { interleaved, localized };

const char* to_string(Waveform w);
Waveform waveform_from_string(const std::string& s);

struct WaveformSpec {
    Waveform kind = Waveform::afdm;
    int n = 256;      // subcarrier count
    int mu = 1;       // sub-block count (A2FDM kinds)
    double c1 = 0.0;
    double c2 = 0.0;  // AFDM only

    int n_sub() const { return n / mu; } // N_mu
    bool is_a2fdm() const {
        return kind == Waveform::ia2fdm || kind == Waveform::la2fdm;
    }
    void validate() const; // throws std::invalid_argument
};

// diag(exp(-j*2*pi*c*n^2)), n = 0..N-1
CVec chirp_diag(int n, double c);
CMat chirp_matrix(int n, double c);

// forward unitary DFT, entries exp(-j*2*pi*m*n/N)/sqrt(N)
CMat dft_matrix(int n);

// Upsilon_mu = I_mu (x) F_{N_mu}; requires mu | n
CMat subblock_dft(int n, int mu);

// Interleaved: column k*N_mu+p is e_{p*mu+k}. Localized: identity.
CMat permutation_matrix(int n, int mu, Mapping m);

// The unitary transform A of the given waveform (dense reference).
CMat build_transform(const WaveformSpec& spec);

// Caches A for repeated modulate/demodulate calls.
class Transform {
public:
    explicit Transform(const WaveformSpec& spec);

    const WaveformSpec& spec() const { return spec_; }
    const CMat& matrix() const { return a_; }

    CVec modulate(const CVec& s) const;   // x = A^H s
    CVec demodulate(const CVec& y) const; // r = A y

private:
    WaveformSpec spec_;
    CMat a_;
};

// Chirp-periodic prefix: prefix sample at n in [-L_cpp, 0) equals
// exp(-j*2*pi*c1*(N^2 + 2*N*n)) * x[n+N]. Reduces to the plain CP for c1=0.
CVec add_cpp(const WaveformSpec& spec, const CVec& x, int l_cpp);
CVec strip_cpp(const CVec& extended, int l_cpp);

// Closed-form sample generators; both must agree with Transform::modulate.
CVec ia2fdm_samples_closed_form(const WaveformSpec& spec, const CVec& s);
CVec la2fdm_samples_closed_form(const WaveformSpec& spec, const CVec& s);

} // namespace a2fdm
