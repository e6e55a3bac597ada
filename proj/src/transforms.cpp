#include "a2fdm/transforms.hpp"

#include <stdexcept>

namespace a2fdm {

const char* to_string(Waveform w) {
    switch (w) {
        case Waveform::ofdm: return "ofdm";
        case Waveform::afdm: return "afdm";
        case Waveform::ia2fdm: return "ia2fdm";
        case Waveform::la2fdm: return "la2fdm";
    }
    return "?";
}

Waveform waveform_from_string(const std::string& s) {
    if (s == "ofdm") return Waveform::ofdm;
    if (s == "afdm") return Waveform::afdm;
    if (s == "ia2fdm") return Waveform::ia2fdm;
    if (s == "la2fdm") return Waveform::la2fdm;
    throw std::invalid_argument("unknown waveform: " + s);
}

void WaveformSpec::validate() const {
    if (n < 1) throw std::invalid_argument("N must be >= 1");
    if (is_a2fdm()) {
        if (mu < 1 || n % mu != 0)
            throw std::invalid_argument("mu must divide N for A2FDM kinds");
    }
}

CVec chirp_diag(int n, double c) {
    CVec d(n);
    for (int i = 0; i < n; ++i)
        d[i] = unit_phase(-c * static_cast<double>(i) * i);
    return d;
}

CMat chirp_matrix(int n, double c) {
    return CMat(chirp_diag(n, c).asDiagonal());
}

CMat dft_matrix(int n) {
    CMat f(n, n);
    const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(n));
    for (int m = 0; m < n; ++m)
        for (int k = 0; k < n; ++k)
            f(m, k) = inv_sqrt * unit_phase(-static_cast<double>(m) * k / n);
    return f;
}

CMat subblock_dft(int n, int mu) {
    if (mu < 1 || n % mu != 0)
        throw std::invalid_argument("mu must divide N");
    const int n_mu = n / mu;
    const CMat f = dft_matrix(n_mu);
    CMat u = CMat::Zero(n, n);
    for (int k = 0; k < mu; ++k)
        u.block(k * n_mu, k * n_mu, n_mu, n_mu) = f;
    return u;
}

CMat permutation_matrix(int n, int mu, Mapping m) {
    if (mu < 1 || n % mu != 0)
        throw std::invalid_argument("mu must divide N");
    CMat p = CMat::Zero(n, n);
    if (m == Mapping::localized) {
        p.setIdentity();
        return p;
    }
    const int n_mu = n / mu;
    // source k*N_mu+p -> destination p*mu+k
    for (int k = 0; k < mu; ++k)
        for (int q = 0; q < n_mu; ++q)
            p(q * mu + k, k * n_mu + q) = 1.0;
    return p;
}

CMat build_transform(const WaveformSpec& spec) {
    spec.validate();
    const CMat f = dft_matrix(spec.n);
    switch (spec.kind) {
        case Waveform::ofdm:
            return f;
        case Waveform::afdm:
            return chirp_diag(spec.n, spec.c2).asDiagonal() * f *
                   chirp_diag(spec.n, spec.c1).asDiagonal();
        case Waveform::ia2fdm:
        case Waveform::la2fdm: {
            const Mapping m = spec.kind == Waveform::ia2fdm
                                  ? Mapping::interleaved
                                  : Mapping::localized;
            const CMat u = subblock_dft(spec.n, spec.mu);
            const CMat p = permutation_matrix(spec.n, spec.mu, m);
            return u.adjoint() * p.transpose() * f *
                   CMat(chirp_diag(spec.n, spec.c1).asDiagonal());
        }
    }
    throw std::invalid_argument("bad waveform kind");
}

Transform::Transform(const WaveformSpec& spec)
    : spec_(spec), a_(build_transform(spec)) {}

CVec Transform::modulate(const CVec& s) const {
    if (s.size() != spec_.n)
        throw std::invalid_argument("symbol vector length != N");
    return a_.adjoint() * s;
}

CVec Transform::demodulate(const CVec& y) const {
    if (y.size() != spec_.n)
        throw std::invalid_argument("sample vector length != N");
    return a_ * y;
}

CVec add_cpp(const WaveformSpec& spec, const CVec& x, int l_cpp) {
    const int n = spec.n;
    if (x.size() != n) throw std::invalid_argument("sample vector length != N");
    if (l_cpp < 1 || l_cpp >= n)
        throw std::invalid_argument("CPP length out of range [1, N)");

    CVec ext(n + l_cpp);
    for (int i = 0; i < l_cpp; ++i) {
        const int m = i - l_cpp; // m in [-L_cpp, 0)
        ext[i] = unit_phase(-spec.c1 * (static_cast<double>(n) * n +
                                        2.0 * n * m)) *
                 x[m + n];
    }
    ext.tail(n) = x;
    return ext;
}

CVec strip_cpp(const CVec& extended, int l_cpp) {
    if (l_cpp < 0 || extended.size() <= l_cpp)
        throw std::invalid_argument("extended frame shorter than CPP");
    return extended.tail(extended.size() - l_cpp);
}

CVec ia2fdm_samples_closed_form(const WaveformSpec& spec, const CVec& s) {
    if (spec.kind != Waveform::ia2fdm)
        throw std::invalid_argument("spec is not IA2FDM");
    spec.validate();
    const int n = spec.n, mu = spec.mu, n_mu = spec.n_sub();
    if (s.size() != n) throw std::invalid_argument("symbol vector length != N");

    CVec x(n);
    const double inv_sqrt_mu = 1.0 / std::sqrt(static_cast<double>(mu));
    for (int i = 0; i < n; ++i) {
        const int b = i % n_mu;
        Cx acc = 0.0;
        for (int k = 0; k < mu; ++k)
            acc += s[k * n_mu + b] *
                   unit_phase(static_cast<double>(k) * i / n);
        x[i] = inv_sqrt_mu * unit_phase(spec.c1 * static_cast<double>(i) * i) *
               acc;
    }
    return x;
}

CVec la2fdm_samples_closed_form(const WaveformSpec& spec, const CVec& s) {
    if (spec.kind != Waveform::la2fdm)
        throw std::invalid_argument("spec is not LA2FDM");
    spec.validate();
    const int n = spec.n, mu = spec.mu, n_mu = spec.n_sub();
    if (s.size() != n) throw std::invalid_argument("symbol vector length != N");

    CVec x(n);
    const double inv_sqrt_mu = 1.0 / std::sqrt(static_cast<double>(mu));
    for (int i = 0; i < n; ++i) {
        const int a = i % mu;     // position within the mu-spaced comb
        const int b = i / mu;     // comb index, n = b*mu + a
        Cx acc = 0.0;
        for (int k = 0; k < mu; ++k) {
            Cx inner;
            if (a == 0) {
                inner = s[k * n_mu + b];
            } else {
                // geometric-ratio form; numerator 1 - e^{j 2 pi n / mu}
                const Cx num = 1.0 - unit_phase(static_cast<double>(i) / mu);
                Cx sum = 0.0;
                for (int l = 0; l < n_mu; ++l) {
                    const Cx den = 1.0 - unit_phase(static_cast<double>(i) / n) *
                                             unit_phase(-static_cast<double>(l) /
                                                        n_mu);
                    if (std::abs(den) < 1e-12) {
                        // degenerate ratio: fall back to the direct inner sum
                        Cx g = 0.0;
                        for (int q = 0; q < n_mu; ++q)
                            g += unit_phase(
                                static_cast<double>(i - l * mu) * q / n);
                        sum += s[k * n_mu + l] * g;
                    } else {
                        sum += s[k * n_mu + l] * num / den;
                    }
                }
                inner = sum / static_cast<double>(n_mu);
            }
            acc += unit_phase(static_cast<double>(k) * a / mu) * inner;
        }
        x[i] = inv_sqrt_mu * unit_phase(spec.c1 * static_cast<double>(i) * i) *
               acc;
    }
    return x;
}

} // namespace a2fdm
