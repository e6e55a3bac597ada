#include "a2fdm/effective.hpp"

#include <cmath>
#include <stdexcept>

namespace a2fdm {
namespace {

// columns of A * Gamma_i * Delta_i * Pi^ell: column q of the product is
// column (q+ell mod N) of A scaled by the diagonal factor at that index.
CMat left_product(const CMat& a, const ChannelRealization& r, int path,
                  double c1) {
    const int n = static_cast<int>(a.rows());
    const int ell = r.delay[path];
    const double f = r.doppler[path] / n;

    CMat out(n, n);
    for (int q = 0; q < n; ++q) {
        const int src = mod_n(q + ell, n);
        Cx d = unit_phase(-f * src);
        if (src < ell)
            d *= unit_phase(-c1 * (static_cast<double>(n) * n -
                                   2.0 * n * (ell - src)));
        out.col(q) = a.col(src) * d;
    }
    return out;
}

} // namespace

CMat path_component(const CMat& a, const ChannelRealization& r, int path,
                    double c1) {
    return left_product(a, r, path, c1) * a.adjoint();
}

CMat effective_channel(const CMat& a, const ChannelRealization& r, double c1) {
    const int n = static_cast<int>(a.rows());
    CMat left = CMat::Zero(n, n);
    for (int i = 0; i < r.path_count(); ++i)
        left += r.gain[i] * left_product(a, r, i, c1);
    return left * a.adjoint();
}

Cx closed_form_element(const WaveformSpec& spec, const ChannelRealization& r,
                       int path, int p, int q, SumTerms terms) {
    spec.validate();
    const int n = spec.n;
    const int ell = r.delay[path];
    const double nu = r.doppler[path];
    const int m = terms == SumTerms::full_n ? n : spec.mu;

    const double arg = (p - q + nu + 2.0 * n * spec.c1 * ell) / n;
    // geometric series sum_{k<m} e^{-j 2 pi k arg}
    Cx series;
    const Cx den = 1.0 - unit_phase(-arg);
    if (std::abs(den) < 1e-12) {
        series = static_cast<double>(m); // aligned: all m terms are ~1
    } else {
        series = (1.0 - unit_phase(-arg * m)) / den;
    }
    const Cx prefix =
        unit_phase((n * spec.c1 * ell * ell - static_cast<double>(q) * ell) / n);
    return prefix * series / static_cast<double>(m);
}

int eta_index(const WaveformSpec& spec, const ChannelRealization& r, int path) {
    const double eta =
        r.doppler[path] + 2.0 * spec.n * spec.c1 * r.delay[path];
    return mod_n(std::llround(eta), spec.n);
}

BandedSupport::BandedSupport(const WaveformSpec& spec,
                             const ChannelRealization& r, int zeta)
    : n_(spec.n), zeta_(zeta) {
    if (zeta < 0) throw std::invalid_argument("zeta must be >= 0");
    eta_.reserve(r.path_count());
    for (int i = 0; i < r.path_count(); ++i)
        eta_.push_back(eta_index(spec, r, i));
}

int BandedSupport::center(int path, int row) const {
    return mod_n(row + eta_[path], n_);
}

std::vector<int> BandedSupport::window(int path, int row) const {
    std::vector<int> cols;
    cols.reserve(2 * zeta_ + 1);
    const int c = center(path, row);
    for (int d = -zeta_; d <= zeta_; ++d) cols.push_back(mod_n(c + d, n_));
    return cols;
}

bool BandedSupport::contains(int path, int row, int col) const {
    const int d = mod_n(col - center(path, row), n_);
    return d <= zeta_ || d >= n_ - zeta_;
}

BandedSupport banded_support(const WaveformSpec& spec,
                             const ChannelRealization& r, int zeta) {
    return BandedSupport(spec, r, zeta);
}

int select_zeta(const CMat& h_i_dense, int eta, double energy_fraction) {
    const int n = static_cast<int>(h_i_dense.rows());
    for (int zeta = 0; zeta <= n / 2; ++zeta) {
        bool ok = true;
        for (int p = 0; p < n && ok; ++p) {
            const double total = h_i_dense.row(p).squaredNorm();
            if (total == 0.0) continue;
            double captured = 0.0;
            const int c = mod_n(p + eta, n);
            for (int d = -zeta; d <= zeta; ++d)
                captured += std::norm(h_i_dense(p, mod_n(c + d, n)));
            if (captured < energy_fraction * total) ok = false;
        }
        if (ok) return zeta;
    }
    return n / 2;
}

double c1_full_diversity(double nu_max, int n, int min_delay_gap) {
    if (n < 2) throw std::invalid_argument("N must be >= 2");
    if (min_delay_gap < 1) throw std::invalid_argument("delay gap must be >= 1");
    return (2.0 * nu_max + 1.0) / (2.0 * n * min_delay_gap);
}

double c1_overlap_exact(int d, double nu_i, double nu_j, int ell_i, int ell_j,
                        int n) {
    if (d == 0) throw std::invalid_argument("d must be nonzero");
    if (ell_i == ell_j) throw std::invalid_argument("delays must differ");
    return (static_cast<double>(d) * n + nu_i - nu_j) /
           (2.0 * n * (ell_j - ell_i));
}

double c1_overlap_approx(int d, int min_delay_gap) {
    if (d == 0) throw std::invalid_argument("d must be nonzero");
    if (min_delay_gap < 1) throw std::invalid_argument("delay gap must be >= 1");
    return static_cast<double>(d) / (2.0 * min_delay_gap);
}

int predicted_diversity_order(const WaveformSpec& spec, int paths,
                              bool overlap_c1) {
    if (spec.is_a2fdm()) return std::min(spec.n_sub(), paths);
    return overlap_c1 ? 1 : paths;
}

} // namespace a2fdm
