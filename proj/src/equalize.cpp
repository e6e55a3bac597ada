#include "a2fdm/equalize.hpp"

#include <Eigen/Cholesky>
#include <stdexcept>

namespace a2fdm {

CVec mmse_equalize(const CMat& h_eff, const CVec& r, double snr) {
    if (snr <= 0.0) throw std::invalid_argument("snr must be > 0");
    if (h_eff.rows() != h_eff.cols() || h_eff.rows() != r.size())
        throw std::invalid_argument("dimension mismatch");
    if (!h_eff.allFinite() || !r.allFinite())
        throw std::runtime_error("non-finite equalizer input");

    // s_hat = H^H (H H^H + I/snr)^-1 r via Cholesky of the HPD system
    CMat g = h_eff * h_eff.adjoint();
    g.diagonal().array() += 1.0 / snr;
    const CVec z = g.llt().solve(r);
    return h_eff.adjoint() * z;
}

CVec mmse_equalize_reference(const CMat& h_eff, const CVec& r, double snr) {
    CMat g = h_eff * h_eff.adjoint();
    g.diagonal().array() += 1.0 / snr;
    const CMat w = g.inverse() * h_eff;
    return w.adjoint() * r;
}

} // namespace a2fdm
