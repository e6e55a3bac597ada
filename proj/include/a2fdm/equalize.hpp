// equalize.hpp - linear MMSE equalization of the effective channel

#pragma once

#include "a2fdm/types.hpp"

namespace a2fdm {

// s_hat = W^H r with W = (H H^H + I/snr)^-1 H, computed by Cholesky solve
// of the Hermitian positive-definite system (never by explicit inversion).
CVec mmse_equalize(const CMat& h_eff, const CVec& r, double snr);

// Literal explicit-inverse evaluation; test oracle only.
CVec mmse_equalize_reference(const CMat& h_eff, const CVec& r, double snr);

} // namespace a2fdm
