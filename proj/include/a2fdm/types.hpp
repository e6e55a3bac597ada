// types.hpp - shared numeric types and small helpers

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

namespace a2fdm {

using Cx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// exp(+j*2*pi*cycles) with argument reduction, so large quadratic-phase
// exponents (c1*N^2 and friends) keep full precision.
inline Cx unit_phase(double cycles) {
    const double r = cycles - std::round(cycles);
    return {std::cos(kTwoPi * r), std::sin(kTwoPi * r)};
}

// x mod n normalized into [0, n)
inline int mod_n(long long x, int n) {
    long long r = x % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

// Q(x) = P(N(0,1) > x)
inline double q_func(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

} // namespace a2fdm
