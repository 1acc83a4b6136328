/*
Copyright 2026 The qft Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include "qft/errors.hpp"
#include "qft/groups.hpp"
#include "qft/moebius.hpp"
#include "qft/pleating.hpp"

namespace qft
{

/** @brief zw = t gluing constant and its logarithmic form mu, t = e^{i pi mu} */
struct PlumbingParams {
    Complex t;
    Complex mu;
};

/** Maskit/plumbing parameter mu = (i pi - tau) / lambda. */
inline Complex mu_of(const FNCoords& coords)
{
    return (Complex{0.0, kPi} - coords.tau()) / coords.lambda();
}

/** Inverse of mu_of on a real lambda-slice: tau = i pi - lambda mu. */
inline FNCoords coords_of_mu(double lambda, Complex mu)
{
    if (!(lambda > 0.0)) throw Error(ErrorCode::domain, "lambda must be positive");
    return FNCoords{lambda, Complex{0.0, kPi} - lambda * mu};
}

/** t = exp(-pi^2/lambda - i pi tau/lambda); lambda must be real. */
inline Complex plumbing_t(const FNCoords& coords)
{
    if (!coords.lambda_is_real()) throw Error(ErrorCode::domain, "plumbing parameter needs real lambda");
    const double lambda = coords.lambda().real();
    return std::exp(-kPi * kPi / lambda - Complex{0.0, kPi} * coords.tau() / lambda);
}

inline PlumbingParams plumbing_params(const FNCoords& coords)
{
    return {plumbing_t(coords), mu_of(coords)};
}

/** T written in (lambda, mu); the same lift as gen_T(lambda, i pi - lambda mu). */
inline MoebiusMap gen_T_mu(double lambda, Complex mu)
{
    if (!(lambda > 0.0)) throw Error(ErrorCode::domain, "lambda must be positive");
    const Complex mi{0.0, -1.0};
    const Complex sh = std::sinh(lambda * mu / 2.0);
    const Complex chm = std::cosh(lambda * mu / 2.0);
    const double th = std::tanh(lambda / 2.0);
    return {mi * sh / th, mi * chm, mi * chm, mi * sh * th};
}

/** Maskit normal form S0 = [[1,2],[0,1]], T0 = [[-i mu, -i],[-i, 0]]. */
inline std::pair<MoebiusMap, MoebiusMap> maskit_generators(Complex mu)
{
    const Complex mi{0.0, -1.0};
    return {MoebiusMap{1.0, 2.0, 0.0, 1.0}, MoebiusMap{mi * mu, mi, mi, 0.0}};
}

/**
 * Distance of (S(lambda), T(lambda, mu)) from the Maskit pair: max entrywise
 * modulus over both generators, each lift sign chosen to minimize.
 */
inline double maskit_limit_error(double lambda, Complex mu)
{
    const auto [S0, T0] = maskit_generators(mu);
    return std::max(transformation_distance(gen_S(lambda), S0),
                    transformation_distance(gen_T_mu(lambda, mu), T0));
}

/** Tame range of Im(mu): ((pi - theta0)/lambda, pi/lambda). */
inline std::pair<double, double> tame_mu_interval(double lambda)
{
    const double th0 = theta0(lambda);
    return {(kPi - th0) / lambda, kPi / lambda};
}

namespace detail
{
// exp((pi i / lambda) Log(num/den)), rejecting the cut of the principal log.
inline Complex annulus_coordinate(Complex num, Complex den, double lambda)
{
    if (den == Complex{0.0} || num == Complex{0.0})
        throw Error(ErrorCode::branch_cut, "ratio is 0 or infinite");
    const Complex ratio = num / den;
    if (ratio.real() < 0.0 && std::abs(ratio.imag()) <= 1e-15 * std::abs(ratio))
        throw Error(ErrorCode::branch_cut, "ratio on the negative real axis");
    return std::exp(Complex{0.0, kPi / lambda} * std::log(ratio));
}
}  // namespace detail

/**
 * Local coordinate at the end of the pants whose core is the axis of S.
 * Maps the upper half-plane into e^{-pi^2/lambda} < |z| < 1.
 */
inline Complex z_coord(Complex P, double lambda)
{
    if (!(lambda > 0.0)) throw Error(ErrorCode::domain, "lambda must be positive");
    const double sh = std::sinh(lambda / 2.0), ch = std::cosh(lambda / 2.0);
    return detail::annulus_coordinate(P * sh + ch, -P * sh + ch, lambda);
}

/** Local coordinate at the end whose core is the axis of S'. */
inline Complex w_coord(Complex Q, double lambda)
{
    if (!(lambda > 0.0)) throw Error(ErrorCode::domain, "lambda must be positive");
    const double sh = std::sinh(lambda / 2.0), ch = std::cosh(lambda / 2.0);
    return detail::annulus_coordinate(Q * ch - sh, Q * ch + sh, lambda);
}

}  // namespace qft
