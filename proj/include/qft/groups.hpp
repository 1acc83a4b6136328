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

#include <array>
#include <cassert>
#include <cmath>
#include <complex>
#include <optional>
#include <string>

#include "qft/errors.hpp"
#include "qft/moebius.hpp"

namespace qft
{

/**
 * @brief Complex Fenchel-Nielsen coordinates (lambda, tau).
 *
 * lambda is the half-length of the distinguished curve (Re lambda > 0) and
 * tau the twist-bend parameter. Construction validates the chart conditions:
 * Re lambda > 0, sinh(lambda) != 0 and cosh(tau/2) != 0.
 */
class FNCoords
{
public:
    FNCoords(Complex lambda, Complex tau) : lambda_{lambda}, tau_{tau}
    {
        if (!(lambda.real() > 0.0))
            throw Error(ErrorCode::domain, "Re(lambda) must be positive");
        if (std::abs(std::sinh(lambda)) < 1e-14)
            throw Error(ErrorCode::domain, "sinh(lambda) = 0 is not in the chart");
        if (std::abs(std::cosh(tau / 2.0)) < 1e-14)
            throw Error(ErrorCode::domain, "cosh(tau/2) = 0 is not in the chart");
    }

    Complex lambda() const { return lambda_; }
    Complex tau() const { return tau_; }

    /// Bending angle Im(tau).
    double theta() const { return tau_.imag(); }
    /// Real twist Re(tau).
    double twist() const { return tau_.real(); }

    bool lambda_is_real() const { return lambda_.imag() == 0.0; }
    bool is_fuchsian() const { return lambda_is_real() && tau_.imag() == 0.0; }

private:
    Complex lambda_;
    Complex tau_;
};

namespace detail
{
inline void require_positive_real_part(Complex lambda)
{
    if (!(lambda.real() > 0.0)) throw Error(ErrorCode::domain, "Re(lambda) must be positive");
}

inline Complex coth(Complex z) { return std::cosh(z) / std::sinh(z); }
}  // namespace detail

/** Hyperbolic generator S of the pair-of-pants group, trace 2cosh(lambda). */
inline MoebiusMap gen_S(Complex lambda)
{
    detail::require_positive_real_part(lambda);
    const Complex ch = std::cosh(lambda);
    return {ch, ch + 1.0, ch - 1.0, ch};
}

/** S' = T^-1 S T, the other boundary generator. */
inline MoebiusMap gen_Sprime(Complex lambda)
{
    detail::require_positive_real_part(lambda);
    const Complex ch = std::cosh(lambda);
    return {ch, ch - 1.0, ch + 1.0, ch};
}

/** Gluing map T(lambda, tau); trace 2cosh(tau/2)coth(lambda). */
inline MoebiusMap gen_T(Complex lambda, Complex tau)
{
    detail::require_positive_real_part(lambda);
    const Complex c = std::cosh(tau / 2.0);
    const Complex s = std::sinh(tau / 2.0);
    const Complex th = std::tanh(lambda / 2.0);
    return {c / th, -s, -s, c * th};
}

/** Parabolic K = S'^-1 S fixing -1. */
inline MoebiusMap gen_K(Complex lambda)
{
    detail::require_positive_real_part(lambda);
    const Complex ch2 = 2.0 * std::cosh(lambda);
    return {ch2 - 1.0, ch2, -ch2, -1.0 - ch2};
}

/** @brief The generators of the marked group G = <S, T> with cached S' and K */
struct GroupData {
    MoebiusMap S, Sprime, T, K;
    FNCoords coords;
};

inline GroupData build_group(const FNCoords& coords)
{
    const Complex lambda = coords.lambda();
    GroupData g{gen_S(lambda), gen_Sprime(lambda), gen_T(lambda, coords.tau()), gen_K(lambda),
                coords};
#ifndef NDEBUG
    const MoebiusMap conj = multiply(g.T.inverse(), multiply(g.S, g.T));
    assert(transformation_distance(conj, g.Sprime) < 1e-10 * (1.0 + std::abs(g.S.a)) *
                                                         (1.0 + std::abs(g.T.a) + std::abs(g.T.d)));
    assert(std::abs(g.K.trace() + 2.0) < 1e-10 * (1.0 + std::abs(g.K.a)));
#endif
    return g;
}

/** The analytic coordinate map h(G) = (cosh^2 lambda, e^tau). */
inline std::pair<Complex, Complex> coordinate_map(const FNCoords& coords)
{
    const Complex ch = std::cosh(coords.lambda());
    return {ch * ch, std::exp(coords.tau())};
}

/**
 * @brief A group normalized so that S0 = diag(a, 1/a), |a| > 1, and T0 fixes
 * the endpoint data T0(0) = 1, T0(inf) = x1, T0(1) = x2.
 */
struct NormalizedGroup {
    MoebiusMap S0, T0;
    Complex x1, x2;
    Complex a;
    /// Conjugating map, present when built from a GroupData.
    std::optional<MoebiusMap> R;
};

/**
 * Conjugate <S', T> into endpoint normal form.
 *
 * Throws degenerate_normalization when |e^lambda| = 1.
 */
inline NormalizedGroup normalize(const GroupData& g)
{
    const Complex lambda = g.coords.lambda();
    const Complex ch = std::cosh(lambda);
    const Complex sh = std::sinh(lambda);
    const Complex ea = std::exp(lambda);
    if (std::abs(std::abs(ea) - 1.0) < 1e-14)
        throw Error(ErrorCode::degenerate_normalization, "|e^lambda| = 1");

    // R is given projectively; scale into SL(2,C).
    const MoebiusMap R = normalized(MoebiusMap{ch / (1.0 - ch), -ch / sh, 1.0 / (1.0 - ch), 1.0 / sh});
    const MoebiusMap Rinv = R.inverse();

    NormalizedGroup n;
    n.S0 = multiply(R, multiply(g.Sprime, Rinv));
    n.T0 = multiply(R, multiply(g.T, Rinv));
    n.x1 = qft::apply(n.T0, ExtComplex::infinity()).value();
    n.x2 = qft::apply(n.T0, Complex{1.0}).value();
    n.a = n.S0.a;
    n.R = R;
    return n;
}

/**
 * Rebuild the normalized pair from the endpoint data (x1, x2).
 *
 * a^2 = 2 x1 - 1 +- 2 sqrt(x1 (x1 - 1)); the two roots are reciprocal and
 * the one with |a^2| > 1 is kept.
 */
inline NormalizedGroup from_endpoints(Complex x1, Complex x2)
{
    constexpr double tiny = 1e-14;
    if (std::abs(x1) < tiny || std::abs(x1 - 1.0) < tiny)
        throw Error(ErrorCode::domain, "x1 must avoid 0 and 1");
    if (std::abs(x1 - x2) < tiny) throw Error(ErrorCode::domain, "x1 must differ from x2");
    if (std::abs(x2 - 1.0) < tiny) throw Error(ErrorCode::domain, "x2 must differ from 1");

    const Complex disc = 2.0 * std::sqrt(x1 * (x1 - 1.0));
    const Complex r1 = 2.0 * x1 - 1.0 + disc;
    const Complex r2 = 2.0 * x1 - 1.0 - disc;
    const double m1 = std::abs(r1), m2 = std::abs(r2);
    if (std::abs(m1 - 1.0) < 1e-12 && std::abs(m2 - 1.0) < 1e-12)
        throw Error(ErrorCode::boundary_degenerate, "both multipliers on the unit circle");
    const Complex a2 = m1 > m2 ? r1 : r2;
    const Complex a = std::sqrt(a2);

    NormalizedGroup n;
    n.a = a;
    n.S0 = {a, 0.0, 0.0, 1.0 / a};
    n.T0 = normalized(MoebiusMap{x1 * (x2 - 1.0), x1 - x2, x2 - 1.0, x1 - x2});
    n.x1 = x1;
    n.x2 = x2;
    return n;
}

/** Commutator trace tr(A B A^-1 B^-1). */
inline Complex commutator_trace(const MoebiusMap& A, const MoebiusMap& B)
{
    return multiply(multiply(A, B), multiply(A.inverse(), B.inverse())).trace();
}

/** Invert the endpoint formulas: (x1, x2) -> (cosh^2 lambda, e^tau). */
inline std::pair<Complex, Complex> endpoint_coordinates(Complex x1, Complex x2)
{
    // x2 (sech^2 + e^tau) = 1 + e^tau with sech^2 = 1/x1.
    return {x1, (1.0 - x2 / x1) / (x2 - 1.0)};
}

/**
 * Principal-branch recovery of (lambda, tau) from h(G) = (cosh^2 lambda, e^tau):
 * Re lambda > 0 with Im lambda in [-pi/2, pi/2], and Im tau in (-pi, pi].
 */
inline FNCoords coords_from_h(Complex cosh2_lambda, Complex exp_tau)
{
    const Complex ch = std::sqrt(cosh2_lambda);
    const Complex lambda = std::acosh(ch);
    if (!(lambda.real() > 0.0)) throw Error(ErrorCode::out_of_chart, "Re(lambda) = 0");
    return FNCoords{lambda, std::log(exp_tau)};
}

/** @brief Elementary Nielsen moves on the marked generating pair (S, T) */
enum class NielsenMove {
    left_multiply_S,      ///< (S, T) -> (S, S T)
    left_multiply_Sinv,   ///< (S, T) -> (S, S^-1 T)
    invert_T,             ///< (S, T) -> (S, T^-1)
    swap,                 ///< (S, T) -> (T, S^-1)
};

inline constexpr std::array<NielsenMove, 4> kAllNielsenMoves{
    NielsenMove::left_multiply_S, NielsenMove::left_multiply_Sinv, NielsenMove::invert_T,
    NielsenMove::swap};

inline const char* to_string(NielsenMove m)
{
    switch (m) {
        case NielsenMove::left_multiply_S: return "T->ST";
        case NielsenMove::left_multiply_Sinv: return "T->S^-1T";
        case NielsenMove::invert_T: return "T->T^-1";
        case NielsenMove::swap: return "swap";
    }
    return "?";
}

/** The new marked pair as matrices, from the old generators. */
inline std::pair<MoebiusMap, MoebiusMap> apply_move(const MoebiusMap& S, const MoebiusMap& T,
                                                    NielsenMove move)
{
    switch (move) {
        case NielsenMove::left_multiply_S: return {S, multiply(S, T)};
        case NielsenMove::left_multiply_Sinv: return {S, multiply(S.inverse(), T)};
        case NielsenMove::invert_T: return {S, T.inverse()};
        case NielsenMove::swap: return {T, S.inverse()};
    }
    return {S, T};
}

/**
 * Coordinates of the same group with respect to the moved marking.
 *
 * Both cosh(tau'/2) and sinh(tau'/2) are formed, so tau' = 2 log(c' + s') is
 * unambiguous; sinh alone cannot separate tau' from -tau'. tau' is reduced
 * into Im in (-pi, pi] (a 2 pi i shift only flips the lift of T), and
 * lambda' = acosh on the principal branch. Throws out_of_chart when
 * Re lambda' <= 0 or the chart conditions fail.
 */
inline FNCoords nielsen_move(const FNCoords& coords, NielsenMove move)
{
    const Complex lambda = coords.lambda();
    const Complex tau = coords.tau();
    const Complex ch = std::cosh(lambda), sh = std::sinh(lambda);
    const Complex c2 = std::cosh(tau / 2.0), s2 = std::sinh(tau / 2.0);

    Complex lambda_new = lambda, c_new = c2, s_new;
    switch (move) {
        case NielsenMove::left_multiply_S:
            s_new = s2 * ch - c2 * sh;
            c_new = c2 * ch - s2 * sh;
            break;
        case NielsenMove::left_multiply_Sinv:
            s_new = s2 * ch + c2 * sh;
            c_new = c2 * ch + s2 * sh;
            break;
        case NielsenMove::invert_T: s_new = -s2; break;
        case NielsenMove::swap:
            lambda_new = std::acosh(ch * c2 / sh);
            s_new = -s2 * sh / c2;
            c_new = ch * std::tanh(lambda_new);
            break;
    }
    if (!(lambda_new.real() > 1e-14))
        throw Error(ErrorCode::out_of_chart, "moved coordinates have Re(lambda') <= 0");

    Complex tau_new = 2.0 * std::log(c_new + s_new);
    if (tau_new.imag() > kPi) tau_new -= Complex{0.0, 2.0 * kPi};
    if (tau_new.imag() <= -kPi) tau_new += Complex{0.0, 2.0 * kPi};
    try {
        return FNCoords{lambda_new, tau_new};
    } catch (const Error& e) {
        throw Error(ErrorCode::out_of_chart, e.what());
    }
}

}  // namespace qft
