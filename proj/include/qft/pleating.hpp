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
#include <optional>
#include <vector>

#include "qft/errors.hpp"
#include "qft/farey.hpp"
#include "qft/groups.hpp"
#include "qft/moebius.hpp"

namespace qft
{

/** Tame bending bound: cos(theta0/2) = tanh(lambda). */
inline double theta0(double lambda)
{
    if (!(lambda > 0.0)) throw Error(ErrorCode::domain, "lambda must be positive");
    return 2.0 * std::acos(std::tanh(lambda));
}

namespace detail
{
inline double real_lambda(const FNCoords& c)
{
    if (!c.lambda_is_real()) throw Error(ErrorCode::domain, "lambda must be real");
    return c.lambda().real();
}
}  // namespace detail

/**
 * |Im tau| < theta0(lambda). True certifies quasi-Fuchsian; false says
 * nothing.
 */
inline bool is_tame(const FNCoords& coords)
{
    return std::abs(coords.theta()) < theta0(detail::real_lambda(coords));
}

/** @brief Rectangle of the tau-plane sampled on a lambda-slice */
struct LambdaSlice {
    double lambda;
    double re_min, re_max, im_min, im_max;
    int re_samples{200}, im_samples{200};

    void validate() const
    {
        if (!(lambda > 0.0)) throw Error(ErrorCode::domain, "lambda must be positive");
        if (!(im_min > -kPi && im_max < kPi && im_min < im_max && re_min < re_max))
            throw Error(ErrorCode::domain, "tau rectangle must lie in |Im tau| < pi");
        if (re_samples < 2 || im_samples < 2)
            throw Error(ErrorCode::domain, "resolution must be at least 2x2");
    }
};

/** @brief Complex shear along S with respect to T */
struct ShearValue {
    Complex sigma;
};

/**
 * sigma = tau for Im tau > 0, sigma = -tau for Im tau < 0. The identity
 * cosh(sigma/2) = tr(T) tanh(lambda) / 2 is re-checked on the way out.
 */
inline ShearValue complex_shear(const FNCoords& coords)
{
    const double lambda = detail::real_lambda(coords);
    const double theta = coords.theta();
    if (theta == 0.0) throw Error(ErrorCode::fuchsian_input, "Im(tau) = 0: no bending");
    if (!(std::abs(theta) < kPi)) throw Error(ErrorCode::domain, "|Im tau| must be below pi");

    const Complex tau = coords.tau();
    const ShearValue out{theta > 0.0 ? tau : -tau};

    const Complex lhs = std::cosh(out.sigma / 2.0);
    const Complex rhs = gen_T(lambda, tau).trace() * std::tanh(lambda) / 2.0;
    if (std::abs(lhs - rhs) > 1e-12 * std::max(1.0, std::abs(lhs)))
        throw Error(ErrorCode::domain, "shear identity failed");
    return out;
}

/**
 * Real tau minimizing |tr W_s| on the Fuchsian line of the lambda-slice.
 *
 * Brackets a sign change of d|tr|/dtau around -2 lambda p/q, narrows by
 * golden section, then polishes with Newton on the derivative.
 */
inline double fuchsian_footpoint(double lambda, const SlopeTrace& trace)
{
    const Slope& s = trace.slope();
    if (!(lambda > 0.0)) throw Error(ErrorCode::domain, "lambda must be positive");
    if (s.is_infinite()) throw Error(ErrorCode::domain, "W_inf has constant trace on the slice");

    const double limit = 2.0 * double(std::abs(s.p()) + s.q()) * lambda + 10.0;
    auto f = [&](double x) { return std::abs(trace(x).real()); };
    auto g = [&](double x) {
        const TraceJet j = trace.jet(x);
        return (j.value.real() < 0.0 ? -1.0 : 1.0) * j.d1.real();
    };

    const double center = -2.0 * lambda * s.value();
    double a = center - 0.5, b = center + 0.5;
    for (double h = 0.5; g(a) >= 0.0; h *= 2.0) {
        a = center - 0.5 - h;
        if (a < -limit) throw Error(ErrorCode::search_failure, "no bracket for " + s.str());
    }
    for (double h = 0.5; g(b) <= 0.0; h *= 2.0) {
        b = center + 0.5 + h;
        if (b > limit) throw Error(ErrorCode::search_failure, "no bracket for " + s.str());
    }

    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > 1e-6 * (1.0 + std::abs(center))) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }

    double x = 0.5 * (a + b);
    a -= 1e-6;
    b += 1e-6;
    for (int it = 0; it < 60; ++it) {
        const TraceJet j = trace.jet(x);
        const double sgn = j.value.real() < 0.0 ? -1.0 : 1.0;
        const double d1 = sgn * j.d1.real(), d2 = sgn * j.d2.real();
        if (d1 == 0.0) break;
        double next = d2 > 0.0 ? x - d1 / d2 : x;
        if (!(next > a && next < b)) next = 0.5 * (x + (d1 > 0.0 ? a : b));
        const double step = next - x;
        x = next;
        if (std::abs(step) <= 4e-16 * (1.0 + std::abs(x))) break;
    }
    const TraceJet j = trace.jet(x);
    if (std::abs(j.d1) > 1e-10 * std::max(1.0, std::abs(j.value)))
        throw Error(ErrorCode::search_failure, "Newton polish did not converge for " + s.str());
    return x;
}

inline double fuchsian_footpoint(double lambda, const Slope& s)
{
    if (s.is_infinite()) throw Error(ErrorCode::domain, "W_inf has constant trace on the slice");
    return fuchsian_footpoint(lambda, SlopeTrace(s, lambda));
}

enum class RaySide { top, bottom };

inline const char* to_string(RaySide s) { return s == RaySide::top ? "top" : "bottom"; }

/** @brief One point of a traced ray */
struct RaySample {
    Complex tau;
    Complex tr;
};

/** @brief Arc of the real locus of tr W_{p/q} from the Fuchsian line to |tr| = 2 */
struct PleatingRay {
    Slope slope{0, 1};
    double lambda{};
    RaySide side{RaySide::top};
    std::vector<RaySample> samples;  ///< arclength order, footpoint first
    double footpoint{};
    Complex endpoint{};

    /// Angle of the chord from the footpoint to the first interior sample.
    double footpoint_angle() const
    {
        if (samples.size() < 2) return 0.0;
        return std::arg(samples[1].tau - samples[0].tau);
    }
};

/** @brief Continuation failure carrying the samples traced so far */
class RayError : public Error
{
public:
    RayError(ErrorCode code, const std::string& msg, PleatingRay partial)
        : Error(code, msg), partial_{std::move(partial)}
    {
    }
    const PleatingRay& partial() const { return partial_; }

private:
    PleatingRay partial_;
};

/** @brief Continuation controls */
struct RayOptions {
    double step{0.01};           ///< nominal arclength step, capped at theta0/100
    double tol{1e-10};           ///< corrector: |Im tr| <= tol * max(1, |tr|)
    double endpoint_tol{1e-9};   ///< bisection target for | |tr| - 2 |
    double first_step{1e-4};     ///< first step off the Fuchsian line; doubled up to `step`
    double min_step{1e-13};
    int max_corrector_iterations{30};
    std::size_t max_samples{1000000};
};

namespace detail
{
struct CorrectorResult {
    bool ok;
    Complex tau;
    TraceJet jet;
};

// Newton on Im tr along the gradient of Im tr: delta = -i Im(F) / F'.
inline CorrectorResult correct(const SlopeTrace& trace, Complex guess, const RayOptions& opt)
{
    Complex z = guess;
    for (int it = 0; it <= opt.max_corrector_iterations; ++it) {
        const TraceJet j = trace.jet(z);
        if (std::abs(j.value.imag()) <= opt.tol * std::max(1.0, std::abs(j.value))) return {true, z, j};
        if (it == opt.max_corrector_iterations || std::abs(j.d1) == 0.0) break;
        z -= Complex{0.0, 1.0} * j.value.imag() / j.d1;
    }
    return {false, z, {}};
}
}  // namespace detail

/**
 * Predictor-corrector continuation of Im tr W_s = 0 from the Fuchsian
 * footpoint into the chosen half-plane, stopping where |tr| reaches 2.
 *
 * The predictor follows the tangent conj(F')/|F'| of the real locus of the
 * holomorphic trace F; the corrector is Newton on Im F along the normal. A
 * step whose corrector fails or jumps farther than the step length is
 * halved. The endpoint is found by bisection on |tr| - 2 along the curve.
 */
inline PleatingRay trace_ray(double lambda, const SlopeTrace& trace, RaySide side,
                             const RayOptions& opt = {})
{
    if (!(opt.step > 0.0 && opt.tol > 0.0)) throw Error(ErrorCode::domain, "step and tol must be positive");

    PleatingRay ray;
    ray.slope = trace.slope();
    ray.lambda = lambda;
    ray.side = side;
    ray.footpoint = fuchsian_footpoint(lambda, trace);
    ray.samples.push_back({ray.footpoint, trace(ray.footpoint)});

    const Complex up{0.0, side == RaySide::top ? 1.0 : -1.0};
    Complex dir = up;
    const double h_max = std::min(opt.step, theta0(lambda) / 100.0);
    double h = std::min(opt.first_step, h_max);
    auto fail = [&](ErrorCode code, const std::string& why) -> RayError {
        return RayError(code, trace.slope().str() + ": " + why, ray);
    };

    while (true) {
        const Complex from = ray.samples.back().tau;
        detail::CorrectorResult next{false, {}, {}};
        for (;;) {
            next = detail::correct(trace, from + h * dir, opt);
            if (next.ok && std::abs(next.tau - (from + h * dir)) <= h &&
                (next.tau.imag() * up.imag() > 0.0))
                break;
            h *= 0.5;
            if (h < opt.min_step) throw fail(ErrorCode::step_too_large, "corrector failed to converge");
        }

        const double mag = std::abs(next.jet.value);
        if (mag <= 2.0 + opt.tol) {
            Complex end = next.tau;
            Complex end_tr = next.jet.value;
            if (mag < 2.0) {
                // Keep the bracket end with |tr| >= 2 so every sample stays outside the disc.
                double lo = 0.0, hi = h;
                end = from;
                end_tr = ray.samples.back().tr;
                for (int it = 0; it < 200 && std::abs(end_tr) - 2.0 > opt.endpoint_tol; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    const detail::CorrectorResult c = detail::correct(trace, from + mid * dir, opt);
                    if (!c.ok) throw fail(ErrorCode::step_too_large, "corrector failed during endpoint bisection");
                    if (std::abs(c.jet.value) >= 2.0) {
                        lo = mid;
                        end = c.tau;
                        end_tr = c.jet.value;
                    } else {
                        hi = mid;
                    }
                    if (hi - lo < 1e-16) break;
                }
            }
            if (end != ray.samples.back().tau) ray.samples.push_back({end, end_tr});
            ray.endpoint = end;
            return ray;
        }

        if (std::abs(next.tau.imag()) >= kPi) throw fail(ErrorCode::ray_escaped, "left |Im tau| < pi");
        if (ray.samples.size() >= opt.max_samples) throw fail(ErrorCode::ray_escaped, "too many samples");
        if (std::abs(next.jet.d1) <= 1e-13 * std::max(1.0, mag))
            throw fail(ErrorCode::singular_ray, "d tr/d tau vanished");

        ray.samples.push_back({next.tau, next.jet.value});
        Complex tangent = std::conj(next.jet.d1) / std::abs(next.jet.d1);
        if ((tangent * std::conj(dir)).real() < 0.0) tangent = -tangent;
        dir = tangent;
        h = std::min(2.0 * h, h_max);
    }
}

inline PleatingRay trace_ray(double lambda, const Slope& s, RaySide side, const RayOptions& opt = {})
{
    if (!(lambda > 0.0)) throw Error(ErrorCode::domain, "lambda must be positive");
    if (s.is_infinite()) throw Error(ErrorCode::domain, "the infinite slope has no ray");
    return trace_ray(lambda, SlopeTrace(s, lambda), side, opt);
}

/** @brief Outcome of the elliptic/parabolic word sweep */
struct QfVerdict {
    enum class Kind { certified_tame, no_obstruction, elliptic_word, parabolic_word };
    Kind kind;
    std::optional<Slope> slope;
    std::optional<Word> word;
};

inline const char* to_string(QfVerdict::Kind k)
{
    switch (k) {
        case QfVerdict::Kind::certified_tame: return "certified_tame";
        case QfVerdict::Kind::no_obstruction: return "no_obstruction";
        case QfVerdict::Kind::elliptic_word: return "elliptic_word";
        case QfVerdict::Kind::parabolic_word: return "parabolic_word";
    }
    return "?";
}

/**
 * Tame groups are certified. Otherwise sweep the Farey words with
 * |p| + q <= max_len in order of (|p| + q, p/q): the first elliptic word
 * excludes the group; failing that the first parabolic word is reported.
 */
inline QfVerdict qf_heuristic(const FNCoords& coords, int max_len, double eps = 1e-9)
{
    if (max_len < 1) throw Error(ErrorCode::domain, "max_len must be at least 1");
    if (is_tame(coords)) return {QfVerdict::Kind::certified_tame, std::nullopt, std::nullopt};

    std::vector<Slope> slopes;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Slope> ring;
        if (len == 1) ring.push_back(Slope::infinity());
        for (std::int64_t q = 1; q <= len; ++q) {
            const std::int64_t a = len - q;
            if (std::gcd(a, q) != 1) continue;
            ring.emplace_back(-a, q);
            if (a != 0) ring.emplace_back(a, q);
        }
        std::sort(ring.begin(), ring.end());
        slopes.insert(slopes.end(), ring.begin(), ring.end());
    }

    const GroupData g = build_group(coords);
    std::optional<Slope> parabolic;
    for (const Slope& s : slopes) {
        const MoebiusClass k = classify(evaluate(word(s), g), eps);
        if (k == MoebiusClass::elliptic) return {QfVerdict::Kind::elliptic_word, s, word(s)};
        if (k == MoebiusClass::parabolic && !parabolic) parabolic = s;
    }
    if (parabolic) return {QfVerdict::Kind::parabolic_word, parabolic, word(*parabolic)};
    return {QfVerdict::Kind::no_obstruction, std::nullopt, std::nullopt};
}

}  // namespace qft
