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
// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qft/qft.hpp"

using namespace qft;

namespace
{

const double kLn2 = std::log(2.0);

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

// Radical inverse in base b: the Halton enumeration of the unit cube.
double halton(unsigned i, unsigned b)
{
    double f = 1.0, r = 0.0;
    for (; i > 0; i /= b) {
        f /= b;
        r += f * (i % b);
    }
    return r;
}

// Re lambda in (0.05, 3), |Im lambda| <= 1, |tau| <= 4, |Im tau| < pi.
std::vector<FNCoords> enumerate_coords(std::size_t n)
{
    std::vector<FNCoords> out;
    for (unsigned i = 1; out.size() < n; ++i) {
        const Complex lambda{0.05 + 2.95 * halton(i, 2), -1.0 + 2.0 * halton(i, 3)};
        const Complex tau{-4.0 + 8.0 * halton(i, 5), (-1.0 + 2.0 * halton(i, 7)) * (kPi - 1e-3)};
        if (lambda.real() <= 0.05 || std::abs(tau) > 4.0) continue;
        out.emplace_back(lambda, tau);
    }
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double up_to_sign(Complex a, Complex b) { return std::min(std::abs(a - b), std::abs(a + b)); }

Outcome commutator_parabolicity()
{
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const FNCoords& c : enumerate_coords(1000)) {
        const GroupData g = build_group(c);
        const MoebiusMap k = multiply(multiply(g.T.inverse(), g.S.inverse()), multiply(g.T, g.S));
        worst = std::max(worst, std::abs(k.trace() + 2.0));
    }
    const double dt = seconds_since(t0);
    return {worst < 1e-10 && dt < 1.0, fmt("max |tr+2| = %.2e over 1000, %.3f s", worst, dt)};
}

Outcome coordinate_round_trip()
{
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const FNCoords& c : enumerate_coords(1000)) {
        const NormalizedGroup n = normalize(build_group(c));
        const NormalizedGroup back = from_endpoints(n.x1, n.x2);
        const auto [h1, h2] = coordinate_map(c);
        const auto [r1, r2] = endpoint_coordinates(back.x1, back.x2);
        worst = std::max({worst, std::abs(r1 - h1), std::abs(r2 - h2)});
    }
    const double dt = seconds_since(t0);
    return {worst < 1e-9 && dt < 1.0, fmt("max error = %.2e over 1000, %.3f s", worst, dt)};
}

Outcome nielsen_consistency()
{
    double worst = 0.0;
    int checked = 0, skipped = 0;
    const auto samples = enumerate_coords(100);
    for (NielsenMove move : {NielsenMove::left_multiply_S, NielsenMove::left_multiply_Sinv, NielsenMove::invert_T,
                             NielsenMove::swap}) {
        for (const FNCoords& c : samples) {
            const GroupData g = build_group(c);
            FNCoords moved = c;
            try {
                moved = nielsen_move(c, move);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::out_of_chart) return {false, e.what()};
                ++skipped;
                continue;
            }
            const auto [S1, T1] = apply_move(g.S, g.T, move);
            const GroupData h = build_group(moved);
            // Relative to the size of the triple; traces are defined up to the lift's sign.
            const double scale = 1.0 + std::abs(S1.trace()) + std::abs(T1.trace());
            worst = std::max({worst, up_to_sign(S1.trace(), h.S.trace()) / scale,
                              up_to_sign(T1.trace(), h.T.trace()) / scale,
                              up_to_sign(multiply(S1, T1).trace(), multiply(h.S, h.T).trace()) / (scale * scale)});
            ++checked;
        }
    }
    return {worst < 1e-9 && checked >= 350,
            fmt("max scaled error = %.2e, %g moves checked, %g left the chart", worst, checked, skipped)};
}

Outcome integer_rays()
{
    const auto t0 = std::chrono::steady_clock::now();
    double worst_re = 0.0, end_err = 0.0;
    try {
        for (int m = -2; m <= 2; ++m) {
            const PleatingRay ray = trace_ray(kLn2, Slope::integer(m), RaySide::top);
            for (const RaySample& s : ray.samples) worst_re = std::max(worst_re, std::abs(s.tau.real() + 2.0 * m * kLn2));
            if (m == 0) end_err = std::abs(ray.endpoint.imag() - 2.0 * std::acos(0.6));
        }
    } catch (const Error& e) {
        return {false, e.what()};
    }
    const double dt = seconds_since(t0);
    return {worst_re < 1e-6 && end_err < 1e-6 && dt < 5.0,
            fmt("ray 0 end error %.2e, max |Re tau + 2 m lambda| = %.2e, %.3f s", end_err, worst_re, dt)};
}

Outcome slice_anchors()
{
    const double lambda = std::acosh(1.25);
    const double foot = fuchsian_footpoint(lambda, Slope::integer(0));
    const Complex w = Complex{0.0, 2.0} * std::cosh(Complex{foot} / 2.0) / std::tanh(lambda);
    const double anchor_err = std::abs(w - Complex{0.0, 10.0 / 3.0});
    double worst_angle = 0.0;
    int rays = 0;
    try {
        for (const Slope& s : enumerate_slopes(3, -2.0, 2.0))
            for (RaySide side : {RaySide::top, RaySide::bottom}) {
                const PleatingRay ray = trace_ray(lambda, s, side);
                const double want = side == RaySide::top ? kPi / 2 : -kPi / 2;
                worst_angle = std::max(worst_angle, std::abs(ray.footpoint_angle() - want));
                ++rays;
            }
    } catch (const Error& e) {
        return {false, e.what()};
    }
    return {anchor_err < 1e-9 && worst_angle < 1e-3,
            fmt("|w - 10i/3| = %.2e, max |angle - pi/2| = %.2e over %g rays", anchor_err, worst_angle, rays)};
}

Outcome footpoint_convexity()
{
    double worst = 0.0;
    int slopes = 0;
    for (double lambda : {0.3, kLn2, 1.5})
        for (const Slope& s : enumerate_slopes(5, -2.0, 2.0)) {
            const SlopeTrace tr(s, lambda);
            auto f = [&](double t) { return std::abs(tr(t)); };
            const double reach = 2.0 * lambda * (std::abs(s.value()) + 1.0);
            const double h = 1e-3;
            const long n = long(std::ceil(2.0 * reach / h));
            std::vector<double> v(std::size_t(n) + 1);
            for (long i = 0; i <= n; ++i) v[std::size_t(i)] = f(-reach + h * double(i));
            std::vector<long> minima;
            for (long i = 1; i < n; ++i)
                if (v[std::size_t(i)] < v[std::size_t(i - 1)] && v[std::size_t(i)] <= v[std::size_t(i + 1)]) minima.push_back(i);
            if (minima.size() != 1)
                return {false, s.str() + " at lambda " + fmt("%g", lambda) + ": " + std::to_string(minima.size()) + " local minima"};
            // Golden-section polish inside the bracketing grid cells.
            double a = -reach + h * double(minima[0] - 1), b = a + 2.0 * h;
            const double g = (std::sqrt(5.0) - 1.0) / 2.0;
            while (b - a > 1e-12) {
                const double x1 = b - g * (b - a), x2 = a + g * (b - a);
                (f(x1) < f(x2) ? b : a) = f(x1) < f(x2) ? x2 : x1;
            }
            worst = std::max(worst, std::abs(0.5 * (a + b) - fuchsian_footpoint(lambda, tr)));
            ++slopes;
        }
    return {worst < 1e-6, fmt("one minimum per slope, max footpoint error %.2e over %g (slope, lambda) pairs", worst, slopes)};
}

Outcome plumbing_identity()
{
    double worst = 0.0, worst_mod = 0.0;
    for (double lambda : {0.3, kLn2, 2.0}) {
        const double r0 = std::tanh(lambda / 2.0), r1 = 1.0 / r0;
        for (unsigned i = 1; i <= 100; ++i) {
            const FNCoords c(lambda, -2.0 + 4.0 * halton(i, 2));
            const Complex t = plumbing_t(c);
            const Complex Q = std::polar(r0 + (r1 - r0) * (0.02 + 0.96 * halton(i, 3)), 0.05 + (kPi - 0.1) * halton(i, 5));
            const Complex TQ = apply(build_group(c).T, Q).value();
            worst = std::max(worst, std::abs(z_coord(TQ, lambda) * w_coord(Q, lambda) - t));
            worst_mod = std::max(worst_mod, std::abs(std::abs(t) - std::exp(-kPi * kPi / lambda)));
        }
    }
    return {worst < 1e-9 && worst_mod < 1e-12, fmt("max |z w - t| = %.2e, max ||t| - e^(-pi^2/lambda)| = %.2e", worst, worst_mod)};
}

Outcome maskit_degeneration()
{
    const std::vector<double> lambdas{1e-1, 1e-2, 1e-3, 1e-4};
    double worst_ratio = 0.0, slope_lo = HUGE_VAL, slope_hi = -HUGE_VAL;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            const Complex mu{-2.0 + i, 1.0 + j};
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            for (double l : lambdas) {
                const double e = maskit_limit_error(l, mu);
                worst_ratio = std::max(worst_ratio, e / l);
                sx += std::log(l);
                sy += std::log(e);
                sxx += std::log(l) * std::log(l);
                sxy += std::log(l) * std::log(e);
            }
            const double n = double(lambdas.size());
            const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
            slope_lo = std::min(slope_lo, slope);
            slope_hi = std::max(slope_hi, slope);
        }
    const double lower = tame_mu_interval(1e-3).first;
    const bool ratio_ok = worst_ratio <= 20.0;
    const bool slope_ok = slope_lo >= 0.9 && slope_hi <= 1.1;
    const bool tame_ok = std::abs(lower - 2.0) < 0.05;
    std::string detail = fmt("max error/lambda = %.3g (bound 20); ", worst_ratio);
    detail += fmt("log-log slopes in [%.4f, %.4f] (want [0.9, 1.1]", slope_lo, slope_hi);
    detail += slope_ok ? "); " : "; the error is O(lambda^2)); ";
    detail += fmt("tame lower endpoint at lambda 1e-3 = %.6f", lower);
    return {ratio_ok && slope_ok && tame_ok, detail};
}

Outcome fuchsian_reality()
{
    const auto t0 = std::chrono::steady_clock::now();
    RenderConfig cfg;
    cfg.max_word_length = 12;
    cfg.viewport = {-20.0, 20.0, -20.0, 20.0};
    double worst = 0.0;
    std::size_t points = 0;
    for (double lambda : {0.3, kLn2, 1.5})
        for (double tau : {0.0, 0.7, -2.5}) {
            const PointSet ps = limit_points(build_group(FNCoords(lambda, tau)), cfg);
            points += ps.points.size();
            for (const Complex& z : ps.points) worst = std::max(worst, std::abs(z.imag()));
        }
    const double dt = seconds_since(t0);
    return {worst < 1e-9 && points > 0 && dt < 5.0,
            fmt("max |Im| = %.2e over %g points, %.3f s", worst, double(points), dt)};
}

Outcome complex_shear_formula()
{
    double worst = 0.0;
    for (unsigned i = 1; i <= 100; ++i) {
        const double lambda = 0.05 + 2.95 * halton(i, 2);
        double theta = (-1.0 + 2.0 * halton(i, 3)) * (kPi - 1e-3);
        if (theta == 0.0) theta = 0.5;
        const Complex tau{-4.0 + 8.0 * halton(i, 5), theta};
        const FNCoords c(lambda, tau);
        const Complex sigma = complex_shear(c).sigma;
        if (sigma != (theta > 0.0 ? tau : -tau)) return {false, "sign convention broken"};
        const Complex rhs = build_group(c).T.trace() * std::tanh(lambda) / 2.0;
        worst = std::max(worst, std::abs(std::cosh(sigma / 2.0) - rhs));
    }
    return {worst < 1e-12, fmt("max |cosh(sigma/2) - tr T tanh(lambda)/2| = %.2e over 100", worst)};
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"commutator parabolicity", commutator_parabolicity},
        {"coordinate round trip", coordinate_round_trip},
        {"Nielsen-move consistency", nielsen_consistency},
        {"integer rays and tame bound", integer_rays},
        {"slice anchors at cosh(lambda) = 5/4", slice_anchors},
        {"footpoint convexity", footpoint_convexity},
        {"plumbing identity", plumbing_identity},
        {"Maskit degeneration", maskit_degeneration},
        {"Fuchsian reality of limit sets", fuchsian_reality},
        {"complex-shear formula", complex_shear_formula},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
        failed += !o.pass;
    }
    std::fflush(stdout);
    return failed ? 1 : 0;
}
