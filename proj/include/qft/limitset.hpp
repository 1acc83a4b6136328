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

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <future>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "qft/errors.hpp"
#include "qft/farey.hpp"
#include "qft/format.hpp"
#include "qft/groups.hpp"
#include "qft/moebius.hpp"

namespace qft
{

/** @brief Axis-aligned window of the complex plane */
struct Viewport {
    double re_min{-2.0}, re_max{2.0}, im_min{-2.0}, im_max{2.0};

    bool contains(Complex z) const
    {
        return z.real() >= re_min && z.real() <= re_max && z.imag() >= im_min && z.imag() <= im_max;
    }
    /// Contains with every edge pulled in by `margin`.
    bool contains_inner(Complex z, double margin) const
    {
        return z.real() >= re_min + margin && z.real() <= re_max - margin &&
               z.imag() >= im_min + margin && z.imag() <= im_max - margin;
    }
};

/** @brief Limit-set generation and raster settings */
struct RenderConfig {
    int max_word_length{12};
    double contraction_eps{1e-3};
    Viewport viewport{};
    int width{512}, height{512};
    bool record_words{false};
    unsigned threads{0};  ///< 0 = hardware concurrency

    void validate() const
    {
        if (max_word_length < 1) throw Error(ErrorCode::domain, "max_word_length must be >= 1");
        if (!(contraction_eps > 0.0)) throw Error(ErrorCode::domain, "contraction_eps must be > 0");
        if (width <= 0 || height <= 0) throw Error(ErrorCode::domain, "pixel dimensions must be positive");
        if (!(viewport.re_min < viewport.re_max && viewport.im_min < viewport.im_max))
            throw Error(ErrorCode::domain, "empty viewport");
    }
};

/** @brief Finite limit points inside the viewport, in word order */
struct PointSet {
    std::vector<Complex> points;
    std::vector<Word> words;  ///< parallel to points when recorded
};

namespace detail
{
/**
 * Three points spanning the arc of the limit set reached by words that
 * start with l: the cusps fixed by the two commutator rotations beginning
 * with l, and the attracting fixed point of l.
 */
inline std::array<ExtComplex, 3> arc_points(const std::array<MoebiusMap, 4>& gens, Letter l)
{
    static constexpr std::array<std::array<const char*, 2>, 4> rotations{{
        {"StsT", "STst"},  // S
        {"sTSt", "stST"},  // s
        {"TSts", "TstS"},  // T
        {"tsTS", "tSTs"},  // t
    }};
    auto eval = [&](const char* w) {
        MoebiusMap m = MoebiusMap::identity();
        for (const char* c = w; *c; ++c) m = compose(m, gens[std::string_view("SsTt").find(*c)]);
        return m;
    };
    const auto& rot = rotations[static_cast<int>(l)];
    const MoebiusMap& g = gens[static_cast<int>(l)];
    // Attracting fixed point: |g'(f)| = 1/|cf + d|^2 < 1 (at infinity, |a| < 1).
    const auto [f1, f2] = fixed_points(g);
    const bool first_attracts =
        f1.is_infinite() ? std::abs(g.a) < 1.0 : std::abs(g.c * f1.value() + g.d) > 1.0;
    return {fixed_points(eval(rot[0])).first, first_attracts ? f1 : f2, fixed_points(eval(rot[1])).first};
}

struct OrbitWalker {
    const RenderConfig& cfg;
    std::array<MoebiusMap, 4> gens;  // indexed by Letter
    // ref[l] = l^-1(arc points of l): a node w = w'l covers w'(arc_l) = w(ref[l]).
    std::array<std::array<ExtComplex, 3>, 4> ref;
    ExtComplex seed;
    PointSet out;
    std::vector<Letter> path;

    // Chordal distance at the scale of the viewport: close to Euclidean on
    // screen, shrinking like 1/|z|^2 far away so off-screen branches end.
    double metric(const ExtComplex& a, const ExtComplex& b) const
    {
        const Viewport& v = cfg.viewport;
        const Complex c{(v.re_min + v.re_max) / 2, (v.im_min + v.im_max) / 2};
        const double r = std::hypot(v.re_max - v.re_min, v.im_max - v.im_min);
        auto weight = [&](const Complex& z) { return std::sqrt(1.0 + std::norm((z - c) / r)); };
        if (a.is_infinite() && b.is_infinite()) return 0.0;
        if (a.is_infinite()) return r / weight(b.value());
        if (b.is_infinite()) return r / weight(a.value());
        return std::abs(a.value() - b.value()) / (weight(a.value()) * weight(b.value()));
    }

    double diameter(const std::array<ExtComplex, 3>& p) const
    {
        return std::max({metric(p[0], p[1]), metric(p[1], p[2]), metric(p[0], p[2])});
    }

    // Size of the arc covered by node m (last letter `last`), taken as the
    // largest of the arc itself and its images under each generator that
    // reach the viewport, so the cloud stays resolved after one more letter.
    double tile_diameter(const MoebiusMap& m, Letter last) const
    {
        const auto& r = ref[static_cast<int>(last)];
        const std::array<ExtComplex, 3> tile{qft::apply(m, r[0]), qft::apply(m, r[1]), qft::apply(m, r[2])};
        double d = diameter(tile);
        for (const MoebiusMap& g : gens) {
            std::array<ExtComplex, 3> img;
            bool visible = false;
            for (int i = 0; i < 3; ++i) {
                img[i] = qft::apply(g, tile[i]);
                visible = visible || (img[i].is_finite() && cfg.viewport.contains(img[i].value()));
            }
            if (visible) d = std::max(d, diameter(img));
        }
        return d;
    }

    void visit(const MoebiusMap& m, Letter last, int depth)
    {
        for (Letter l : kLetters) {
            if (l == inverse(last)) continue;
            step(m, l, depth);
        }
    }

    void step(const MoebiusMap& m, Letter l, int depth)
    {
        const MoebiusMap next = compose(m, gens[static_cast<int>(l)]);
        path.push_back(l);
        const ExtComplex p = qft::apply(next, seed);
        if (p.is_finite() && cfg.viewport.contains(p.value())) {
            out.points.push_back(p.value());
            if (cfg.record_words) out.words.emplace_back(path);
        }
        if (depth + 1 < cfg.max_word_length && tile_diameter(next, l) >= cfg.contraction_eps)
            visit(next, l, depth + 1);
        path.pop_back();
    }
};
}  // namespace detail

/**
 * Orbit of the parabolic fixed point of K under reduced words of length
 * <= max_word_length, depth first in the letter order S < s < T < t.
 *
 * Every visited word emits its image of the seed, so the set only grows with
 * max_word_length. A branch stops once its arc of the limit set, measured by
 * the images of three reference points (two cusps and a generator fixed
 * point), has diameter below contraction_eps, and so do the arc's images
 * under the generators wherever they reach the viewport. Diameters use a
 * chordal metric scaled to the viewport, so branches far off screen end early. The four
 * first-letter subtrees run concurrently and are concatenated in letter
 * order.
 */
inline PointSet limit_points(const GroupData& g, const RenderConfig& cfg)
{
    cfg.validate();
    const ExtComplex seed = fixed_points(g.K).first;
    const std::array<MoebiusMap, 4> gens{g.S, g.S.inverse(), g.T, g.T.inverse()};
    std::array<std::array<ExtComplex, 3>, 4> ref;
    for (Letter l : kLetters) {
        const auto arc = detail::arc_points(gens, l);
        const MoebiusMap& back = gens[static_cast<int>(inverse(l))];
        for (int i = 0; i < 3; ++i) ref[static_cast<int>(l)][i] = qft::apply(back, arc[i]);
    }

    auto subtree = [&](Letter first) {
        detail::OrbitWalker w{cfg, gens, ref, seed, {}, {}};
        w.step(MoebiusMap::identity(), first, 0);
        return std::move(w.out);
    };

    unsigned threads = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.threads;
    std::array<PointSet, 4> parts;
    if (threads <= 1) {
        for (Letter l : kLetters) parts[static_cast<int>(l)] = subtree(l);
    } else {
        std::array<std::future<PointSet>, 4> jobs;
        for (Letter l : kLetters) jobs[static_cast<int>(l)] = std::async(std::launch::async, subtree, l);
        for (int i = 0; i < 4; ++i) parts[i] = jobs[i].get();
    }

    PointSet all;
    for (auto& part : parts) {
        all.points.insert(all.points.end(), part.points.begin(), part.points.end());
        all.words.insert(all.words.end(), std::make_move_iterator(part.words.begin()),
                         std::make_move_iterator(part.words.end()));
    }
    return all;
}

/** @brief Binary raster, row 0 at the top; 1 marks a limit point */
struct Image {
    int width{0}, height{0};
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(int x, int y) const { return pixels[std::size_t(y) * std::size_t(width) + std::size_t(x)]; }
    std::size_t marked() const { return std::size_t(std::count(pixels.begin(), pixels.end(), 1)); }
};

/** Pixel coordinates (continuous) of a point in the viewport. */
inline std::pair<double, double> to_pixel(Complex z, const RenderConfig& cfg)
{
    const Viewport& v = cfg.viewport;
    return {(z.real() - v.re_min) / (v.re_max - v.re_min) * cfg.width,
            (v.im_max - z.imag()) / (v.im_max - v.im_min) * cfg.height};
}

inline Image rasterize(const PointSet& ps, const RenderConfig& cfg)
{
    cfg.validate();
    Image img{cfg.width, cfg.height, std::vector<std::uint8_t>(std::size_t(cfg.width) * std::size_t(cfg.height), 0)};
    for (const Complex& z : ps.points) {
        if (!cfg.viewport.contains(z)) continue;
        const auto [fx, fy] = to_pixel(z, cfg);
        const int x = std::clamp(static_cast<int>(std::floor(fx)), 0, cfg.width - 1);
        const int y = std::clamp(static_cast<int>(std::floor(fy)), 0, cfg.height - 1);
        img.pixels[std::size_t(y) * std::size_t(cfg.width) + std::size_t(x)] = 1;
    }
    return img;
}

/** Binary PPM (P6, 8-bit), black points on white. */
inline void write_ppm(std::ostream& os, const Image& img)
{
    os << "P6\n" << img.width << ' ' << img.height << "\n255\n";
    for (std::uint8_t p : img.pixels) {
        const char v = p ? char(0) : char(255);
        const char rgb[3] = {v, v, v};
        os.write(rgb, 3);
    }
}

/** SVG with one radius-0.5 circle per point, in pixel coordinates. */
inline void write_svg(std::ostream& os, const PointSet& ps, const RenderConfig& cfg)
{
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cfg.width << "\" height=\"" << cfg.height
       << "\" viewBox=\"0 0 " << cfg.width << ' ' << cfg.height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const Complex& z : ps.points) {
        if (!cfg.viewport.contains(z)) continue;
        const auto [x, y] = to_pixel(z, cfg);
        os << "<circle cx=\"" << format_real(x) << "\" cy=\"" << format_real(y) << "\" r=\"0.5\"/>\n";
    }
    os << "</svg>\n";
}

/** limset_<lambda>_<retau>_<imtau>.<ext> */
inline std::string limitset_filename(double lambda, Complex tau, const std::string& ext)
{
    return "limset_" + format_fixed6(lambda) + "_" + format_fixed6(tau.real()) + "_" +
           format_fixed6(tau.imag()) + "." + ext;
}

}  // namespace qft
