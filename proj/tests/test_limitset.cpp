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
#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "qft/limitset.hpp"

using namespace qft;

namespace
{

const double kLn2 = std::log(2.0);

// Bucketed nearest-point lookup; distances beyond `reach` cells are capped.
class NearestGrid
{
public:
    NearestGrid(const std::vector<Complex>& pts, double cell) : cell_{cell}
    {
        for (const Complex& p : pts) buckets_[key(cx(p), cy(p))].push_back(p);
    }

    double nearest(Complex z, int reach) const
    {
        double best = (reach + 1) * cell_;
        for (long dx = -reach; dx <= reach; ++dx)
            for (long dy = -reach; dy <= reach; ++dy) {
                const auto it = buckets_.find(key(cx(z) + dx, cy(z) + dy));
                if (it == buckets_.end()) continue;
                for (const Complex& p : it->second) best = std::min(best, std::abs(p - z));
            }
        return best;
    }

private:
    long cx(Complex z) const { return long(std::floor(z.real() / cell_)); }
    long cy(Complex z) const { return long(std::floor(z.imag() / cell_)); }
    static long long key(long x, long y) { return (long long)x * 1000003LL + y; }

    double cell_;
    std::unordered_map<long long, std::vector<Complex>> buckets_;
};

RenderConfig bent_config()
{
    RenderConfig cfg;
    cfg.max_word_length = 40;
    cfg.contraction_eps = 0.02;
    cfg.viewport = {-7.0, 7.0, -1.0, 13.0};
    cfg.width = cfg.height = 256;
    return cfg;
}

std::set<std::pair<double, double>> as_set(const PointSet& ps)
{
    std::set<std::pair<double, double>> out;
    for (const Complex& z : ps.points) out.emplace(z.real(), z.imag());
    return out;
}

}  // namespace

TEST(RenderConfig, Validation)
{
    RenderConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    cfg.max_word_length = 0;
    EXPECT_THROW(cfg.validate(), Error);
    cfg = {};
    cfg.contraction_eps = 0.0;
    EXPECT_THROW(cfg.validate(), Error);
    cfg = {};
    cfg.width = 0;
    EXPECT_THROW(cfg.validate(), Error);
    cfg = {};
    cfg.viewport = {1.0, -1.0, 0.0, 1.0};
    EXPECT_THROW(cfg.validate(), Error);
}

TEST(LimitPoints, LengthOneIsGeneratorImagesOfSeed)
{
    const GroupData g = build_group(FNCoords(kLn2, Complex{0.2, 0.5}));
    RenderConfig cfg;
    cfg.max_word_length = 1;
    cfg.viewport = {-50.0, 50.0, -50.0, 50.0};
    cfg.record_words = true;
    const PointSet ps = limit_points(g, cfg);
    ASSERT_EQ(ps.points.size(), 4u);
    const MoebiusMap gens[4] = {g.S, g.S.inverse(), g.T, g.T.inverse()};
    const char* names[4] = {"S", "s", "T", "t"};
    for (int i = 0; i < 4; ++i) {
        EXPECT_LT(std::abs(ps.points[i] - apply(gens[i], -1.0).value()), 1e-9);
        EXPECT_EQ(ps.words[i].str(), names[i]);
    }
}

TEST(LimitPoints, OrderIsLexicographicInWords)
{
    RenderConfig cfg;
    cfg.max_word_length = 4;
    cfg.viewport = {-1e6, 1e6, -1e6, 1e6};
    cfg.contraction_eps = 1e-9;
    cfg.record_words = true;
    const PointSet ps = limit_points(build_group(FNCoords(0.9, Complex{0.1, 0.3})), cfg);
    ASSERT_EQ(ps.words.size(), ps.points.size());
    EXPECT_EQ(ps.points.size(), 4u + 12u + 36u + 108u);
    auto rank = [](const Word& w) {
        std::vector<int> r;
        for (Letter l : w.letters()) r.push_back(static_cast<int>(l));
        return r;
    };
    for (std::size_t i = 1; i < ps.words.size(); ++i) EXPECT_LT(rank(ps.words[i - 1]), rank(ps.words[i]));
    for (const Word& w : ps.words) EXPECT_TRUE(w.is_reduced());
}

TEST(LimitPoints, FuchsianPointsAreReal)
{
    RenderConfig cfg;
    cfg.max_word_length = 12;
    cfg.contraction_eps = 1e-3;
    cfg.viewport = {-20.0, 20.0, -20.0, 20.0};
    for (double tau : {0.0, 0.8, -1.7}) {
        const PointSet ps = limit_points(build_group(FNCoords(kLn2, tau)), cfg);
        ASSERT_FALSE(ps.points.empty());
        for (const Complex& z : ps.points) EXPECT_LT(std::abs(z.imag()), 1e-9);
    }
}

TEST(LimitPoints, ClippedToViewport)
{
    RenderConfig cfg = bent_config();
    cfg.viewport = {-1.0, 1.0, 0.0, 2.0};
    const PointSet ps = limit_points(build_group(FNCoords(kLn2, Complex{0.0, 0.5})), cfg);
    ASSERT_FALSE(ps.points.empty());
    for (const Complex& z : ps.points) EXPECT_TRUE(cfg.viewport.contains(z));
    cfg.viewport = {100.0, 101.0, 100.0, 101.0};
    EXPECT_TRUE(limit_points(build_group(FNCoords(kLn2, Complex{0.0, 0.5})), cfg).points.empty());
}

TEST(LimitPoints, DeterministicAcrossThreadCounts)
{
    RenderConfig cfg = bent_config();
    cfg.max_word_length = 16;
    const GroupData g = build_group(FNCoords(kLn2, Complex{0.0, 0.5}));
    cfg.threads = 1;
    const PointSet a = limit_points(g, cfg);
    cfg.threads = 4;
    const PointSet b = limit_points(g, cfg);
    const PointSet c = limit_points(g, cfg);
    ASSERT_EQ(a.points.size(), b.points.size());
    EXPECT_TRUE(std::equal(a.points.begin(), a.points.end(), b.points.begin()));
    EXPECT_TRUE(std::equal(b.points.begin(), b.points.end(), c.points.begin()));
}

TEST(LimitPoints, MonotoneInWordLength)
{
    RenderConfig cfg = bent_config();
    const GroupData g = build_group(FNCoords(kLn2, Complex{0.0, 0.5}));
    std::set<std::pair<double, double>> prev;
    for (int len : {2, 5, 9, 14, 20}) {
        cfg.max_word_length = len;
        const auto cur = as_set(limit_points(g, cfg));
        EXPECT_TRUE(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end())) << len;
        EXPECT_GE(cur.size(), prev.size());
        prev = cur;
    }
}

TEST(LimitPoints, GroupInvarianceProxy)
{
    for (const FNCoords& c : {FNCoords(kLn2, Complex{0.0, 0.5}), FNCoords(0.7, Complex{0.0, 1.2})}) {
        const RenderConfig cfg = bent_config();
        const double eps = cfg.contraction_eps;
        const GroupData g = build_group(c);
        const PointSet ps = limit_points(g, cfg);
        const NearestGrid original(ps.points, eps);
        for (const MoebiusMap& m : {g.S, g.S.inverse(), g.T, g.T.inverse()}) {
            std::vector<Complex> moved;
            for (const Complex& z : ps.points) {
                const ExtComplex w = apply(m, z);
                if (w.is_finite() && cfg.viewport.contains(w.value())) moved.push_back(w.value());
            }
            const NearestGrid image(moved, eps);
            double hausdorff = 0.0;
            for (const Complex& z : moved)
                if (cfg.viewport.contains_inner(z, 2.0 * eps)) hausdorff = std::max(hausdorff, original.nearest(z, 6));
            for (const Complex& z : ps.points)
                if (cfg.viewport.contains_inner(z, 2.0 * eps)) hausdorff = std::max(hausdorff, image.nearest(z, 6));
            EXPECT_LT(hausdorff, 5.0 * eps);
        }
    }
}

TEST(LimitPoints, TameBentGroupIsAClosedCurve)
{
    // Sorted by argument about the centroid, a closed curve leaves no wide angular gap;
    // the Fuchsian limit set (a line) leaves a gap of pi.
    auto max_gap = [](const PointSet& ps) {
        Complex c{0.0};
        for (const Complex& z : ps.points) c += z;
        c /= double(ps.points.size());
        std::vector<double> a;
        for (const Complex& z : ps.points) a.push_back(std::arg(z - c));
        std::sort(a.begin(), a.end());
        double gap = a.front() + 2.0 * kPi - a.back();
        for (std::size_t i = 1; i < a.size(); ++i) gap = std::max(gap, a[i] - a[i - 1]);
        return gap;
    };
    const RenderConfig cfg = bent_config();
    EXPECT_LT(max_gap(limit_points(build_group(FNCoords(kLn2, Complex{0.0, 0.5})), cfg)), kPi / 16.0);
    EXPECT_GT(max_gap(limit_points(build_group(FNCoords(kLn2, 0.0)), cfg)), kPi / 2.0);
}

TEST(Rasterize, EmptyIsBlank)
{
    const RenderConfig cfg;
    const Image img = rasterize(PointSet{}, cfg);
    EXPECT_EQ(img.width, cfg.width);
    EXPECT_EQ(img.height, cfg.height);
    EXPECT_EQ(img.marked(), 0u);
}

TEST(Rasterize, CenterPointIsCenterPixel)
{
    RenderConfig cfg;
    cfg.width = 101;
    cfg.height = 51;
    cfg.viewport = {-1.0, 1.0, 3.0, 4.0};
    const Image img = rasterize(PointSet{{Complex{0.0, 3.5}}, {}}, cfg);
    EXPECT_EQ(img.marked(), 1u);
    EXPECT_EQ(img.at(50, 25), 1);
}

TEST(Rasterize, TopRowIsMaximalImaginaryPart)
{
    RenderConfig cfg;
    cfg.width = cfg.height = 10;
    cfg.viewport = {0.0, 1.0, 0.0, 1.0};
    const Image img = rasterize(PointSet{{Complex{0.05, 0.95}, Complex{1.0, 0.0}}, {}}, cfg);
    EXPECT_EQ(img.at(0, 0), 1);
    EXPECT_EQ(img.at(9, 9), 1);
    EXPECT_EQ(img.marked(), 2u);
}

TEST(Rasterize, FuchsianImageIsAHorizontalLine)
{
    RenderConfig cfg;
    cfg.max_word_length = 12;
    cfg.contraction_eps = 1e-3;
    cfg.viewport = {-4.0, 4.0, -2.0, 2.0};
    cfg.width = 200;
    cfg.height = 101;
    const Image img = rasterize(limit_points(build_group(FNCoords(kLn2, 0.3)), cfg), cfg);
    ASSERT_GT(img.marked(), 100u);
    const double axis_row = (cfg.viewport.im_max - 0.0) / (cfg.viewport.im_max - cfg.viewport.im_min) * cfg.height;
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            if (img.at(x, y)) {
                EXPECT_LE(std::abs(y + 0.5 - axis_row), 1.0);
            }
}

TEST(Writers, Ppm)
{
    RenderConfig cfg;
    cfg.width = 3;
    cfg.height = 2;
    cfg.viewport = {0.0, 3.0, 0.0, 2.0};
    const Image img = rasterize(PointSet{{Complex{0.5, 1.5}}, {}}, cfg);
    std::ostringstream os;
    write_ppm(os, img);
    const std::string out = os.str();
    const std::string header = "P6\n3 2\n255\n";
    ASSERT_EQ(out.size(), header.size() + 18);
    EXPECT_EQ(out.substr(0, header.size()), header);
    EXPECT_EQ(out[header.size()], char(0));
    EXPECT_EQ(out[header.size() + 3], char(255));
}

TEST(Writers, Svg)
{
    RenderConfig cfg;
    cfg.width = 100;
    cfg.height = 50;
    cfg.viewport = {0.0, 1.0, 0.0, 1.0};
    std::ostringstream os;
    write_svg(os, PointSet{{Complex{0.5, 0.5}, Complex{2.0, 0.5}}, {}}, cfg);
    const std::string out = os.str();
    EXPECT_NE(out.find("<svg"), std::string::npos);
    EXPECT_NE(out.find("<circle cx=\"50\" cy=\"25\" r=\"0.5\"/>"), std::string::npos);
    std::size_t circles = 0;
    for (std::size_t pos = 0; (pos = out.find("<circle", pos)) != std::string::npos; ++pos) ++circles;
    EXPECT_EQ(circles, 1u);
}

TEST(Writers, FileName)
{
    EXPECT_EQ(limitset_filename(kLn2, Complex{0.0, 0.5}, "ppm"), "limset_0.693147_0.000000_0.500000.ppm");
    EXPECT_EQ(limitset_filename(1.0, Complex{-0.25, -1.0}, "svg"), "limset_1.000000_-0.250000_-1.000000.svg");
}
