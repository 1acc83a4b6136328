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
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "qft/errors.hpp"
#include "qft/groups.hpp"
#include "qft/moebius.hpp"

namespace qft
{

/**
 * @brief Extended rational slope p/q in lowest terms, q >= 0.
 *
 * Infinity is the canonical 1/0.
 */
class Slope
{
public:
    Slope(std::int64_t p, std::int64_t q)
    {
        if (p == 0 && q == 0) throw Error(ErrorCode::domain, "0/0 is not a slope");
        if (q < 0) {
            p = -p;
            q = -q;
        }
        if (q == 0) {
            p_ = 1;
            q_ = 0;
            return;
        }
        const std::int64_t g = std::gcd(p < 0 ? -p : p, q);
        p_ = p / g;
        q_ = q / g;
    }

    static Slope infinity() { return {1, 0}; }
    static Slope integer(std::int64_t m) { return {m, 1}; }

    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }

    bool is_infinite() const { return q_ == 0; }
    bool is_integer() const { return q_ == 1; }
    double value() const { return is_infinite() ? HUGE_VAL : double(p_) / double(q_); }

    std::string str() const { return std::to_string(p_) + "/" + std::to_string(q_); }

    friend bool operator==(const Slope& a, const Slope& b) { return a.p_ == b.p_ && a.q_ == b.q_; }
    friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }

    /// Order on the extended line, infinity last.
    friend bool operator<(const Slope& a, const Slope& b)
    {
        if (a.is_infinite()) return false;
        if (b.is_infinite()) return true;
        return a.p_ * b.q_ < b.p_ * a.q_;
    }

private:
    std::int64_t p_{1};
    std::int64_t q_{0};
};

/** Farey mediant (p+r)/(q+s). */
inline Slope mediant(const Slope& a, const Slope& b) { return {a.p() + b.p(), a.q() + b.q()}; }

/**
 * Farey parents (left, right) of a non-integer slope: the neighbours with
 * q_l p_r - p_l q_r = 1 whose mediant is s. Found by Stern-Brocot descent
 * from the enclosing integers.
 */
inline std::pair<Slope, Slope> farey_parents(const Slope& s)
{
    if (s.is_infinite() || s.is_integer())
        throw Error(ErrorCode::base_case, "integer and infinite slopes have no parents");

    // floor(p/q) for q > 0
    std::int64_t m = s.p() / s.q();
    if (s.p() % s.q() != 0 && s.p() < 0) --m;

    std::int64_t lp = m, lq = 1, rp = m + 1, rq = 1;
    for (;;) {
        const std::int64_t mp = lp + rp, mq = lq + rq;
        if (mp == s.p() && mq == s.q()) break;
        if (s.p() * mq < mp * s.q()) {
            rp = mp;
            rq = mq;
        } else {
            lp = mp;
            lq = mq;
        }
    }
    return {Slope{lp, lq}, Slope{rp, rq}};
}

/** Generator letters; lowercase is the inverse. */
enum class Letter : std::uint8_t { S = 0, s = 1, T = 2, t = 3 };

inline constexpr std::array<Letter, 4> kLetters{Letter::S, Letter::s, Letter::T, Letter::t};

inline Letter inverse(Letter l)
{
    switch (l) {
        case Letter::S: return Letter::s;
        case Letter::s: return Letter::S;
        case Letter::T: return Letter::t;
        case Letter::t: return Letter::T;
    }
    return l;
}

inline char to_char(Letter l) { return "SsTt"[static_cast<int>(l)]; }

/** @brief Freely reduced word in S, T and their inverses */
class Word
{
public:
    Word() = default;
    explicit Word(const std::vector<Letter>& letters)
    {
        for (Letter l : letters) push_back(l);
    }

    /** Parse from the S/s/T/t spelling. */
    static Word parse(const std::string& text)
    {
        Word w;
        for (char c : text) {
            switch (c) {
                case 'S': w.push_back(Letter::S); break;
                case 's': w.push_back(Letter::s); break;
                case 'T': w.push_back(Letter::T); break;
                case 't': w.push_back(Letter::t); break;
                default: throw Error(ErrorCode::domain, std::string("bad letter '") + c + "'");
            }
        }
        return w;
    }

    /// Append with free cancellation.
    void push_back(Letter l)
    {
        if (!letters_.empty() && letters_.back() == qft::inverse(l))
            letters_.pop_back();
        else
            letters_.push_back(l);
    }

    Word& operator*=(const Word& rhs)
    {
        for (Letter l : rhs.letters_) push_back(l);
        return *this;
    }
    friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

    Word inverse() const
    {
        Word w;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.push_back(qft::inverse(*it));
        return w;
    }

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    bool is_reduced() const
    {
        for (std::size_t i = 1; i < letters_.size(); ++i)
            if (letters_[i] == qft::inverse(letters_[i - 1])) return false;
        return true;
    }

    /// Exponent sums (in S, in T).
    std::pair<std::int64_t, std::int64_t> abelianization() const
    {
        std::int64_t es = 0, et = 0;
        for (Letter l : letters_) {
            switch (l) {
                case Letter::S: ++es; break;
                case Letter::s: --es; break;
                case Letter::T: ++et; break;
                case Letter::t: --et; break;
            }
        }
        return {es, et};
    }

    std::string str() const
    {
        std::string out;
        out.reserve(letters_.size());
        for (Letter l : letters_) out.push_back(to_char(l));
        return out;
    }

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

private:
    std::vector<Letter> letters_;
};

/**
 * The Farey word W_{p/q}: W_inf = S^-1, W_m = S^-m T, and
 * W_{(p+r)/(q+s)} = W_{r/s} W_{p/q} for Farey neighbours p/q < r/s.
 */
inline Word word(const Slope& s)
{
    if (s.is_infinite()) return Word{{Letter::s}};
    if (s.is_integer()) {
        Word w;
        const std::int64_t m = s.p();
        const Letter l = m > 0 ? Letter::s : Letter::S;
        for (std::int64_t i = 0; i < (m > 0 ? m : -m); ++i) w.push_back(l);
        w.push_back(Letter::T);
        return w;
    }
    const auto [left, right] = farey_parents(s);
    return word(right) * word(left);
}

/**
 * @brief Thread-safe memo of Farey words.
 *
 * Readers share the lock; inserts take it exclusively.
 */
class WordCache
{
public:
    Word get(const Slope& s)
    {
        const Key key{s.p(), s.q()};
        {
            std::shared_lock lock(mutex_);
            if (auto it = words_.find(key); it != words_.end()) return it->second;
        }
        Word w;
        if (s.is_infinite() || s.is_integer()) {
            w = word(s);
        } else {
            const auto [left, right] = farey_parents(s);
            w = get(right) * get(left);
        }
        std::unique_lock lock(mutex_);
        return words_.emplace(key, std::move(w)).first->second;
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return words_.size();
    }

private:
    using Key = std::pair<std::int64_t, std::int64_t>;
    mutable std::shared_mutex mutex_;
    std::map<Key, Word> words_;
};

inline const MoebiusMap& letter_matrix(const GroupData& g, Letter l, MoebiusMap (&inv)[2])
{
    switch (l) {
        case Letter::S: return g.S;
        case Letter::s: return inv[0];
        case Letter::T: return g.T;
        case Letter::t: return inv[1];
    }
    return g.S;
}

/** Left-to-right product of the letters' matrices. */
inline MoebiusMap evaluate(const Word& w, const GroupData& g)
{
    MoebiusMap inv[2] = {g.S.inverse(), g.T.inverse()};
    MoebiusMap m = MoebiusMap::identity();
    for (Letter l : w.letters()) m = compose(m, letter_matrix(g, l, inv));
    return m;
}

/** @brief Trace of a word and its first two tau-derivatives */
struct TraceJet {
    Complex value, d1, d2;
};

namespace detail
{
using Mat = std::array<Complex, 4>;

inline Mat mat_mul(const Mat& x, const Mat& y)
{
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}
inline Mat mat_add(const Mat& x, const Mat& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]}; }
inline Mat mat_scale(Complex k, const Mat& x) { return {k * x[0], k * x[1], k * x[2], k * x[3]}; }
}  // namespace detail

/**
 * Trace jet of a word at (lambda, tau) by product-rule accumulation.
 *
 * Only T letters depend on tau; their entries are combinations of cosh(tau/2)
 * and sinh(tau/2), so T'' = T/4 and likewise for T^-1.
 */
inline TraceJet trace_jet(const Word& w, Complex lambda, Complex tau)
{
    using detail::Mat;
    const Complex ch = std::cosh(lambda);
    const Complex c = std::cosh(tau / 2.0), s = std::sinh(tau / 2.0);
    const Complex th = std::tanh(lambda / 2.0);
    const Mat zero{0.0, 0.0, 0.0, 0.0};

    const Mat S{ch, ch + 1.0, ch - 1.0, ch};
    const Mat Sinv{ch, -(ch + 1.0), -(ch - 1.0), ch};
    const Mat T{c / th, -s, -s, c * th};
    const Mat dT{0.5 * s / th, -0.5 * c, -0.5 * c, 0.5 * s * th};
    const Mat Tinv{c * th, s, s, c / th};
    const Mat dTinv{0.5 * s * th, 0.5 * c, 0.5 * c, 0.5 * s / th};

    Mat m{1.0, 0.0, 0.0, 1.0}, m1 = zero, m2 = zero;
    for (Letter l : w.letters()) {
        const Mat* x = nullptr;
        const Mat* dx = nullptr;
        switch (l) {
            case Letter::S: x = &S; break;
            case Letter::s: x = &Sinv; break;
            case Letter::T: x = &T; dx = &dT; break;
            case Letter::t: x = &Tinv; dx = &dTinv; break;
        }
        if (dx == nullptr) {
            m = detail::mat_mul(m, *x);
            m1 = detail::mat_mul(m1, *x);
            m2 = detail::mat_mul(m2, *x);
        } else {
            const Mat ddx = detail::mat_scale(0.25, *x);
            // (M X)'' = M'' X + 2 M' X' + M X''
            const Mat n2 = detail::mat_add(
                detail::mat_add(detail::mat_mul(m2, *x), detail::mat_scale(2.0, detail::mat_mul(m1, *dx))),
                detail::mat_mul(m, ddx));
            const Mat n1 = detail::mat_add(detail::mat_mul(m1, *x), detail::mat_mul(m, *dx));
            m = detail::mat_mul(m, *x);
            m1 = n1;
            m2 = n2;
        }
    }
    return {m[0] + m[3], m1[0] + m1[3], m2[0] + m2[3]};
}

/**
 * @brief Sign-normalized trace of W_{p/q} along a lambda-slice.
 *
 * The SL(2,C) lift is fixed once per (slope, lambda) by making the trace at
 * the reference point tau = 0 have positive real part; since the trace is
 * entire in tau this lift is continuous along any path.
 */
class SlopeTrace
{
public:
    SlopeTrace(const Slope& s, Complex lambda) : SlopeTrace(s, qft::word(s), lambda) {}
    SlopeTrace(const Slope& s, Word w, Complex lambda)
        : slope_{s}, word_{std::move(w)}, lambda_{lambda}
    {
        detail::require_positive_real_part(lambda);
        sign_ = trace_jet(word_, lambda_, 0.0).value.real() < 0.0 ? -1.0 : 1.0;
    }

    Complex operator()(Complex tau) const { return sign_ * trace_jet(word_, lambda_, tau).value; }

    TraceJet jet(Complex tau) const
    {
        const TraceJet j = trace_jet(word_, lambda_, tau);
        return {sign_ * j.value, sign_ * j.d1, sign_ * j.d2};
    }

    const Slope& slope() const { return slope_; }
    const Word& word() const { return word_; }
    Complex lambda() const { return lambda_; }
    double sign() const { return sign_; }

private:
    Slope slope_;
    Word word_;
    Complex lambda_;
    double sign_{1.0};
};

/** tr W_{p/q} at the given coordinates, lift fixed as in SlopeTrace. */
inline Complex trace_slope(const Slope& s, const FNCoords& coords)
{
    return SlopeTrace(s, coords.lambda())(coords.tau());
}

/**
 * All reduced p/q with 1 <= q <= max_q in the closed interval [lo, hi],
 * ascending.
 */
inline std::vector<Slope> enumerate_slopes(std::int64_t max_q, double lo, double hi)
{
    if (max_q < 1) throw Error(ErrorCode::domain, "max_q must be at least 1");
    constexpr double slack = 1e-12;
    std::vector<Slope> out;
    for (std::int64_t q = 1; q <= max_q; ++q) {
        const auto pmin = static_cast<std::int64_t>(std::ceil(lo * double(q) - slack));
        const auto pmax = static_cast<std::int64_t>(std::floor(hi * double(q) + slack));
        for (std::int64_t p = pmin; p <= pmax; ++p)
            if (std::gcd(p < 0 ? -p : p, q) == 1) out.emplace_back(p, q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/**
 * Slope whose Farey word, in the generators produced by `move`, has the
 * same trace (up to sign) as W_s in the old generators.
 */
inline Slope image_slope(const Slope& s, NielsenMove move)
{
    switch (move) {
        case NielsenMove::left_multiply_S: return {s.p() + s.q(), s.q()};
        case NielsenMove::left_multiply_Sinv: return {s.p() - s.q(), s.q()};
        case NielsenMove::invert_T: return {-s.p(), s.q()};
        case NielsenMove::swap: return {-s.q(), s.p()};
    }
    return s;
}

}  // namespace qft
