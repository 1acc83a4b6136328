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
#include <concepts>
#include <type_traits>
#include <utility>

#include "qft/errors.hpp"

namespace qft
{

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/** @brief A point of the Riemann sphere: finite complex value or infinity */
class ExtComplex
{
public:
    constexpr ExtComplex() = default;
    constexpr ExtComplex(Complex z) : z_{z} {}  // NOLINT: implicit by intent
    constexpr ExtComplex(double x) : z_{x, 0.0} {}

    static constexpr ExtComplex infinity()
    {
        ExtComplex p;
        p.inf_ = true;
        return p;
    }

    constexpr bool is_infinite() const { return inf_; }
    constexpr bool is_finite() const { return !inf_; }

    /// Finite value; meaningless (zero) at infinity.
    constexpr Complex value() const { return z_; }

    friend bool operator==(const ExtComplex& a, const ExtComplex& b)
    {
        return a.inf_ == b.inf_ && (a.inf_ || a.z_ == b.z_);
    }

private:
    Complex z_{0.0, 0.0};
    bool inf_{false};
};

/** Chordal-free distance: infinite unless both points are finite. */
inline double distance(const ExtComplex& a, const ExtComplex& b)
{
    if (a.is_infinite() && b.is_infinite()) return 0.0;
    if (a.is_infinite() || b.is_infinite()) return HUGE_VAL;
    return std::abs(a.value() - b.value());
}

/**
 * @brief Determinant-one complex 2x2 matrix acting as a Moebius map.
 *
 * The matrix is stored as an explicit SL(2,C) lift; M and -M are different
 * values of this type but the same transformation (see same_transformation).
 */
struct MoebiusMap {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

    static MoebiusMap identity() { return {}; }

    Complex det() const { return a * d - b * c; }
    Complex trace() const { return a + d; }

    /// Inverse of a determinant-one matrix (adjugate).
    MoebiusMap inverse() const { return {d, -b, -c, a}; }

    MoebiusMap operator-() const { return {-a, -b, -c, -d}; }
};

/** Rescale by the principal square root of the determinant. */
inline MoebiusMap normalized(const MoebiusMap& m)
{
    const Complex s = std::sqrt(m.det());
    if (s == Complex{0.0}) throw Error(ErrorCode::degenerate_input, "singular matrix");
    return {m.a / s, m.b / s, m.c / s, m.d / s};
}

/** Plain 2x2 product, no renormalization. */
inline MoebiusMap multiply(const MoebiusMap& m, const MoebiusMap& n)
{
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
            m.c * n.b + m.d * n.d};
}

/** Matrix product; renormalized only when |det - 1| exceeds 1e-12. */
inline MoebiusMap compose(const MoebiusMap& m, const MoebiusMap& n)
{
    MoebiusMap p = multiply(m, n);
    // Drift is judged against the rounding scale of ad - bc itself.
    const double scale = std::max(1.0, std::abs(p.a * p.d) + std::abs(p.b * p.c));
    if (std::abs(p.det() - 1.0) > 1e-12 * scale) p = normalized(p);
    return p;
}

inline MoebiusMap operator*(const MoebiusMap& m, const MoebiusMap& n) { return compose(m, n); }

/** Entrywise max-modulus distance between two lifts. */
inline double lift_distance(const MoebiusMap& m, const MoebiusMap& n)
{
    return std::max({std::abs(m.a - n.a), std::abs(m.b - n.b), std::abs(m.c - n.c),
                     std::abs(m.d - n.d)});
}

/** Distance between the transformations, minimized over the sign of the lift. */
inline double transformation_distance(const MoebiusMap& m, const MoebiusMap& n)
{
    return std::min(lift_distance(m, n), lift_distance(m, -n));
}

inline bool same_lift(const MoebiusMap& m, const MoebiusMap& n, double tol = 1e-10)
{
    return lift_distance(m, n) <= tol;
}

inline bool same_transformation(const MoebiusMap& m, const MoebiusMap& n, double tol = 1e-10)
{
    return transformation_distance(m, n) <= tol;
}

/** (az+b)/(cz+d) on the extended plane. */
inline ExtComplex apply(const MoebiusMap& m, const ExtComplex& z)
{
    if (z.is_infinite()) {
        if (m.c == Complex{0.0}) return ExtComplex::infinity();
        return m.a / m.c;
    }
    const Complex w = z.value();
    const Complex den = m.c * w + m.d;
    if (den == Complex{0.0}) return ExtComplex::infinity();
    return (m.a * w + m.b) / den;
}

// A std::complex argument brings std::apply into overload resolution; this
// constrained overload outranks it.
template <class M, class Z>
    requires std::same_as<std::remove_cvref_t<M>, MoebiusMap> && std::same_as<std::remove_cvref_t<Z>, Complex>
inline ExtComplex apply(M&& m, Z&& z)
{
    return apply(static_cast<const MoebiusMap&>(m), ExtComplex(z));
}

/**
 * Roots of c z^2 + (d - a) z - b = 0, ordered as the "+sqrt" then "-sqrt"
 * root of the quadratic formula. Parabolic maps return the same point twice.
 */
inline std::pair<ExtComplex, ExtComplex> fixed_points(const MoebiusMap& m)
{
    const Complex zero{0.0};
    if (m.b == zero && m.c == zero && m.a == m.d)
        throw Error(ErrorCode::degenerate_input, "identity has no isolated fixed points");

    const Complex lin = m.d - m.a;
    const Complex root = std::sqrt(lin * lin + 4.0 * m.b * m.c);
    const Complex num_plus = -lin + root;   // 2c * z_plus
    const Complex num_minus = -lin - root;  // 2c * z_minus

    auto quotient = [](Complex num, Complex den) -> ExtComplex {
        if (den == Complex{0.0}) return ExtComplex::infinity();
        return num / den;
    };

    // Use the larger numerator directly and Vieta (z+ z- = -b/c) for the other.
    if (std::abs(num_plus) >= std::abs(num_minus)) {
        if (num_plus == zero) {
            // d = a and bc = 0: a translation (fixes inf) or z/(cz + 1) (fixes 0).
            if (m.c == zero) return {ExtComplex::infinity(), ExtComplex::infinity()};
            return {Complex{0.0}, Complex{0.0}};
        }
        return {quotient(num_plus, 2.0 * m.c), quotient(-2.0 * m.b, num_plus)};
    }
    return {quotient(-2.0 * m.b, num_minus), quotient(num_minus, 2.0 * m.c)};
}

enum class MoebiusClass { identity, parabolic, elliptic, loxodromic };

inline const char* to_string(MoebiusClass k)
{
    switch (k) {
        case MoebiusClass::identity: return "identity";
        case MoebiusClass::parabolic: return "parabolic";
        case MoebiusClass::elliptic: return "elliptic";
        case MoebiusClass::loxodromic: return "loxodromic";
    }
    return "?";
}

/** Trace classification with absolute tolerance eps. */
inline MoebiusClass classify(const MoebiusMap& m, double eps = 1e-10)
{
    if (std::abs(m.b) < eps && std::abs(m.c) < eps && std::abs(m.a - m.d) < eps)
        return MoebiusClass::identity;
    const Complex tr2 = m.trace() * m.trace();
    if (std::abs(tr2 - 4.0) < eps) return MoebiusClass::parabolic;
    if (std::abs(tr2.imag()) < eps && tr2.real() >= 0.0 && tr2.real() < 4.0)
        return MoebiusClass::elliptic;
    return MoebiusClass::loxodromic;
}

}  // namespace qft
