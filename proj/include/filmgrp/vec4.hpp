#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace filmgrp {

/// Four components in (f, b, g, q) order. States, fluxes, slopes and
/// time derivatives all share this layout.
struct Vec4 {
    double f{}, b{}, g{}, q{};

    double& operator[](std::size_t i) {
        switch (i) {
            case 0: return f;
            case 1: return b;
            case 2: return g;
            default: return q;
        }
    }
    double operator[](std::size_t i) const {
        switch (i) {
            case 0: return f;
            case 1: return b;
            case 2: return g;
            default: return q;
        }
    }

    Vec4& operator+=(const Vec4& o) { f += o.f; b += o.b; g += o.g; q += o.q; return *this; }
    Vec4& operator-=(const Vec4& o) { f -= o.f; b -= o.b; g -= o.g; q -= o.q; return *this; }
    Vec4& operator*=(double s) { f *= s; b *= s; g *= s; q *= s; return *this; }

    friend Vec4 operator+(Vec4 a, const Vec4& o) { return a += o; }
    friend Vec4 operator-(Vec4 a, const Vec4& o) { return a -= o; }
    friend Vec4 operator*(Vec4 a, double s) { return a *= s; }
    friend Vec4 operator*(double s, Vec4 a) { return a *= s; }
    friend Vec4 operator/(Vec4 a, double s) { return a *= (1.0 / s); }
    friend Vec4 operator-(const Vec4& a) { return {-a.f, -a.b, -a.g, -a.q}; }
    friend bool operator==(const Vec4&, const Vec4&) = default;
};

using ConservedState = Vec4;

inline double norm_inf(const Vec4& a) {
    return std::max({std::abs(a.f), std::abs(a.b), std::abs(a.g), std::abs(a.q)});
}

using Mat4 = std::array<std::array<double, 4>, 4>;

inline Vec4 operator*(const Mat4& m, const Vec4& x) {
    Vec4 r;
    for (std::size_t i = 0; i < 4; ++i) {
        r[i] = m[i][0] * x.f + m[i][1] * x.b + m[i][2] * x.g + m[i][3] * x.q;
    }
    return r;
}

}  // namespace filmgrp
