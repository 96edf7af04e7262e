#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace ssw {

// Fixed-size 6-vector used for states, fluxes and entropy variables.
struct Vec6 {
    std::array<double, 6> v{};

    double& operator[](std::size_t i) { return v[i]; }
    const double& operator[](std::size_t i) const { return v[i]; }

    Vec6& operator+=(const Vec6& o) {
        for (int i = 0; i < 6; ++i) v[i] += o.v[i];
        return *this;
    }
    Vec6& operator-=(const Vec6& o) {
        for (int i = 0; i < 6; ++i) v[i] -= o.v[i];
        return *this;
    }
    Vec6& operator*=(double a) {
        for (int i = 0; i < 6; ++i) v[i] *= a;
        return *this;
    }

    friend Vec6 operator+(Vec6 a, const Vec6& b) { return a += b; }
    friend Vec6 operator-(Vec6 a, const Vec6& b) { return a -= b; }
    friend Vec6 operator*(double s, Vec6 a) { return a *= s; }
    friend Vec6 operator*(Vec6 a, double s) { return a *= s; }

    friend double dot(const Vec6& a, const Vec6& b) {
        double s = 0;
        for (int i = 0; i < 6; ++i) s += a.v[i] * b.v[i];
        return s;
    }

    double max_abs() const {
        double m = 0;
        for (int i = 0; i < 6; ++i) m = std::max(m, std::abs(v[i]));
        return m;
    }

    bool finite() const {
        for (int i = 0; i < 6; ++i)
            if (!std::isfinite(v[i])) return false;
        return true;
    }
};

// Dense 6x6 matrix, row-major.
struct Mat6 {
    std::array<double, 36> m{};

    double& operator()(int r, int c) { return m[6 * r + c]; }
    const double& operator()(int r, int c) const { return m[6 * r + c]; }

    friend Vec6 operator*(const Mat6& A, const Vec6& x) {
        Vec6 y;
        for (int r = 0; r < 6; ++r) {
            double s = 0;
            for (int c = 0; c < 6; ++c) s += A(r, c) * x[c];
            y[r] = s;
        }
        return y;
    }

    friend Mat6 operator*(const Mat6& A, const Mat6& B) {
        Mat6 C;
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 6; ++c) {
                double s = 0;
                for (int k = 0; k < 6; ++k) s += A(r, k) * B(k, c);
                C(r, c) = s;
            }
        return C;
    }

    // y = A^T x
    Vec6 tmul(const Vec6& x) const {
        Vec6 y;
        for (int c = 0; c < 6; ++c) {
            double s = 0;
            for (int r = 0; r < 6; ++r) s += (*this)(r, c) * x[r];
            y[c] = s;
        }
        return y;
    }

    Mat6 transposed() const {
        Mat6 T;
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 6; ++c) T(c, r) = (*this)(r, c);
        return T;
    }

    double max_abs() const {
        double s = 0;
        for (double x : m) s = std::max(s, std::abs(x));
        return s;
    }
};

}  // namespace ssw
