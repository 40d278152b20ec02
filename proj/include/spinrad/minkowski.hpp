#ifndef SPINRAD_MINKOWSKI_HPP
#define SPINRAD_MINKOWSKI_HPP

#include <array>
#include <cmath>

// Small fixed-size vector/tensor algebra for Minkowski space.
// Metric signature (+,-,-,-); index 0 is the time component.

namespace spinrad {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3& operator+=(const Vec3& o) {
        x += o.x; y += o.y; z += o.z;
        return *this;
    }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    Vec3 normalized() const {
        const double n = norm();
        return {x / n, y / n, z / n};
    }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

struct FourVector {
    double t = 0.0, x = 0.0, y = 0.0, z = 0.0;

    Vec3 spatial() const { return {x, y, z}; }
    double operator[](int i) const {
        switch (i) {
            case 0: return t;
            case 1: return x;
            case 2: return y;
            default: return z;
        }
    }
    FourVector operator+(const FourVector& o) const { return {t + o.t, x + o.x, y + o.y, z + o.z}; }
    FourVector operator-(const FourVector& o) const { return {t - o.t, x - o.x, y - o.y, z - o.z}; }
    FourVector operator*(double s) const { return {t * s, x * s, y * s, z * s}; }
};

inline FourVector operator*(double s, const FourVector& v) { return v * s; }

inline FourVector four_vector(double t, const Vec3& s) { return {t, s.x, s.y, s.z}; }

// a_mu b^mu with signature (+,-,-,-)
inline double mdot(const FourVector& a, const FourVector& b) {
    return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

// Generic rank-2 tensor with both indices up, stored as components.
struct Mat4 {
    std::array<std::array<double, 4>, 4> m{};

    Mat4 operator+(const Mat4& o) const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
        return r;
    }
    Mat4 operator*(double s) const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] * s;
        return r;
    }
    // M^{mu rho} e_rho, lowering e with the metric
    FourVector contract(const FourVector& e) const {
        FourVector r;
        auto row = [&](int i) { return m[i][0] * e.t - m[i][1] * e.x - m[i][2] * e.y - m[i][3] * e.z; };
        r.t = row(0); r.x = row(1); r.y = row(2); r.z = row(3);
        return r;
    }
};

// Antisymmetric rank-2 tensor T^{mu nu}.  The (polar, axial) decomposition
// follows T^{0i} = polar_i, T^{ij} = -eps_{ijk} axial_k.
struct AntisymTensor4 {
    std::array<std::array<double, 4>, 4> m{};

    static AntisymTensor4 from_polar_axial(const Vec3& p, const Vec3& a) {
        AntisymTensor4 t;
        t.m[0][1] = p.x; t.m[0][2] = p.y; t.m[0][3] = p.z;
        t.m[1][0] = -p.x; t.m[2][0] = -p.y; t.m[3][0] = -p.z;
        t.m[1][2] = -a.z; t.m[2][1] = a.z;
        t.m[2][3] = -a.x; t.m[3][2] = a.x;
        t.m[3][1] = -a.y; t.m[1][3] = a.y;
        return t;
    }

    Vec3 polar_part() const { return {m[0][1], m[0][2], m[0][3]}; }
    Vec3 axial_part() const { return {m[3][2], m[1][3], m[2][1]}; }

    AntisymTensor4 operator+(const AntisymTensor4& o) const {
        AntisymTensor4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
        return r;
    }
    AntisymTensor4 operator-(const AntisymTensor4& o) const {
        AntisymTensor4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
        return r;
    }
    AntisymTensor4 operator*(double s) const {
        AntisymTensor4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] * s;
        return r;
    }

    // T^{mu nu} b_nu
    FourVector contract(const FourVector& b) const {
        FourVector r;
        auto row = [&](int i) { return m[i][0] * b.t - m[i][1] * b.x - m[i][2] * b.y - m[i][3] * b.z; };
        r.t = row(0); r.x = row(1); r.y = row(2); r.z = row(3);
        return r;
    }

    double max_abs() const {
        double v = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) v = std::max(v, std::abs(m[i][j]));
        return v;
    }
};

inline AntisymTensor4 operator*(double s, const AntisymTensor4& t) { return t * s; }

// A_{mu nu} B^{mu nu}
inline double double_contract(const AntisymTensor4& a, const AntisymTensor4& b) {
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const double sign = ((i == 0) == (j == 0)) ? 1.0 : -1.0;
            sum += sign * a.m[i][j] * b.m[i][j];
        }
    }
    return sum;
}

// (A B)^{mu rho} = A^{mu nu} g_{nu lambda} B^{lambda rho}
inline Mat4 contract_adjacent(const AntisymTensor4& a, const AntisymTensor4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) {
            double s = a.m[i][0] * b.m[0][k];
            for (int j = 1; j < 4; ++j) s -= a.m[i][j] * b.m[j][k];
            r.m[i][k] = s;
        }
    }
    return r;
}

} // namespace spinrad

#endif
