#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <vector>

namespace ballres {

using cplx = std::complex<double>;

inline constexpr cplx kImagUnit{0.0, 1.0};

// 3-vectors over R and C, plus the 3x3 complex dyadics used by the
// Green's tensor code. Value types, no allocation.

struct Vec3 {
  double x = 0, y = 0, z = 0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

struct Vec3c {
  cplx x{}, y{}, z{};

  double norm() const { return std::sqrt(std::norm(x) + std::norm(y) + std::norm(z)); }
};

inline Vec3c to_complex(Vec3 a) { return {a.x, a.y, a.z}; }
inline Vec3c operator+(Vec3c a, Vec3c b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3c operator-(Vec3c a, Vec3c b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3c operator*(cplx s, Vec3c a) { return {s * a.x, s * a.y, s * a.z}; }
inline Vec3c operator*(cplx s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline Vec3c conj(Vec3c a) { return {std::conj(a.x), std::conj(a.y), std::conj(a.z)}; }

// Bilinear a^t . b (no conjugation; the conjugate lives with the data).
inline cplx dot(Vec3c a, Vec3c b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline cplx dot(Vec3 a, Vec3c b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3c cross(Vec3 a, Vec3c b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

struct Mat3c {
  // row-major
  std::array<cplx, 9> m{};

  cplx& operator()(int r, int c) { return m[3 * r + c]; }
  const cplx& operator()(int r, int c) const { return m[3 * r + c]; }

  double frobenius() const {
    double s = 0;
    for (const auto& e : m) s += std::norm(e);
    return std::sqrt(s);
  }

  Mat3c transpose() const {
    Mat3c t;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) t(r, c) = (*this)(c, r);
    return t;
  }

  Mat3c imag_part() const {
    Mat3c t;
    for (int i = 0; i < 9; ++i) t.m[i] = cplx(m[i].imag(), 0.0);
    return t;
  }
};

inline Mat3c operator+(const Mat3c& a, const Mat3c& b) {
  Mat3c r;
  for (int i = 0; i < 9; ++i) r.m[i] = a.m[i] + b.m[i];
  return r;
}
inline Mat3c operator-(const Mat3c& a, const Mat3c& b) {
  Mat3c r;
  for (int i = 0; i < 9; ++i) r.m[i] = a.m[i] - b.m[i];
  return r;
}
inline Mat3c operator*(cplx s, const Mat3c& a) {
  Mat3c r;
  for (int i = 0; i < 9; ++i) r.m[i] = s * a.m[i];
  return r;
}
inline Vec3c operator*(const Mat3c& a, Vec3c v) {
  return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
          a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
          a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
}
inline Vec3c operator*(const Mat3c& a, Vec3 v) { return a * to_complex(v); }

inline Mat3c outer(Vec3c a, Vec3c b) {
  Mat3c r;
  const cplx av[3] = {a.x, a.y, a.z}, bv[3] = {b.x, b.y, b.z};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = av[i] * bv[j];
  return r;
}

inline Mat3c identity3() {
  Mat3c r;
  r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
  return r;
}

// Pairwise (cascade) summation: reduction order depends only on the element
// count, so accumulated totals are bit-stable regardless of how the terms
// were produced.
template <typename T>
T pairwise_sum(std::span<const T> v) {
  const std::size_t n = v.size();
  if (n == 0) return T{};
  if (n <= 4) {
    T s = v[0];
    for (std::size_t i = 1; i < n; ++i) s = s + v[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

template <typename T>
T pairwise_sum(const std::vector<T>& v) {
  return pairwise_sum(std::span<const T>(v));
}

}  // namespace ballres
