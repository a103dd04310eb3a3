#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace conical {

struct Vec2 {
  double x = 0.0, y = 0.0;

  double& operator[](int i) { return i == 0 ? x : y; }
  double operator[](int i) const { return i == 0 ? x : y; }
};

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

/// Component 5-vector in the conserved ordering
/// (mass, xi1-momentum, xi2-momentum, radial momentum, energy).
struct Vec5 {
  std::array<double, 5> v{};

  double& operator[](int i) { return v[size_t(i)]; }
  double operator[](int i) const { return v[size_t(i)]; }
};

inline Vec5 operator+(Vec5 a, const Vec5& b) {
  for (int i = 0; i < 5; ++i) a[i] += b[i];
  return a;
}
inline Vec5 operator-(Vec5 a, const Vec5& b) {
  for (int i = 0; i < 5; ++i) a[i] -= b[i];
  return a;
}
inline Vec5 operator*(double s, Vec5 a) {
  for (int i = 0; i < 5; ++i) a[i] *= s;
  return a;
}

/// Dense 5x5 matrix, row-major.
struct Mat5 {
  std::array<double, 25> m{};

  double& operator()(int r, int c) { return m[size_t(5 * r + c)]; }
  double operator()(int r, int c) const { return m[size_t(5 * r + c)]; }
};

inline Vec5 operator*(const Mat5& a, const Vec5& x) {
  Vec5 y;
  for (int r = 0; r < 5; ++r) {
    double acc = 0.0;
    for (int c = 0; c < 5; ++c) acc += a(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

inline double max_abs(const Mat5& a) {
  double m = 0.0;
  for (double v : a.m) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace conical
