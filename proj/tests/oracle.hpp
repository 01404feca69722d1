#pragma once

// Naive reference implementations used to derive expected values. Nothing
// here calls into the library: the quaternion group is built from unit
// quaternions and group-ring products are plain convolutions.

#include <array>
#include <cstdint>
#include <vector>

namespace oracle {

// Unit quaternions +-1, +-i, +-j, +-k encoded as sign * 4 + unit.
struct Quat {
  int sign;  // 0 for +, 1 for -
  int unit;  // 0 = 1, 1 = i, 2 = j, 3 = k
};

inline Quat qmul(Quat a, Quat b) {
  // unit products: table[u][v] = (sign, unit)
  static const int sgn[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return {a.sign ^ b.sign ^ sgn[a.unit][b.unit], unit[a.unit][b.unit]};
}

inline int qcode(Quat q) { return q.sign * 4 + q.unit; }

// Q8 with x = i, y = j; element a + 4b stands for x^a y^b.
struct Q8 {
  std::array<Quat, 8> as_quat{};
  std::array<std::array<int, 8>, 8> mul{};
  std::array<int, 8> inv{};

  Q8() {
    const Quat one{0, 0}, i{0, 1}, j{0, 2};
    for (int b = 0; b < 2; ++b)
      for (int a = 0; a < 4; ++a) {
        Quat q = one;
        for (int t = 0; t < a; ++t) q = qmul(q, i);
        for (int t = 0; t < b; ++t) q = qmul(q, j);
        as_quat[a + 4 * b] = q;
      }
    std::array<int, 8> index_of{};
    for (int e = 0; e < 8; ++e) index_of[qcode(as_quat[e])] = e;
    for (int e = 0; e < 8; ++e)
      for (int f = 0; f < 8; ++f) mul[e][f] = index_of[qcode(qmul(as_quat[e], as_quat[f]))];
    for (int e = 0; e < 8; ++e)
      for (int f = 0; f < 8; ++f)
        if (mul[e][f] == 0) inv[e] = f;
  }
};

// (Z/n)[Q8] with elements as coefficient vectors; index = sum c_g n^g.
struct Q8Algebra {
  std::uint64_t n;
  Q8 g;
  explicit Q8Algebra(std::uint64_t modulus) : n(modulus) {}

  using Vec = std::array<std::uint64_t, 8>;

  std::uint64_t size() const {
    std::uint64_t s = 1;
    for (int i = 0; i < 8; ++i) s *= n;
    return s;
  }
  Vec vec(std::uint64_t idx) const {
    Vec v{};
    for (int i = 0; i < 8; ++i) {
      v[i] = idx % n;
      idx /= n;
    }
    return v;
  }
  std::uint64_t index(const Vec& v) const {
    std::uint64_t idx = 0;
    for (int i = 7; i >= 0; --i) idx = idx * n + v[i];
    return idx;
  }
  Vec mul(const Vec& a, const Vec& b) const {
    Vec c{};
    for (int e = 0; e < 8; ++e)
      for (int f = 0; f < 8; ++f) c[g.mul[e][f]] = (c[g.mul[e][f]] + a[e] * b[f]) % n;
    return c;
  }
  Vec add(const Vec& a, const Vec& b) const {
    Vec c{};
    for (int e = 0; e < 8; ++e) c[e] = (a[e] + b[e]) % n;
    return c;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return index(mul(vec(a), vec(b))); }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return index(add(vec(a), vec(b))); }
  std::uint64_t one() const { return 1; }

  bool nilpotent(std::uint64_t a) const {
    std::uint64_t p = a;
    for (int i = 0; i < 64 && p != 0; ++i) p = mul(p, a);
    return p == 0;
  }
};

// Generic brute-force helpers over a ring given by callables.
template <class R>
std::vector<bool> unit_bitmap(const R& r) {
  std::vector<bool> u(r.size(), false);
  for (std::uint64_t a = 0; a < r.size(); ++a)
    for (std::uint64_t b = 0; b < r.size(); ++b)
      if (r.mul(a, b) == r.one() && r.mul(b, a) == r.one()) {
        u[a] = true;
        break;
      }
  return u;
}

}  // namespace oracle
