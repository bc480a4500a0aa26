#pragma once

#include <array>
#include <utility>

namespace ffdyn {

// 2x2 matrix over an exact scalar ring. Scalars need +, -, * and copy.
template <class T>
struct Mat2 {
  T a, b, c, d;  // [[a, b], [c, d]]

  T det() const { return a * d - b * c; }
  T trace() const { return a + d; }
  Mat2 adjugate() const { return {d, -b, -c, a}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) { return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d; }

  template <class F>
  auto map(F&& f) const -> Mat2<decltype(f(a))> {
    return {f(a), f(b), f(c), f(d)};
  }
  std::array<const T*, 4> entries() const { return {&a, &b, &c, &d}; }
};

template <class T>
Mat2<T> mat_pow(const Mat2<T>& m, unsigned k, const Mat2<T>& identity) {
  Mat2<T> result = identity, base = m;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

// Mobius action (a x + b) / (c x + d).
template <class T, class X>
X mobius(const Mat2<T>& m, const X& x) {
  return (m.a * x + m.b) / (m.c * x + m.d);
}

}  // namespace ffdyn
