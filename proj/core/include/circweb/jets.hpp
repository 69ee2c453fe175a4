#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <type_traits>

#include "circweb/errors.hpp"

namespace circweb {

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};
template <class T>
inline constexpr bool is_complex_v = is_complex<T>::value;

template <class T>
inline double real_part(const T& v) {
  if constexpr (is_complex_v<T>)
    return v.real();
  else
    return static_cast<double>(v);
}

template <class T>
inline double imag_part(const T& v) {
  if constexpr (is_complex_v<T>)
    return v.imag();
  else
    return 0.0;
}

template <class T>
inline double magnitude(const T& v) {
  return static_cast<double>(std::abs(v));
}

// Second-order jet of a function of (x, y).
template <class T = double>
struct Jet2 {
  using scalar_type = T;
  T v{}, dx{}, dy{}, dxx{}, dxy{}, dyy{};

  static Jet2 constant(T c) { return {c}; }
  static Jet2 var_x(T x) { return {x, T(1)}; }
  static Jet2 var_y(T y) { return {y, T(0), T(1)}; }

  friend Jet2 zip(const Jet2& a, const Jet2& b, auto f) {
    return {f(a.v, b.v),     f(a.dx, b.dx),   f(a.dy, b.dy),
            f(a.dxx, b.dxx), f(a.dxy, b.dxy), f(a.dyy, b.dyy)};
  }
  friend Jet2 scale(const Jet2& a, T s) {
    return {a.v * s, a.dx * s, a.dy * s, a.dxx * s, a.dxy * s, a.dyy * s};
  }
  friend Jet2 mul(const Jet2& a, const Jet2& b) {
    return {a.v * b.v,
            a.dx * b.v + a.v * b.dx,
            a.dy * b.v + a.v * b.dy,
            a.dxx * b.v + T(2) * a.dx * b.dx + a.v * b.dxx,
            a.dxy * b.v + a.dx * b.dy + a.dy * b.dx + a.v * b.dxy,
            a.dyy * b.v + T(2) * a.dy * b.dy + a.v * b.dyy};
  }
  // f(a) given f, f', f'' at a.v
  friend Jet2 chain(const Jet2& a, T f0, T f1, T f2) {
    return {f0,
            f1 * a.dx,
            f1 * a.dy,
            f2 * a.dx * a.dx + f1 * a.dxx,
            f2 * a.dx * a.dy + f1 * a.dxy,
            f2 * a.dy * a.dy + f1 * a.dyy};
  }
  friend bool all_finite(const Jet2& a) {
    for (const T& e : {a.v, a.dx, a.dy, a.dxx, a.dxy, a.dyy})
      if (!std::isfinite(real_part(e)) || !std::isfinite(imag_part(e))) return false;
    return true;
  }
};

// Second-order jet of a function of one variable.
template <class T = double>
struct Jet1 {
  using scalar_type = T;
  T v{}, d1{}, d2{};

  static Jet1 constant(T c) { return {c}; }
  static Jet1 variable(T t) { return {t, T(1)}; }

  friend Jet1 zip(const Jet1& a, const Jet1& b, auto f) {
    return {f(a.v, b.v), f(a.d1, b.d1), f(a.d2, b.d2)};
  }
  friend Jet1 scale(const Jet1& a, T s) { return {a.v * s, a.d1 * s, a.d2 * s}; }
  friend Jet1 mul(const Jet1& a, const Jet1& b) {
    return {a.v * b.v, a.d1 * b.v + a.v * b.d1,
            a.d2 * b.v + T(2) * a.d1 * b.d1 + a.v * b.d2};
  }
  friend Jet1 chain(const Jet1& a, T f0, T f1, T f2) {
    return {f0, f1 * a.d1, f2 * a.d1 * a.d1 + f1 * a.d2};
  }
  friend bool all_finite(const Jet1& a) {
    for (const T& e : {a.v, a.d1, a.d2})
      if (!std::isfinite(real_part(e)) || !std::isfinite(imag_part(e))) return false;
    return true;
  }
};

// First-order jet in (x, y); carries the connection coefficients.
template <class T = double>
struct Dual2 {
  using scalar_type = T;
  T v{}, dx{}, dy{};

  friend Dual2 zip(const Dual2& a, const Dual2& b, auto f) {
    return {f(a.v, b.v), f(a.dx, b.dx), f(a.dy, b.dy)};
  }
  friend Dual2 scale(const Dual2& a, T s) { return {a.v * s, a.dx * s, a.dy * s}; }
  friend Dual2 mul(const Dual2& a, const Dual2& b) {
    return {a.v * b.v, a.dx * b.v + a.v * b.dx, a.dy * b.v + a.v * b.dy};
  }
  friend Dual2 chain(const Dual2& a, T f0, T f1, T) { return {f0, f1 * a.dx, f1 * a.dy}; }
};

template <class J>
struct is_jet : std::false_type {};
template <class T>
struct is_jet<Jet2<T>> : std::true_type {};
template <class T>
struct is_jet<Jet1<T>> : std::true_type {};
template <class T>
struct is_jet<Dual2<T>> : std::true_type {};

template <class J>
concept JetType = is_jet<J>::value;

template <JetType J>
using scalar_of = typename J::scalar_type;

template <JetType J>
J operator+(const J& a, const J& b) {
  return zip(a, b, [](auto p, auto q) { return p + q; });
}
template <JetType J>
J operator-(const J& a, const J& b) {
  return zip(a, b, [](auto p, auto q) { return p - q; });
}
template <JetType J>
J operator-(const J& a) {
  return scale(a, scalar_of<J>(-1));
}
template <JetType J>
J operator*(const J& a, const J& b) {
  return mul(a, b);
}
template <JetType J>
J operator+(const J& a, std::type_identity_t<scalar_of<J>> s) {
  J r = a;
  r.v += s;
  return r;
}
template <JetType J>
J operator+(std::type_identity_t<scalar_of<J>> s, const J& a) {
  return a + s;
}
template <JetType J>
J operator-(const J& a, std::type_identity_t<scalar_of<J>> s) {
  J r = a;
  r.v -= s;
  return r;
}
template <JetType J>
J operator-(std::type_identity_t<scalar_of<J>> s, const J& a) {
  return -a + s;
}
template <JetType J>
J operator*(const J& a, std::type_identity_t<scalar_of<J>> s) {
  return scale(a, s);
}
template <JetType J>
J operator*(std::type_identity_t<scalar_of<J>> s, const J& a) {
  return scale(a, s);
}

template <JetType J>
J recip(const J& a) {
  using T = scalar_of<J>;
  if (!(magnitude(a.v) > 0.0)) throw DomainError("recip: zero value");
  T r = T(1) / a.v;
  return chain(a, r, -r * r, T(2) * r * r * r);
}
template <JetType J>
J operator/(const J& a, const J& b) {
  if (!(magnitude(b.v) > 0.0)) throw DomainError("div: zero denominator");
  return a * recip(b);
}
template <JetType J>
J operator/(const J& a, std::type_identity_t<scalar_of<J>> s) {
  if (!(magnitude(s) > 0.0)) throw DomainError("div: zero denominator");
  return scale(a, scalar_of<J>(1) / s);
}
template <JetType J>
J operator/(std::type_identity_t<scalar_of<J>> s, const J& a) {
  return scale(recip(a), s);
}

template <JetType J>
J& operator+=(J& a, const J& b) {
  return a = a + b;
}
template <JetType J>
J& operator-=(J& a, const J& b) {
  return a = a - b;
}
template <JetType J>
J& operator*=(J& a, const J& b) {
  return a = a * b;
}

template <JetType J>
J sq(const J& a) {
  return a * a;
}

template <JetType J>
J sqrt(const J& a) {
  using T = scalar_of<J>;
  if constexpr (is_complex_v<T>) {
    if (!(magnitude(a.v) > 0.0)) throw DomainError("sqrt: zero argument");
  } else {
    if (!(a.v > 0.0)) throw DomainError("sqrt: non-positive argument");
  }
  T s = std::sqrt(a.v);
  T f1 = T(0.5) / s;
  return chain(a, s, f1, -f1 / (T(2) * a.v));
}

template <JetType J>
J log(const J& a) {
  using T = scalar_of<J>;
  if constexpr (is_complex_v<T>) {
    if (!(magnitude(a.v) > 0.0)) throw DomainError("log: zero argument");
  } else {
    if (!(a.v > 0.0)) throw DomainError("log: non-positive argument");
  }
  T r = T(1) / a.v;
  return chain(a, std::log(a.v), r, -r * r);
}

template <JetType J>
J exp(const J& a) {
  auto e = std::exp(a.v);
  return chain(a, e, e, e);
}

template <JetType J>
J sin(const J& a) {
  auto s = std::sin(a.v), c = std::cos(a.v);
  return chain(a, s, c, -s);
}

template <JetType J>
J cos(const J& a) {
  auto s = std::sin(a.v), c = std::cos(a.v);
  return chain(a, c, -s, -c);
}

template <JetType J>
J tan(const J& a) {
  using T = scalar_of<J>;
  if (!(magnitude(std::cos(a.v)) > 1e-300)) throw DomainError("tan: pole");
  T t = std::tan(a.v);
  T s = T(1) + t * t;
  return chain(a, t, s, T(2) * t * s);
}

template <JetType J>
J tanh(const J& a) {
  using T = scalar_of<J>;
  T t = std::tanh(a.v);
  T s = T(1) - t * t;
  return chain(a, t, s, T(-2) * t * s);
}

template <JetType J>
J atan(const J& a) {
  using T = scalar_of<J>;
  T d = T(1) + a.v * a.v;
  if (!(magnitude(d) > 0.0)) throw DomainError("atan: branch point");
  return chain(a, std::atan(a.v), T(1) / d, T(-2) * a.v / (d * d));
}

// Angle of the vector (x, y) with the principal value of std::atan2.
template <JetType J>
  requires(!is_complex_v<scalar_of<J>>)
J atan2(const J& y, const J& x) {
  if (x.v == 0.0 && y.v == 0.0) throw DomainError("atan2: origin");
  J r = std::abs(x.v) >= std::abs(y.v) ? atan(y / x) : -atan(x / y);
  r.v = std::atan2(y.v, x.v);
  return r;
}

// Roots of a(x,y) u^2 + b(x,y) u + c(x,y) = 0 as jets.
template <class T = double>
struct QuadraticU {
  Jet2<T> a, b, c;

  Jet2<T> eval(const Jet2<T>& u) const { return (a * u + b) * u + c; }
  double scale() const {
    return std::max({magnitude(a.v), magnitude(b.v), magnitude(c.v)});
  }
};

enum class Branch { minus, plus };

namespace detail {
template <class T>
bool root_less(const T& p, const T& q) {
  if (real_part(p) != real_part(q)) return real_part(p) < real_part(q);
  return imag_part(p) < imag_part(q);
}
}  // namespace detail

inline constexpr double kDiscriminantTol = 1e-12;
inline constexpr double kLeadingTol = 1e-12;

// Both roots ordered ascending (by real part, then imaginary part).
template <class T>
std::array<Jet2<T>, 2> implicit_roots(const QuadraticU<T>& q) {
  const double sc = q.scale();
  if (!(sc > 0.0)) throw DegenerateError("implicit root: zero polynomial");
  if (magnitude(q.a.v) <= kLeadingTol * sc)
    throw DegenerateError("implicit root: leading coefficient vanishes");
  Jet2<T> disc = q.b * q.b - T(4) * q.a * q.c;
  const double dscale =
      std::max(magnitude(q.b.v) * magnitude(q.b.v), 4.0 * magnitude(q.a.v) * magnitude(q.c.v));
  if constexpr (is_complex_v<T>) {
    if (magnitude(disc.v) < kDiscriminantTol * dscale)
      throw DiscriminantError("implicit root: double root (envelope point)");
  } else {
    if (disc.v < kDiscriminantTol * dscale) {
      if (disc.v < -kDiscriminantTol * dscale)
        throw DiscriminantError("implicit root: no real roots");
      throw DiscriminantError("implicit root: double root (envelope point)");
    }
  }
  Jet2<T> s = sqrt(disc);
  // pick the sign that avoids cancellation in b + s
  double align = real_part(q.b.v) * real_part(s.v) + imag_part(q.b.v) * imag_part(s.v);
  Jet2<T> t = align >= 0.0 ? q.b + s : q.b - s;
  Jet2<T> h = t * T(-0.5);
  std::array<Jet2<T>, 2> r{h / q.a, q.c / h};
  if (detail::root_less(r[1].v, r[0].v)) std::swap(r[0], r[1]);
  return r;
}

template <class T>
Jet2<T> implicit_root_jet(const QuadraticU<T>& q, Branch br) {
  auto r = implicit_roots(q);
  return br == Branch::plus ? r[1] : r[0];
}

}  // namespace circweb
