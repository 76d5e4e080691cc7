#pragma once

// Truncated Taylor series c_0 + c_1 t + ... + c_K t^K with the usual
// recurrences for elementary functions.  Used for exact derivatives of
// amplitudes and phases and for series reversion.

#include <cmath>
#include <complex>
#include <vector>

namespace oscwhit {

template <class T>
class Jet {
 public:
  Jet() = default;
  explicit Jet(int order, T c0 = T(0)) : c_(order + 1, T(0)) { c_[0] = c0; }

  // the identity t -> x0 + t
  static Jet variable(int order, T x0) {
    Jet j(order, x0);
    if (order >= 1) j.c_[1] = T(1);
    return j;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  T& operator[](int k) { return c_[k]; }
  const T& operator[](int k) const { return c_[k]; }
  const std::vector<T>& coeffs() const { return c_; }

  // n-th derivative at the expansion point
  T derivative(int n) const {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return c_[n] * f;
  }

  Jet& operator+=(const Jet& o) {
    for (int k = 0; k <= order(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (int k = 0; k <= order(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Jet& operator*=(T s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator+(Jet a, T s) { a.c_[0] += s; return a; }
  friend Jet operator+(T s, Jet a) { a.c_[0] += s; return a; }
  friend Jet operator-(Jet a, T s) { a.c_[0] -= s; return a; }
  friend Jet operator-(T s, const Jet& a) { return (-a) + s; }
  friend Jet operator*(Jet a, T s) { return a *= s; }
  friend Jet operator*(T s, Jet a) { return a *= s; }
  friend Jet operator/(Jet a, T s) { return a *= (T(1) / s); }
  Jet operator-() const {
    Jet r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Jet operator*(const Jet& a, const Jet& b) {
    int K = a.order();
    Jet r(K);
    for (int k = 0; k <= K; ++k) {
      T s(0);
      for (int j = 0; j <= k; ++j) s += a.c_[j] * b.c_[k - j];
      r.c_[k] = s;
    }
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) {
    int K = a.order();
    Jet r(K);
    for (int k = 0; k <= K; ++k) {
      T s = a.c_[k];
      for (int j = 1; j <= k; ++j) s -= b.c_[j] * r.c_[k - j];
      r.c_[k] = s / b.c_[0];
    }
    return r;
  }
  friend Jet operator/(T s, const Jet& b) { return Jet(b.order(), s) / b; }

  friend Jet exp(const Jet& a) {
    int K = a.order();
    Jet r(K);
    r.c_[0] = std::exp(a.c_[0]);
    for (int k = 1; k <= K; ++k) {
      T s(0);
      for (int j = 1; j <= k; ++j) s += T(double(j)) * a.c_[j] * r.c_[k - j];
      r.c_[k] = s / T(double(k));
    }
    return r;
  }

  friend Jet log(const Jet& a) {
    int K = a.order();
    Jet r(K);
    r.c_[0] = std::log(a.c_[0]);
    for (int k = 1; k <= K; ++k) {
      T s = a.c_[k] * T(double(k));
      for (int j = 1; j < k; ++j) s -= T(double(j)) * r.c_[j] * a.c_[k - j];
      r.c_[k] = s / (T(double(k)) * a.c_[0]);
    }
    return r;
  }

  // a^p for a_0 != 0
  friend Jet pow(const Jet& a, T p) {
    int K = a.order();
    Jet r(K);
    r.c_[0] = std::pow(a.c_[0], p);
    for (int k = 1; k <= K; ++k) {
      T s(0);
      for (int j = 1; j <= k; ++j)
        s += ((p + T(1)) * T(double(j)) - T(double(k))) * a.c_[j] * r.c_[k - j];
      r.c_[k] = s / (T(double(k)) * a.c_[0]);
    }
    return r;
  }

  friend Jet sqrt(const Jet& a) { return pow(a, T(0.5)); }

  friend void sincos(const Jet& a, Jet& s, Jet& c) {
    int K = a.order();
    s = Jet(K);
    c = Jet(K);
    s.c_[0] = std::sin(a.c_[0]);
    c.c_[0] = std::cos(a.c_[0]);
    for (int k = 1; k <= K; ++k) {
      T ss(0), cc(0);
      for (int j = 1; j <= k; ++j) {
        T ja = T(double(j)) * a.c_[j];
        ss += ja * c.c_[k - j];
        cc -= ja * s.c_[k - j];
      }
      s.c_[k] = ss / T(double(k));
      c.c_[k] = cc / T(double(k));
    }
  }
  friend Jet sin(const Jet& a) { Jet s, c; sincos(a, s, c); return s; }
  friend Jet cos(const Jet& a) { Jet s, c; sincos(a, s, c); return c; }

  friend void sinhcosh(const Jet& a, Jet& s, Jet& c) {
    int K = a.order();
    s = Jet(K);
    c = Jet(K);
    s.c_[0] = std::sinh(a.c_[0]);
    c.c_[0] = std::cosh(a.c_[0]);
    for (int k = 1; k <= K; ++k) {
      T ss(0), cc(0);
      for (int j = 1; j <= k; ++j) {
        T ja = T(double(j)) * a.c_[j];
        ss += ja * c.c_[k - j];
        cc += ja * s.c_[k - j];
      }
      s.c_[k] = ss / T(double(k));
      c.c_[k] = cc / T(double(k));
    }
  }
  friend Jet sinh(const Jet& a) { Jet s, c; sinhcosh(a, s, c); return s; }
  friend Jet cosh(const Jet& a) { Jet s, c; sinhcosh(a, s, c); return c; }

  // f(g(u)) where f is this series around its own point and g has g_0 = 0
  Jet compose(const Jet& g) const {
    int K = g.order();
    Jet r(K), p(K, T(1));
    for (int n = 0; n <= order(); ++n) {
      for (int k = 0; k <= K; ++k) r.c_[k] += c_[n] * p.c_[k];
      p = p * g;
    }
    return r;
  }

  // formal derivative, order drops by one
  Jet differentiate() const {
    Jet r(std::max(order() - 1, 0));
    for (int k = 1; k <= order(); ++k) r.c_[k - 1] = c_[k] * T(double(k));
    return r;
  }

 private:
  std::vector<T> c_;
};

using JetD = Jet<double>;
using JetC = Jet<std::complex<double>>;

}  // namespace oscwhit
