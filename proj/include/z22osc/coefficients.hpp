#pragma once

#include <boost/rational.hpp>
#include <complex>
#include <map>
#include <sstream>
#include <string>

namespace z22osc {

using Rational = boost::rational<long long>;

inline std::string to_string(const Rational& r) {
  std::ostringstream oss;
  oss << r.numerator() << '/' << r.denominator();
  return oss.str();
}

// Gaussian rational re + i im with exact components.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  bool is_zero() const { return re == Rational(0) && im == Rational(0); }
  GaussianRational conj() const { return {re, -im}; }

  friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
    return x.re == y.re && x.im == y.im;
  }
  friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend GaussianRational operator-(const GaussianRational& x) { return {-x.re, -x.im}; }
  friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }

  std::complex<double> to_complex() const {
    return {boost::rational_cast<double>(re), boost::rational_cast<double>(im)};
  }
};

// Exact scalar of the engine: a finite sum  sum_k c_k u^k  with Gaussian
// rational c_k and u a formal unit phase (u = e^{i lambda}).  Conjugation
// maps c u^k to conj(c) u^{-k}.  Zero terms are never stored.
class PhaseCoefficient {
 public:
  PhaseCoefficient() = default;
  explicit PhaseCoefficient(const GaussianRational& c) { add_term(0, c); }
  explicit PhaseCoefficient(const Rational& r) { add_term(0, {r, Rational(0)}); }
  explicit PhaseCoefficient(long long n) { add_term(0, {Rational(n), Rational(0)}); }

  static PhaseCoefficient one() { return PhaseCoefficient(1); }
  static PhaseCoefficient imaginary_unit() {
    PhaseCoefficient c;
    c.add_term(0, {Rational(0), Rational(1)});
    return c;
  }
  // c u^k
  static PhaseCoefficient unit_phase_power(int k, const GaussianRational& c = {Rational(1), Rational(0)}) {
    PhaseCoefficient p;
    p.add_term(k, c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_u_free() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }

  const std::map<int, GaussianRational>& terms() const { return terms_; }

  void add_term(int upow, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(upow, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  PhaseCoefficient& operator+=(const PhaseCoefficient& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, c);
    return *this;
  }
  PhaseCoefficient& operator-=(const PhaseCoefficient& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, -c);
    return *this;
  }

  friend PhaseCoefficient operator+(PhaseCoefficient x, const PhaseCoefficient& y) {
    x += y;
    return x;
  }
  friend PhaseCoefficient operator-(PhaseCoefficient x, const PhaseCoefficient& y) {
    x -= y;
    return x;
  }
  friend PhaseCoefficient operator-(const PhaseCoefficient& x) {
    PhaseCoefficient r;
    for (const auto& [k, c] : x.terms_) r.add_term(k, -c);
    return r;
  }
  friend PhaseCoefficient operator*(const PhaseCoefficient& x, const PhaseCoefficient& y) {
    PhaseCoefficient r;
    for (const auto& [kx, cx] : x.terms_)
      for (const auto& [ky, cy] : y.terms_) r.add_term(kx + ky, cx * cy);
    return r;
  }
  friend bool operator==(const PhaseCoefficient& x, const PhaseCoefficient& y) {
    return x.terms_ == y.terms_;
  }

  PhaseCoefficient conj() const {
    PhaseCoefficient r;
    for (const auto& [k, c] : terms_) r.add_term(-k, c.conj());
    return r;
  }

  // Multiply by u^k.
  PhaseCoefficient shifted(int k) const {
    PhaseCoefficient r;
    for (const auto& [p, c] : terms_) r.add_term(p + k, c);
    return r;
  }

  // Specialize u = e^{i lambda}.
  std::complex<double> specialize(double lambda) const {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [k, c] : terms_) {
      acc += c.to_complex() * std::polar(1.0, lambda * static_cast<double>(k));
    }
    return acc;
  }

 private:
  std::map<int, GaussianRational> terms_;  // u-power -> coefficient
};

}  // namespace z22osc
