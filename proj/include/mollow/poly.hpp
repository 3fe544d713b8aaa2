#ifndef MOLLOW_POLY_HPP
#define MOLLOW_POLY_HPP

#include <cstddef>
#include <vector>

#include "mollow/types.hpp"

namespace mollow {

/// Dense polynomial with complex coefficients, ascending powers.
class Poly {
 public:
  Poly() : c_{Complex{0.0}} {}
  explicit Poly(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(Complex{0.0});
    trim();
  }

  static Poly constant(Complex a) { return Poly({a}); }
  /// a + b*w
  static Poly linear(Complex a, Complex b) { return Poly({a, b}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.size() == 1 && c_[0] == Complex{0.0}; }
  const std::vector<Complex>& coeffs() const { return c_; }
  Complex coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Complex{0.0}; }

  Complex eval(Complex w) const {
    Complex v{0.0};
    for (std::size_t k = c_.size(); k-- > 0;) v = v * w + c_[k];
    return v;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly{};
    std::vector<Complex> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = double(k) * c_[k];
    return Poly(std::move(d));
  }

  /// Polynomial with conjugated coefficients; equals conj(p(w)) on the real
  /// axis and is its analytic continuation off it.
  Poly conj_coeffs() const {
    std::vector<Complex> d(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) d[k] = std::conj(c_[k]);
    return Poly(std::move(d));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Complex> d(std::max(a.c_.size(), b.c_.size()), Complex{0.0});
    for (std::size_t k = 0; k < a.c_.size(); ++k) d[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) d[k] += b.c_[k];
    return Poly(std::move(d));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Complex> d(std::max(a.c_.size(), b.c_.size()), Complex{0.0});
    for (std::size_t k = 0; k < a.c_.size(); ++k) d[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) d[k] -= b.c_[k];
    return Poly(std::move(d));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    std::vector<Complex> d(a.c_.size() + b.c_.size() - 1, Complex{0.0});
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(d));
  }
  friend Poly operator*(Complex s, const Poly& a) {
    std::vector<Complex> d(a.c_.size());
    for (std::size_t k = 0; k < a.c_.size(); ++k) d[k] = s * a.c_[k];
    return Poly(std::move(d));
  }

 private:
  void trim() {
    while (c_.size() > 1 && c_.back() == Complex{0.0}) c_.pop_back();
  }
  std::vector<Complex> c_;
};

}  // namespace mollow

#endif
