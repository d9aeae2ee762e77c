#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "rsc/core/scalar.hpp"

namespace rsc {

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// Trailing zero coefficients are trimmed for exact scalars only.
template <class S>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  const std::vector<S>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const S& operator[](std::size_t i) const { return coeffs_.at(i); }

  S eval(const S& x) const {
    S acc = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<S> out;
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (i < a.coeffs_.size() && i < b.coeffs_.size()) out.push_back(a.coeffs_[i] + b.coeffs_[i]);
      else out.push_back(i < a.coeffs_.size() ? a.coeffs_[i] : b.coeffs_[i]);
    }
    return Poly(std::move(out));
  }

  friend Poly operator-(const Poly& a) {
    std::vector<S> out;
    for (const auto& c : a.coeffs_) out.push_back(-c);
    return Poly(std::move(out));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    std::vector<S> out;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        S term = a.coeffs_[i] * b.coeffs_[j];
        if (i + j < out.size()) out[i + j] = out[i + j] + term;
        else out.push_back(std::move(term));
      }
    }
    return Poly(std::move(out));
  }

  friend Poly operator*(const S& s, const Poly& a) {
    std::vector<S> out;
    for (const auto& c : a.coeffs_) out.push_back(s * c);
    return Poly(std::move(out));
  }

  /// this(g(x))
  Poly compose(const Poly& g) const {
    Poly acc({coeffs_.back()});
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * g + Poly({coeffs_[i]});
    return acc;
  }

 private:
  void trim() {
    if constexpr (ScalarTraits<S>::kind == ScalarKind::Exact) {
      while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    if (coeffs_.empty()) coeffs_.push_back(S());
  }

  std::vector<S> coeffs_;
};

template <class S>
bool poly_equal(const Poly<S>& a, const Poly<S>& b, const PrecisionContext& ctx) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  for (std::size_t i = 0; i < n; ++i) {
    const bool in_a = i < a.coeffs().size(), in_b = i < b.coeffs().size();
    if (in_a && in_b) {
      if (!ScalarTraits<S>::equal(a[i], b[i], ctx)) return false;
    } else if (!ScalarTraits<S>::is_zero(in_a ? a[i] : b[i], ctx)) {
      return false;
    }
  }
  return true;
}

/// Human-readable form such as "x^3 - 3x + 1" (rational coefficients print
/// bare; others are parenthesized).
std::string poly_to_string(const Poly<FieldElement>& p);

}  // namespace rsc
