#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "folcan/basket.hpp"
#include "folcan/rational.hpp"

namespace folcan {

/// Numerical data fixing the Hilbert function m -> chi(X, m K_F).
struct ModelNumerics {
  Rational k1;  ///< K_F^2
  Rational k2;  ///< K_F . K_X
  long chi = 0;  ///< chi(O_X)
  Basket basket;
  std::optional<Rational> kx2;  ///< K_X^2, when known

  friend bool operator==(const ModelNumerics&, const ModelNumerics&) = default;
};

/// P(m) = (m^2 k1 - m k2)/2 + chi + c[m mod period] for m >= 1, P(0) = chi.
class HilbertFunction {
 public:
  HilbertFunction(Rational k1, Rational k2, long chi, std::uint64_t period,
                  std::vector<Rational> correction, bool extrapolated = false);

  const Rational& k1() const noexcept { return k1_; }
  const Rational& k2() const noexcept { return k2_; }
  long chi() const noexcept { return chi_; }
  std::uint64_t period() const noexcept { return period_; }
  const std::vector<Rational>& correction() const noexcept { return correction_; }
  /// Some correction came from the extrapolated terminal residue table.
  bool extrapolated() const noexcept { return extrapolated_; }

  /// False when the correction table does not have `period` entries.
  bool well_formed() const noexcept { return period_ > 0 && correction_.size() == period_; }

  Rational value(std::uint64_t m) const;

  /// Same function with the correction reduced to its minimal period.
  HilbertFunction canonical() const;

  /// Pointwise equality of the functions (compares canonical forms).
  friend bool operator==(const HilbertFunction& a, const HilbertFunction& b);
  /// Lexicographic on (k1, k2, chi, period, correction) of canonical forms.
  friend std::strong_ordering operator<=>(const HilbertFunction& a, const HilbertFunction& b);

 private:
  Rational k1_;
  Rational k2_;
  long chi_;
  std::uint64_t period_;
  std::vector<Rational> correction_;
  bool extrapolated_;
};

Rational hilbert_value(const ModelNumerics& num, std::uint64_t m);

/// Length of the window [0, L) on which integrality must be checked:
/// L = lcm(T, 2 den(k1), 2 den(k2)). P(m + L) - P(m) is an integer for this L.
std::uint64_t integrality_window(const ModelNumerics& num);

bool integrality_check(const ModelNumerics& num);

/// Throws NotIntegral if integrality_check fails.
HilbertFunction to_hilbert_function(const ModelNumerics& num);

/// P(m + 2T) - 2 P(m + T) + P(m) = T^2 k1 for m in [1, 2T].
bool second_difference_check(const HilbertFunction& h);

}  // namespace folcan
