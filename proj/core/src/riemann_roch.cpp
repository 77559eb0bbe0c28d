#include "folcan/riemann_roch.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "folcan/error.hpp"

namespace folcan {

namespace {

Rational from_u64(std::uint64_t v) { return Rational(mpz_class(static_cast<unsigned long>(v))); }

Rational quadratic_part(const Rational& k1, const Rational& k2, long chi, std::uint64_t m) {
  const Rational mm = from_u64(m);
  return (mm * mm * k1 - mm * k2) / Rational(2) + Rational(chi);
}

std::uint64_t to_u64(const mpz_class& v, const char* what) {
  if (v < 0 || !v.fits_ulong_p()) {
    throw Error(ErrorCode::InvalidInput, std::string(what) + " exceeds the supported range",
                v.get_str());
  }
  return v.get_ui();
}

}  // namespace

HilbertFunction::HilbertFunction(Rational k1, Rational k2, long chi, std::uint64_t period,
                                 std::vector<Rational> correction, bool extrapolated)
    : k1_(std::move(k1)),
      k2_(std::move(k2)),
      chi_(chi),
      period_(period),
      correction_(std::move(correction)),
      extrapolated_(extrapolated) {}

Rational HilbertFunction::value(std::uint64_t m) const {
  Rational p = quadratic_part(k1_, k2_, chi_, m);
  if (m == 0) return p;
  if (!well_formed()) throw Error(ErrorCode::InvalidInput, "correction table does not match period");
  return p + correction_[m % period_];
}

HilbertFunction HilbertFunction::canonical() const {
  if (!well_formed()) return *this;
  for (std::uint64_t t = 1; t < period_; ++t) {
    if (period_ % t != 0) continue;
    bool periodic = true;
    for (std::uint64_t r = t; r < period_ && periodic; ++r) periodic = correction_[r] == correction_[r % t];
    if (periodic) {
      return HilbertFunction(k1_, k2_, chi_, t,
                             std::vector<Rational>(correction_.begin(), correction_.begin() + t),
                             extrapolated_);
    }
  }
  return *this;
}

bool operator==(const HilbertFunction& a, const HilbertFunction& b) {
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const HilbertFunction& a, const HilbertFunction& b) {
  const HilbertFunction ca = a.canonical();
  const HilbertFunction cb = b.canonical();
  if (auto c = ca.k1_ <=> cb.k1_; c != 0) return c;
  if (auto c = ca.k2_ <=> cb.k2_; c != 0) return c;
  if (auto c = ca.chi_ <=> cb.chi_; c != 0) return c;
  if (auto c = ca.period_ <=> cb.period_; c != 0) return c;
  return std::lexicographical_compare_three_way(ca.correction_.begin(), ca.correction_.end(),
                                                cb.correction_.begin(), cb.correction_.end());
}

Rational hilbert_value(const ModelNumerics& num, std::uint64_t m) {
  return quadratic_part(num.k1, num.k2, num.chi, m) + basket_term(num.basket, m);
}

std::uint64_t integrality_window(const ModelNumerics& num) {
  mpz_class l(static_cast<unsigned long>(basket_period(num.basket)));
  const mpz_class d1 = 2 * num.k1.denominator();
  const mpz_class d2 = 2 * num.k2.denominator();
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d1.get_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d2.get_mpz_t());
  return to_u64(l, "integrality window");
}

bool integrality_check(const ModelNumerics& num) {
  const std::uint64_t window = integrality_window(num);
  for (std::uint64_t m = 0; m < window; ++m) {
    if (!hilbert_value(num, m).is_integer()) return false;
  }
  return true;
}

HilbertFunction to_hilbert_function(const ModelNumerics& num) {
  if (!integrality_check(num)) {
    throw Error(ErrorCode::NotIntegral, "Hilbert function takes non-integral values",
                "k1=" + num.k1.str() + " k2=" + num.k2.str() + " chi=" + std::to_string(num.chi) +
                    " basket=" + num.basket.key());
  }
  const std::uint64_t period = basket_period(num.basket);
  std::vector<Rational> correction(period);
  bool extrapolated = false;
  for (std::uint64_t r = 0; r < period; ++r) {
    // residue r is represented by m = r for r >= 1 and by m = period for r = 0
    const std::uint64_t m = r == 0 ? period : r;
    correction[r] = basket_term(num.basket, m);
    extrapolated = extrapolated || basket_uses_extrapolation(num.basket, m);
  }
  return HilbertFunction(num.k1, num.k2, num.chi, period, std::move(correction), extrapolated);
}

bool second_difference_check(const HilbertFunction& h) {
  if (!h.well_formed()) return false;
  const std::uint64_t t = h.period();
  const Rational expected = from_u64(t) * from_u64(t) * h.k1();
  for (std::uint64_t m = 1; m <= 2 * t; ++m) {
    if (h.value(m + 2 * t) - Rational(2) * h.value(m + t) + h.value(m) != expected) return false;
  }
  return true;
}

}  // namespace folcan
