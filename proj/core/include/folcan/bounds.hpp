#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "folcan/basket.hpp"
#include "folcan/rational.hpp"
#include "folcan/riemann_roch.hpp"

namespace folcan {

/// Admissible range lower < K_X^2 <= upper for fixed (K_F^2, K_F.K_X, index s),
/// derived from Hodge index (upper) and positivity of D^2 for the ample
/// D = 4s K_F + K_X (lower).
struct BoundReport {
  Rational kx2_upper;
  /// -(16 s^2 k1 + 8 s k2), from expanding (4 s K_F + K_X)^2.
  Rational kx2_lower_exclusive;
  /// -(16 s k1 + 8 s k2), the variant with a linear leading coefficient.
  /// Equal to kx2_lower_exclusive when s = 1.
  Rational kx2_lower_exclusive_linear;
  /// Only when k2 = -4 s k1: the interval (lower, upper] is empty.
  bool interval_empty = false;
  std::optional<Rational> d_squared;
  std::optional<Rational> d_dot_kx;
};

/// Throws NonPositiveVolume unless k1 > 0.
BoundReport kx2_bounds(const Rational& k1, const Rational& k2, std::uint64_t s);

struct AmpleNumerics {
  Rational d_squared;  ///< D^2 = 16 s^2 k1 + 8 s k2 + kx2
  Rational d_dot_kx;   ///< D.K_X = 4 s k2 + kx2
};

AmpleNumerics ample_divisor_numerics(const Rational& k1, const Rational& k2, const Rational& kx2,
                                     std::uint64_t s);

/// |h0 - m^2 D^2 / 2| <= q1 m + q0 for a caller-supplied linear envelope.
bool km_envelope(const Rational& d_squared, std::uint64_t m, const Rational& q0, const Rational& q1,
                 const Rational& h0);

/// Profiles whose index divides s: T(n) for divisors n >= 2, DZ(1), and DZ(2),
/// DH when s is even. Sorted canonically.
std::vector<LocalProfile> admissible_profiles(std::uint64_t s);

/// Baskets with exactly `q_gorenstein_count` Q-Gorenstein profiles drawn from
/// admissible_profiles(s) and 0..max_cusps cusps. One stratum of
/// enumerate_baskets.
void for_each_basket_in_stratum(std::uint64_t s, std::size_t q_gorenstein_count,
                                std::size_t max_cusps,
                                const std::function<void(const Basket&)>& visit);

/// All baskets with at most `cap` Q-Gorenstein profiles (index dividing s) and
/// at most `max_cusps` cusps, in canonical order, without duplicates.
std::vector<Basket> enumerate_baskets(std::uint64_t s, std::size_t cap, std::size_t max_cusps);

enum class IndexFilter {
  Equal,    ///< q_index(basket) == s
  Divides,  ///< q_index(basket) | s
};

struct EnumerationQuery {
  Rational k1;
  Rational k2;
  std::uint64_t s = 1;
  std::set<long> chi_set;
  std::size_t basket_cap = 0;
  bool include_cusps = true;
  std::size_t max_cusps = 0;
  IndexFilter index_filter = IndexFilter::Equal;
};

struct EnumeratedFunction {
  HilbertFunction function;  ///< canonical form
  std::vector<Basket> witnesses;  ///< sorted; every one has matching q_index
};

/// Finite set of Hilbert functions compatible with the query, deduplicated
/// and ordered by canonical form. The result does not depend on `workers`.
std::vector<EnumeratedFunction> enumerate_hilbert(const EnumerationQuery& query,
                                                  unsigned workers = 1);

}  // namespace folcan
