#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "folcan/rational.hpp"

namespace folcan {

enum class SingularityKind : std::uint8_t {
  TerminalCyclic,
  DihedralZero,
  DihedralHalf,
  NonQGorCusp,
};

std::string_view to_string(SingularityKind kind);
SingularityKind parse_singularity_kind(std::string_view name);

/// Numerical behaviour of a single canonical foliation singularity: the local
/// term a(x, m K_F) as a function of m.
///
/// Terminal points of index n follow -(n-1)/(2n) at m = +-1 mod n and vanish
/// at m = 0 mod n. Other residues use the table -r(n-r)/(2n) unless an
/// override is supplied; `is_extrapolated` reports when that table was used.
class LocalProfile {
 public:
  static LocalProfile terminal(std::uint32_t n, std::optional<std::vector<Rational>> override = {});
  static LocalProfile dihedral_zero(std::uint32_t index = 2);
  static LocalProfile dihedral_half();
  static LocalProfile cusp();

  SingularityKind kind() const noexcept { return kind_; }
  /// Cartier index of K_F at the point; empty for cusps (not Q-Gorenstein).
  std::optional<std::uint32_t> local_index() const;
  bool is_q_gorenstein() const noexcept { return kind_ != SingularityKind::NonQGorCusp; }
  const std::optional<std::vector<Rational>>& override_table() const noexcept { return override_; }

  /// a(x, m K_F).
  Rational local_term(std::uint64_t m) const;
  /// True when local_term(m) came from the default terminal residue table at a
  /// residue other than 0 or +-1.
  bool is_extrapolated(std::uint64_t m) const;

  /// Short label used in canonical basket keys: T<n>, DZ<i>, DH, C.
  std::string code() const;

  friend bool operator==(const LocalProfile&, const LocalProfile&) = default;
  friend std::strong_ordering operator<=>(const LocalProfile& a, const LocalProfile& b);

 private:
  LocalProfile(SingularityKind kind, std::uint32_t index) : kind_(kind), index_(index) {}

  SingularityKind kind_;
  std::uint32_t index_;  // 0 for cusps
  std::optional<std::vector<Rational>> override_;
};

/// Multiset of local profiles, kept in canonical sorted order.
class Basket {
 public:
  Basket() = default;
  explicit Basket(std::vector<LocalProfile> profiles);

  const std::vector<LocalProfile>& profiles() const noexcept { return profiles_; }
  std::size_t size() const noexcept { return profiles_.size(); }
  bool empty() const noexcept { return profiles_.empty(); }

  std::size_t q_gorenstein_count() const;
  std::size_t cusp_count() const;

  /// Canonical key, e.g. "{T2,T2,DH,C}".
  std::string key() const;

  friend bool operator==(const Basket&, const Basket&) = default;
  friend std::strong_ordering operator<=>(const Basket& a, const Basket& b);

 private:
  std::vector<LocalProfile> profiles_;
};

/// Sum of local terms over the basket.
Rational basket_term(const Basket& b, std::uint64_t m);
bool basket_uses_extrapolation(const Basket& b, std::uint64_t m);

/// lcm of local indices over Q-Gorenstein points (1 when there are none).
std::uint64_t q_index(const Basket& b);

/// Period of m -> basket_term(b, m) on m >= 1. Equal to q_index: cusps add a
/// constant on m >= 1.
std::uint64_t basket_period(const Basket& b);

struct BasketSizeVerdict {
  /// -basket_term(b, 1) over the whole basket.
  Rational sum_neg_a;
  /// -sum of a(x, K_F) over the terminal and dihedral-half points only.
  Rational sigma_sum;
  /// Number of terminal and dihedral-half points.
  std::size_t size = 0;
  /// sigma_sum >= size / 2.
  bool bound_holds = true;
};

BasketSizeVerdict basket_size_bound(const Basket& b);

}  // namespace folcan
