#include "folcan/basket.hpp"

#include <algorithm>
#include <numeric>

#include "folcan/error.hpp"

namespace folcan {

std::string_view to_string(SingularityKind kind) {
  switch (kind) {
    case SingularityKind::TerminalCyclic: return "TerminalCyclic";
    case SingularityKind::DihedralZero: return "DihedralZero";
    case SingularityKind::DihedralHalf: return "DihedralHalf";
    case SingularityKind::NonQGorCusp: return "NonQGorCusp";
  }
  return "Unknown";
}

SingularityKind parse_singularity_kind(std::string_view name) {
  for (auto k : {SingularityKind::TerminalCyclic, SingularityKind::DihedralZero,
                 SingularityKind::DihedralHalf, SingularityKind::NonQGorCusp}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorCode::ParseError, "unknown singularity kind", std::string(name));
}

LocalProfile LocalProfile::terminal(std::uint32_t n, std::optional<std::vector<Rational>> override) {
  if (n < 2) {
    throw Error(ErrorCode::InvalidProfile, "terminal profile needs index n >= 2", std::to_string(n));
  }
  LocalProfile p(SingularityKind::TerminalCyclic, n);
  if (override) {
    if (override->size() != n) {
      throw Error(ErrorCode::InvalidOverride, "override table length must equal the index",
                  std::to_string(override->size()) + " vs " + std::to_string(n));
    }
    if (!override->front().is_zero()) {
      throw Error(ErrorCode::InvalidOverride, "override must vanish at residue 0",
                  override->front().str());
    }
    for (std::size_t r = 0; r < override->size(); ++r) {
      if ((*override)[r].sign() > 0) {
        throw Error(ErrorCode::InvalidOverride, "override values must be <= 0",
                    "residue " + std::to_string(r) + ": " + (*override)[r].str());
      }
    }
    p.override_ = std::move(override);
  }
  return p;
}

LocalProfile LocalProfile::dihedral_zero(std::uint32_t index) {
  if (index != 1 && index != 2) {
    throw Error(ErrorCode::InvalidProfile, "dihedral-zero index must be 1 or 2",
                std::to_string(index));
  }
  return LocalProfile(SingularityKind::DihedralZero, index);
}

LocalProfile LocalProfile::dihedral_half() { return LocalProfile(SingularityKind::DihedralHalf, 2); }

LocalProfile LocalProfile::cusp() { return LocalProfile(SingularityKind::NonQGorCusp, 0); }

std::optional<std::uint32_t> LocalProfile::local_index() const {
  if (kind_ == SingularityKind::NonQGorCusp) return std::nullopt;
  return index_;
}

Rational LocalProfile::local_term(std::uint64_t m) const {
  if (m == 0) return 0;
  switch (kind_) {
    case SingularityKind::NonQGorCusp:
      return -1;
    case SingularityKind::DihedralZero:
      return 0;
    case SingularityKind::DihedralHalf:
      return m % 2 == 1 ? Rational(-1, 2) : Rational(0);
    case SingularityKind::TerminalCyclic: {
      const std::uint64_t n = index_;
      const std::uint64_t r = m % n;
      if (override_) return (*override_)[r];
      if (r == 0) return 0;
      // r(n-r) is symmetric under r -> n-r and equals n-1 at r = 1.
      return -Rational(mpz_class(static_cast<unsigned long>(r * (n - r))),
                       mpz_class(static_cast<unsigned long>(2 * n)));
    }
  }
  return 0;
}

bool LocalProfile::is_extrapolated(std::uint64_t m) const {
  if (kind_ != SingularityKind::TerminalCyclic || override_ || m == 0) return false;
  const std::uint64_t r = m % index_;
  return r != 0 && r != 1 && r != index_ - 1;
}

std::string LocalProfile::code() const {
  switch (kind_) {
    case SingularityKind::TerminalCyclic: {
      std::string s = "T" + std::to_string(index_);
      if (override_) {
        s += "[";
        for (std::size_t i = 0; i < override_->size(); ++i) {
          if (i) s += ";";
          s += (*override_)[i].str();
        }
        s += "]";
      }
      return s;
    }
    case SingularityKind::DihedralZero: return "DZ" + std::to_string(index_);
    case SingularityKind::DihedralHalf: return "DH";
    case SingularityKind::NonQGorCusp: return "C";
  }
  return "?";
}

std::strong_ordering operator<=>(const LocalProfile& a, const LocalProfile& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.index_ <=> b.index_; c != 0) return c;
  if (a.override_.has_value() != b.override_.has_value()) {
    return a.override_.has_value() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (!a.override_) return std::strong_ordering::equal;
  return std::lexicographical_compare_three_way(a.override_->begin(), a.override_->end(),
                                                b.override_->begin(), b.override_->end());
}

Basket::Basket(std::vector<LocalProfile> profiles) : profiles_(std::move(profiles)) {
  std::sort(profiles_.begin(), profiles_.end());
}

std::size_t Basket::q_gorenstein_count() const {
  return static_cast<std::size_t>(
      std::count_if(profiles_.begin(), profiles_.end(), [](const auto& p) { return p.is_q_gorenstein(); }));
}

std::size_t Basket::cusp_count() const { return profiles_.size() - q_gorenstein_count(); }

std::string Basket::key() const {
  std::string s = "{";
  for (std::size_t i = 0; i < profiles_.size(); ++i) {
    if (i) s += ",";
    s += profiles_[i].code();
  }
  return s + "}";
}

std::strong_ordering operator<=>(const Basket& a, const Basket& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.profiles_.begin(), a.profiles_.end(),
                                                b.profiles_.begin(), b.profiles_.end());
}

Rational basket_term(const Basket& b, std::uint64_t m) {
  Rational sum;
  for (const auto& p : b.profiles()) sum += p.local_term(m);
  return sum;
}

bool basket_uses_extrapolation(const Basket& b, std::uint64_t m) {
  return std::any_of(b.profiles().begin(), b.profiles().end(),
                     [m](const auto& p) { return p.is_extrapolated(m); });
}

std::uint64_t q_index(const Basket& b) {
  std::uint64_t l = 1;
  for (const auto& p : b.profiles()) {
    if (auto n = p.local_index()) l = std::lcm(l, static_cast<std::uint64_t>(*n));
  }
  return l;
}

std::uint64_t basket_period(const Basket& b) { return q_index(b); }

BasketSizeVerdict basket_size_bound(const Basket& b) {
  BasketSizeVerdict v;
  v.sum_neg_a = -basket_term(b, 1);
  for (const auto& p : b.profiles()) {
    if (p.kind() == SingularityKind::TerminalCyclic || p.kind() == SingularityKind::DihedralHalf) {
      v.sigma_sum -= p.local_term(1);
      ++v.size;
    }
  }
  v.bound_holds = v.sigma_sum * 2 >= Rational(static_cast<long>(v.size));
  return v;
}

}  // namespace folcan
