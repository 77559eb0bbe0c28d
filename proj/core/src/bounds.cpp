#include "folcan/bounds.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <thread>

#include "folcan/error.hpp"

namespace folcan {

namespace {

Rational from_u64(std::uint64_t v) { return Rational(mpz_class(static_cast<unsigned long>(v))); }

void require_positive_volume(const Rational& k1) {
  if (k1.sign() <= 0) throw Error(ErrorCode::NonPositiveVolume, "K_F^2 must be positive", k1.str());
}

void require_positive_index(std::uint64_t s) {
  if (s == 0) throw Error(ErrorCode::InvalidInput, "index s must be positive");
}

}  // namespace

BoundReport kx2_bounds(const Rational& k1, const Rational& k2, std::uint64_t s) {
  require_positive_volume(k1);
  require_positive_index(s);
  const Rational rs = from_u64(s);
  BoundReport r;
  r.kx2_upper = k2 * k2 / k1;
  r.kx2_lower_exclusive = -(Rational(16) * rs * rs * k1 + Rational(8) * rs * k2);
  r.kx2_lower_exclusive_linear = -(Rational(16) * rs * k1 + Rational(8) * rs * k2);
  r.interval_empty = !(r.kx2_lower_exclusive < r.kx2_upper);
  return r;
}

AmpleNumerics ample_divisor_numerics(const Rational& k1, const Rational& k2, const Rational& kx2,
                                     std::uint64_t s) {
  const Rational rs = from_u64(s);
  return {Rational(16) * rs * rs * k1 + Rational(8) * rs * k2 + kx2, Rational(4) * rs * k2 + kx2};
}

bool km_envelope(const Rational& d_squared, std::uint64_t m, const Rational& q0, const Rational& q1,
                 const Rational& h0) {
  const Rational mm = from_u64(m);
  return abs(h0 - mm * mm * d_squared / Rational(2)) <= q1 * mm + q0;
}

std::vector<LocalProfile> admissible_profiles(std::uint64_t s) {
  require_positive_index(s);
  std::vector<LocalProfile> out;
  for (std::uint64_t n = 2; n <= s; ++n) {
    if (s % n == 0) out.push_back(LocalProfile::terminal(static_cast<std::uint32_t>(n)));
  }
  out.push_back(LocalProfile::dihedral_zero(1));
  if (s % 2 == 0) {
    out.push_back(LocalProfile::dihedral_zero(2));
    out.push_back(LocalProfile::dihedral_half());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_basket_in_stratum(std::uint64_t s, std::size_t q_gorenstein_count,
                                std::size_t max_cusps,
                                const std::function<void(const Basket&)>& visit) {
  const std::vector<LocalProfile> pool = admissible_profiles(s);
  // Multisets of size k as nondecreasing index sequences into the pool.
  const std::size_t k = q_gorenstein_count;
  std::vector<std::size_t> pick(k, 0);
  while (true) {
    std::vector<LocalProfile> base;
    base.reserve(k + max_cusps);
    for (std::size_t i : pick) base.push_back(pool[i]);
    for (std::size_t c = 0; c <= max_cusps; ++c) {
      std::vector<LocalProfile> profiles = base;
      profiles.insert(profiles.end(), c, LocalProfile::cusp());
      visit(Basket(std::move(profiles)));
    }
    // next nondecreasing sequence
    std::size_t pos = k;
    while (pos > 0 && pick[pos - 1] + 1 == pool.size()) --pos;
    if (pos == 0) break;
    ++pick[pos - 1];
    for (std::size_t i = pos; i < k; ++i) pick[i] = pick[pos - 1];
  }
}

std::vector<Basket> enumerate_baskets(std::uint64_t s, std::size_t cap, std::size_t max_cusps) {
  std::vector<Basket> out;
  for (std::size_t k = 0; k <= cap; ++k) {
    for_each_basket_in_stratum(s, k, max_cusps, [&out](const Basket& b) { out.push_back(b); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using Accumulator = std::map<HilbertFunction, std::set<Basket>>;

void collect_stratum(const EnumerationQuery& q, std::size_t stratum, Accumulator& acc) {
  const std::size_t max_cusps = q.include_cusps ? q.max_cusps : 0;
  for_each_basket_in_stratum(q.s, stratum, max_cusps, [&](const Basket& basket) {
    const std::uint64_t idx = q_index(basket);
    const bool index_ok = q.index_filter == IndexFilter::Equal ? idx == q.s : q.s % idx == 0;
    if (!index_ok) return;
    for (long chi : q.chi_set) {
      ModelNumerics num{q.k1, q.k2, chi, basket, std::nullopt};
      if (!integrality_check(num)) continue;
      acc[to_hilbert_function(num).canonical()].insert(basket);
    }
  });
}

}  // namespace

std::vector<EnumeratedFunction> enumerate_hilbert(const EnumerationQuery& query, unsigned workers) {
  require_positive_volume(query.k1);
  require_positive_index(query.s);
  if (query.chi_set.empty()) return {};

  const std::size_t strata = query.basket_cap + 1;
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(strata));
  std::vector<Accumulator> partial(workers);
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&query, &partial, &failures, w, workers, strata] {
        try {
          for (std::size_t k = w; k < strata; k += workers) collect_stratum(query, k, partial[w]);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  Accumulator merged;
  for (auto& part : partial) {
    for (auto& [fn, baskets] : part) merged[fn].insert(baskets.begin(), baskets.end());
  }

  std::vector<EnumeratedFunction> out;
  out.reserve(merged.size());
  for (auto& [fn, baskets] : merged) {
    // Flag the function only when no witness avoids the extrapolated table.
    const bool extrapolated = std::all_of(baskets.begin(), baskets.end(), [](const Basket& b) {
      for (std::uint64_t m = 1; m <= basket_period(b); ++m) {
        if (basket_uses_extrapolation(b, m)) return true;
      }
      return false;
    });
    HilbertFunction flagged(fn.k1(), fn.k2(), fn.chi(), fn.period(), fn.correction(), extrapolated);
    out.push_back({std::move(flagged), std::vector<Basket>(baskets.begin(), baskets.end())});
  }
  return out;
}

}  // namespace folcan
