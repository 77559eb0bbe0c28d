#pragma once

#include <vector>

#include "folcan/basket.hpp"
#include "folcan/riemann_roch.hpp"
#include "support/random.hpp"

namespace folcan::testing {

inline LocalProfile random_profile(Generator& gen) {
  switch (gen.integer(0, 5)) {
    case 0: return LocalProfile::terminal(static_cast<std::uint32_t>(gen.integer(2, 6)));
    case 1: return LocalProfile::dihedral_zero(static_cast<std::uint32_t>(gen.integer(1, 2)));
    case 2: return LocalProfile::dihedral_half();
    case 3: return LocalProfile::cusp();
    default: return LocalProfile::terminal(2);
  }
}

inline Basket random_basket(Generator& gen, long max_size = 4) {
  std::vector<LocalProfile> profiles;
  const long size = gen.integer(0, max_size);
  for (long i = 0; i < size; ++i) profiles.push_back(random_profile(gen));
  return Basket(std::move(profiles));
}

inline ModelNumerics random_numerics(Generator& gen) {
  ModelNumerics num;
  num.k1 = Rational(gen.integer(1, 40), gen.integer(1, 6));
  num.k2 = Rational(gen.integer(-40, 40), gen.integer(1, 6));
  num.chi = gen.integer(-5, 10);
  num.basket = random_basket(gen);
  return num;
}

}  // namespace folcan::testing
