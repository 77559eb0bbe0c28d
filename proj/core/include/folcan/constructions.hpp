#pragma once

#include <map>
#include <string>
#include <vector>

#include "folcan/rational.hpp"
#include "folcan/riemann_roch.hpp"
#include "folcan/surface_model.hpp"

namespace folcan {

/// Double cover of the ruled surface P(O + O(D)) over a genus-q curve,
/// branched along a smooth member of |(2g+2) C0 + (2g+1) k F|. deg D = k.
struct RuledCoverInput {
  long k = 2;
  long g = 2;
  long q = 0;
};

/// Double cover of E x E branched along A = 2D x E + E x 2D (deg D = d),
/// fibred over E by the projection twisted with multiplication by n.
struct AbelianCoverInput {
  long d = 2;
  long n = 0;
};

struct ConstructionReport {
  Rational kf2;
  Rational kf_dot_kx;
  long fiber_genus = 0;
  /// Intermediate numbers computed on the lattice (e.g. "A^2", "R.F").
  std::map<std::string, Rational> auxiliary;
  /// Genericity hypotheses the numbers rely on; not verified.
  std::vector<std::string> assumptions;
};

/// Lattice <C0, F> of the ruled surface: C0^2 = -k, F^2 = 0, C0.F = 1, with
/// K_P = -2 C0 + (2q - 2 - k) F.
SurfaceModel ruled_surface_lattice(long k, long q);

/// Lattice <f1, f2, Gamma_n> on E x E: all squares 0, f1.f2 = 1,
/// Gamma_n.f1 = 1, Gamma_n.f2 = n^2.
SurfaceModel abelian_surface_lattice(long n);

/// Intersection of pullbacks under a double cover: (s^*W).(s^*V) = 2 (W.V).
Rational double_cover_pair(const SurfaceModel& base, const RationalVector& w, const RationalVector& v);

ConstructionReport ruled_double_cover(const RuledCoverInput& in);
ConstructionReport abelian_double_cover(const AbelianCoverInput& in);

/// Genus g of a cover with 2g - 2 = degree (2 g_base - 2) + ram_degree.
long riemann_hurwitz(long g_base, long degree, long ram_degree);

struct FibrationIdentities {
  Rational kxc2;       ///< K_{X/C}^2 = K_X^2 - 8 (g(F)-1)(g(C)-1)
  Rational kf_dot_kx;  ///< K_F.K_X  = K_X^2 - 4 (g(F)-1)(g(C)-1)
  Rational kx2_back;   ///< 2 K_F.K_X - K_F^2, equal to the input K_X^2
};

FibrationIdentities fibration_identities(const Rational& kx2, long g_fiber, long g_base);

/// Numerics with an empty basket; chi(O_S) is not determined by the
/// construction and must be supplied. kx2 is taken from "K_S^2" when present.
ModelNumerics to_model_numerics(const ConstructionReport& report, long chi);

}  // namespace folcan
