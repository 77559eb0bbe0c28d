#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "folcan/linalg.hpp"
#include "folcan/rational.hpp"

namespace folcan {

/// Numerical lattice of curve classes on a smooth surface.
///
/// Divisors are coordinate vectors over `basis_labels`. Downstairs (singular)
/// surfaces are never represented directly: a Weil divisor on X enters only
/// through its strict transform on a smooth model Y, see ResolutionData.
class SurfaceModel {
 public:
  SurfaceModel(std::vector<std::string> basis_labels, SymmetricPairing pairing,
               std::optional<RationalVector> canonical_class = std::nullopt,
               std::map<std::string, RationalVector> distinguished = {});

  const std::vector<std::string>& basis_labels() const noexcept { return labels_; }
  const SymmetricPairing& pairing() const noexcept { return pairing_; }
  const std::optional<RationalVector>& canonical_class() const noexcept { return canonical_; }
  const std::map<std::string, RationalVector>& distinguished_classes() const noexcept {
    return distinguished_;
  }
  std::size_t rank() const noexcept { return labels_.size(); }

  /// Looks up a distinguished class, or a basis label as a unit vector.
  RationalVector class_of(const std::string& label) const;

  Rational intersect(const RationalVector& a, const RationalVector& b) const {
    return pairing_.pair(a, b);
  }

  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;

 private:
  std::vector<std::string> labels_;
  SymmetricPairing pairing_;
  std::optional<RationalVector> canonical_;
  std::map<std::string, RationalVector> distinguished_;
};

/// A resolution f: Y -> X recorded as the lattice of Y plus the positions of
/// the exceptional curves. The exceptional Gram matrix must be negative
/// definite; the constructor enforces this.
class ResolutionData {
 public:
  ResolutionData(SurfaceModel ambient, std::vector<std::size_t> exceptional_indices,
                 std::map<std::string, RationalVector> strict_transforms = {});

  const SurfaceModel& ambient() const noexcept { return ambient_; }
  const std::vector<std::size_t>& exceptional_indices() const noexcept { return exceptional_; }
  const std::map<std::string, RationalVector>& strict_transforms() const noexcept {
    return strict_;
  }

  /// Gram matrix (E_i . E_j).
  const SymmetricPairing& exceptional_gram() const noexcept { return exceptional_gram_; }

  /// Named downstairs divisor, given by its strict transform on Y.
  const RationalVector& strict_transform(const std::string& name) const;

  friend bool operator==(const ResolutionData& a, const ResolutionData& b) {
    return a.ambient_ == b.ambient_ && a.exceptional_ == b.exceptional_ && a.strict_ == b.strict_;
  }

 private:
  SurfaceModel ambient_;
  std::vector<std::size_t> exceptional_;
  std::map<std::string, RationalVector> strict_;
  SymmetricPairing exceptional_gram_;
};

/// Throws NotNegativeDefinite (with the offending inertia as context) unless
/// the exceptional Gram matrix is negative definite.
void validate_resolution(const SymmetricPairing& ambient_pairing,
                         const std::vector<std::size_t>& exceptional_indices);
void validate_resolution(const ResolutionData& res);

/// Mumford pullback f^*D = strict + sum x_i E_i with (f^*D).E_j = 0 for all j.
RationalVector mumford_pullback(const ResolutionData& res, const RationalVector& strict);

/// Coefficients x_i of the exceptional correction, in the order of
/// exceptional_indices().
RationalVector mumford_coefficients(const ResolutionData& res, const RationalVector& strict);

/// Mumford intersection number D1 . D2 = f^*D1 . f^*D2.
Rational weil_intersect(const ResolutionData& res, const RationalVector& strict1,
                        const RationalVector& strict2);

struct AmplitudeVerdict {
  bool big = false;
  bool strictly_positive_on_curves = false;
};

/// Numerical amplitude relative to the supplied curve list only: D^2 > 0 and
/// D.C > 0 for each listed C.
AmplitudeVerdict numerical_amplitude_check(const SurfaceModel& model, const RationalVector& d,
                                           const std::vector<RationalVector>& curves);

/// D.C >= 0 for each listed C.
bool nef_check(const SurfaceModel& model, const RationalVector& d,
               const std::vector<RationalVector>& curves);

}  // namespace folcan
