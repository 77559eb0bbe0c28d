#include "folcan/surface_model.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "folcan/error.hpp"

namespace folcan {

namespace {

void require_length(const RationalVector& v, std::size_t n, const std::string& what) {
  if (v.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, what + " has wrong length",
                std::to_string(v.size()) + " vs rank " + std::to_string(n));
  }
}

}  // namespace

SurfaceModel::SurfaceModel(std::vector<std::string> basis_labels, SymmetricPairing pairing,
                           std::optional<RationalVector> canonical_class,
                           std::map<std::string, RationalVector> distinguished)
    : labels_(std::move(basis_labels)),
      pairing_(std::move(pairing)),
      canonical_(std::move(canonical_class)),
      distinguished_(std::move(distinguished)) {
  if (pairing_.dimension() != labels_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "pairing dimension differs from basis size",
                std::to_string(pairing_.dimension()) + " vs " + std::to_string(labels_.size()));
  }
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw Error(ErrorCode::InvalidInput, "duplicate basis label", l);
  }
  if (canonical_) require_length(*canonical_, rank(), "canonical_class");
  for (const auto& [name, v] : distinguished_) require_length(v, rank(), "class '" + name + "'");
}

RationalVector SurfaceModel::class_of(const std::string& label) const {
  if (auto it = distinguished_.find(label); it != distinguished_.end()) return it->second;
  if (label == "K_X" && canonical_) return *canonical_;
  auto pos = std::find(labels_.begin(), labels_.end(), label);
  if (pos == labels_.end()) throw Error(ErrorCode::InvalidInput, "unknown class label", label);
  RationalVector unit(rank());
  unit[static_cast<std::size_t>(pos - labels_.begin())] = 1;
  return unit;
}

void validate_resolution(const SymmetricPairing& ambient_pairing,
                         const std::vector<std::size_t>& exceptional_indices) {
  const SymmetricPairing gram = ambient_pairing.restrict_to(exceptional_indices);
  const Inertia s = signature(gram);
  if (s.negatives != static_cast<int>(gram.dimension())) {
    throw Error(ErrorCode::NotNegativeDefinite, "exceptional Gram matrix is not negative definite",
                "signature (" + std::to_string(s.positives) + "," + std::to_string(s.negatives) +
                    "," + std::to_string(s.zeros) + ")");
  }
}

void validate_resolution(const ResolutionData& res) {
  validate_resolution(res.ambient().pairing(), res.exceptional_indices());
}

ResolutionData::ResolutionData(SurfaceModel ambient, std::vector<std::size_t> exceptional_indices,
                               std::map<std::string, RationalVector> strict_transforms)
    : ambient_(std::move(ambient)),
      exceptional_(std::move(exceptional_indices)),
      strict_(std::move(strict_transforms)) {
  std::set<std::size_t> seen;
  for (std::size_t i : exceptional_) {
    if (i >= ambient_.rank()) {
      throw Error(ErrorCode::DimensionMismatch, "exceptional index out of range", std::to_string(i));
    }
    if (!seen.insert(i).second) {
      throw Error(ErrorCode::InvalidInput, "duplicate exceptional index", std::to_string(i));
    }
  }
  for (const auto& [name, v] : strict_) {
    require_length(v, ambient_.rank(), "strict transform '" + name + "'");
  }
  validate_resolution(ambient_.pairing(), exceptional_);
  exceptional_gram_ = ambient_.pairing().restrict_to(exceptional_);
}

const RationalVector& ResolutionData::strict_transform(const std::string& name) const {
  auto it = strict_.find(name);
  if (it == strict_.end()) throw Error(ErrorCode::InvalidInput, "unknown strict transform", name);
  return it->second;
}

RationalVector mumford_coefficients(const ResolutionData& res, const RationalVector& strict) {
  const SurfaceModel& y = res.ambient();
  require_length(strict, y.rank(), "strict transform");
  const auto& idx = res.exceptional_indices();

  // (strict + sum x_i E_i) . E_j = 0  <=>  Gram x = -(strict . E_j)
  RationalVector rhs(idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    Rational dot;
    for (std::size_t i = 0; i < strict.size(); ++i) {
      if (!strict[i].is_zero()) dot += strict[i] * y.pairing()(i, idx[j]);
    }
    rhs[j] = -dot;
  }
  try {
    return solve_linear(res.exceptional_gram(), rhs);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularMatrix) throw;
    throw Error(ErrorCode::InternalInconsistency,
                "singular exceptional Gram matrix after validation", e.context());
  }
}

RationalVector mumford_pullback(const ResolutionData& res, const RationalVector& strict) {
  const RationalVector x = mumford_coefficients(res, strict);
  RationalVector out = strict;
  const auto& idx = res.exceptional_indices();
  for (std::size_t i = 0; i < idx.size(); ++i) out[idx[i]] += x[i];
  return out;
}

Rational weil_intersect(const ResolutionData& res, const RationalVector& strict1,
                        const RationalVector& strict2) {
  return res.ambient().intersect(mumford_pullback(res, strict1), mumford_pullback(res, strict2));
}

AmplitudeVerdict numerical_amplitude_check(const SurfaceModel& model, const RationalVector& d,
                                           const std::vector<RationalVector>& curves) {
  require_length(d, model.rank(), "divisor");
  AmplitudeVerdict v;
  v.big = model.intersect(d, d).sign() > 0;
  v.strictly_positive_on_curves = std::all_of(curves.begin(), curves.end(), [&](const auto& c) {
    require_length(c, model.rank(), "curve class");
    return model.intersect(d, c).sign() > 0;
  });
  return v;
}

bool nef_check(const SurfaceModel& model, const RationalVector& d,
               const std::vector<RationalVector>& curves) {
  require_length(d, model.rank(), "divisor");
  return std::all_of(curves.begin(), curves.end(), [&](const auto& c) {
    require_length(c, model.rank(), "curve class");
    return model.intersect(d, c).sign() >= 0;
  });
}

}  // namespace folcan
