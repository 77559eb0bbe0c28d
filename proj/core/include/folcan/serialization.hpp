#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "folcan/basket.hpp"
#include "folcan/constructions.hpp"
#include "folcan/rational.hpp"
#include "folcan/riemann_roch.hpp"
#include "folcan/surface_model.hpp"

namespace folcan {

using Json = nlohmann::json;

/// Resolution block of a model document, kept unvalidated so that a document
/// with a bad exceptional Gram matrix still parses and can be reported.
struct ResolutionBlock {
  std::vector<std::size_t> exceptional_indices;
  std::map<std::string, RationalVector> strict_transforms;

  friend bool operator==(const ResolutionBlock&, const ResolutionBlock&) = default;
};

/// The JSON model file consumed by `folcan intersect`.
struct ModelDocument {
  SurfaceModel model;
  std::optional<ResolutionBlock> resolution;

  /// Builds (and validates) the resolution; throws NotNegativeDefinite.
  ResolutionData resolution_data() const;

  friend bool operator==(const ModelDocument&, const ModelDocument&) = default;
};

// Rationals are always strings "p/q" or "p".
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const RationalVector& v);
RationalVector vector_from_json(const Json& j);

Json to_json(const LocalProfile& p);
LocalProfile profile_from_json(const Json& j);

Json to_json(const Basket& b);
Basket basket_from_json(const Json& j);

Json to_json(const ModelNumerics& num);
ModelNumerics numerics_from_json(const Json& j);

Json to_json(const ModelDocument& doc);
ModelDocument model_document_from_json(const Json& j);

Json to_json(const HilbertFunction& h);
HilbertFunction hilbert_function_from_json(const Json& j);

/// Flat key/value report.
Json to_json(const ConstructionReport& report);

/// Parses text as JSON; malformed input raises ParseError.
Json parse_json(const std::string& text);

/// Deterministic pretty form with a trailing newline.
std::string dump(const Json& j);

/// Reads a whole file; raises IoError.
std::string read_file(const std::string& path);

}  // namespace folcan
