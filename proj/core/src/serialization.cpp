#include "folcan/serialization.hpp"

#include <fstream>
#include <sstream>

#include "folcan/error.hpp"

namespace folcan {

namespace {

[[noreturn]] void bad(const std::string& what, const Json& j) {
  throw Error(ErrorCode::ParseError, what, j.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected an object", j);
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'", j);
  return *it;
}

long integer_from_json(const Json& j) {
  if (!j.is_number_integer()) bad("expected an integer", j);
  return j.get<long>();
}

std::uint64_t unsigned_from_json(const Json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad("expected a nonnegative integer", j);
  return j.get<std::uint64_t>();
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) bad("rational must be a string \"p/q\"", j);
  return Rational::parse(j.get<std::string>());
}

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

RationalVector vector_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of rationals", j);
  RationalVector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json to_json(const LocalProfile& p) {
  Json out = {{"kind", std::string(to_string(p.kind()))}};
  if (auto n = p.local_index()) out["n"] = *n;
  if (p.override_table()) out["override"] = to_json(*p.override_table());
  return out;
}

LocalProfile profile_from_json(const Json& j) {
  const Json& kind_j = field(j, "kind");
  if (!kind_j.is_string()) bad("kind must be a string", j);
  const SingularityKind kind = parse_singularity_kind(kind_j.get<std::string>());

  std::optional<std::uint32_t> n;
  if (auto it = j.find("n"); it != j.end()) n = static_cast<std::uint32_t>(unsigned_from_json(*it));
  std::optional<std::vector<Rational>> override;
  if (auto it = j.find("override"); it != j.end()) override = vector_from_json(*it);
  if (override && kind != SingularityKind::TerminalCyclic) {
    throw Error(ErrorCode::InvalidOverride, "override tables apply to terminal points only", j.dump());
  }

  switch (kind) {
    case SingularityKind::TerminalCyclic:
      if (!n) throw Error(ErrorCode::InvalidProfile, "terminal point needs its index n", j.dump());
      return LocalProfile::terminal(*n, std::move(override));
    case SingularityKind::DihedralZero:
      return LocalProfile::dihedral_zero(n.value_or(2));
    case SingularityKind::DihedralHalf:
      if (n && *n != 2) throw Error(ErrorCode::InvalidProfile, "dihedral-half index is 2", j.dump());
      return LocalProfile::dihedral_half();
    case SingularityKind::NonQGorCusp:
      if (n) throw Error(ErrorCode::InvalidProfile, "cusps carry no index", j.dump());
      return LocalProfile::cusp();
  }
  bad("unreachable singularity kind", j);
}

Json to_json(const Basket& b) {
  Json out = Json::array();
  for (const auto& p : b.profiles()) out.push_back(to_json(p));
  return out;
}

Basket basket_from_json(const Json& j) {
  if (!j.is_array()) bad("basket must be an array", j);
  std::vector<LocalProfile> profiles;
  for (const auto& p : j) profiles.push_back(profile_from_json(p));
  return Basket(std::move(profiles));
}

Json to_json(const ModelNumerics& num) {
  Json out = {{"k1", to_json(num.k1)},
              {"k2", to_json(num.k2)},
              {"chi", num.chi},
              {"basket", to_json(num.basket)}};
  if (num.kx2) out["kx2"] = to_json(*num.kx2);
  return out;
}

ModelNumerics numerics_from_json(const Json& j) {
  ModelNumerics num;
  num.k1 = rational_from_json(field(j, "k1"));
  num.k2 = rational_from_json(field(j, "k2"));
  num.chi = integer_from_json(field(j, "chi"));
  if (auto it = j.find("basket"); it != j.end()) num.basket = basket_from_json(*it);
  if (auto it = j.find("kx2"); it != j.end()) num.kx2 = rational_from_json(*it);
  return num;
}

ResolutionData ModelDocument::resolution_data() const {
  if (!resolution) throw Error(ErrorCode::InvalidInput, "model document has no resolution block");
  return ResolutionData(model, resolution->exceptional_indices, resolution->strict_transforms);
}

Json to_json(const ModelDocument& doc) {
  const SurfaceModel& m = doc.model;
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rank(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.rank(); ++c) row.push_back(to_json(m.pairing()(i, c)));
    rows.push_back(std::move(row));
  }
  Json classes = Json::object();
  for (const auto& [name, v] : m.distinguished_classes()) classes[name] = to_json(v);

  Json out = {{"basis_labels", m.basis_labels()}, {"pairing", rows}, {"distinguished_classes", classes}};
  if (m.canonical_class()) out["canonical_class"] = to_json(*m.canonical_class());
  if (doc.resolution) {
    Json strict = Json::object();
    for (const auto& [name, v] : doc.resolution->strict_transforms) strict[name] = to_json(v);
    out["resolution"] = {{"exceptional_indices", doc.resolution->exceptional_indices},
                         {"strict_transforms", strict}};
  }
  return out;
}

ModelDocument model_document_from_json(const Json& j) {
  const Json& labels_j = field(j, "basis_labels");
  if (!labels_j.is_array()) bad("basis_labels must be an array", labels_j);
  std::vector<std::string> labels;
  for (const auto& l : labels_j) {
    if (!l.is_string()) bad("basis label must be a string", l);
    labels.push_back(l.get<std::string>());
  }

  const Json& rows_j = field(j, "pairing");
  if (!rows_j.is_array()) bad("pairing must be an array of rows", rows_j);
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : rows_j) rows.push_back(vector_from_json(r));
  if (rows.size() != labels.size()) {
    throw Error(ErrorCode::DimensionMismatch, "pairing row count differs from basis size",
                std::to_string(rows.size()) + " vs " + std::to_string(labels.size()));
  }

  std::optional<RationalVector> canonical;
  if (auto it = j.find("canonical_class"); it != j.end()) canonical = vector_from_json(*it);

  std::map<std::string, RationalVector> classes;
  if (auto it = j.find("distinguished_classes"); it != j.end()) {
    if (!it->is_object()) bad("distinguished_classes must be an object", *it);
    for (const auto& [name, v] : it->items()) classes[name] = vector_from_json(v);
  }

  ModelDocument doc{SurfaceModel(std::move(labels), SymmetricPairing::from_rows(rows),
                                 std::move(canonical), std::move(classes)),
                    std::nullopt};

  if (auto it = j.find("resolution"); it != j.end()) {
    ResolutionBlock block;
    const Json& idx = field(*it, "exceptional_indices");
    if (!idx.is_array()) bad("exceptional_indices must be an array", idx);
    for (const auto& i : idx) block.exceptional_indices.push_back(unsigned_from_json(i));
    if (auto st = it->find("strict_transforms"); st != it->end()) {
      if (!st->is_object()) bad("strict_transforms must be an object", *st);
      for (const auto& [name, v] : st->items()) {
        RationalVector vec = vector_from_json(v);
        if (vec.size() != doc.model.rank()) {
          throw Error(ErrorCode::DimensionMismatch, "strict transform has wrong length", name);
        }
        block.strict_transforms[name] = std::move(vec);
      }
    }
    for (std::size_t i : block.exceptional_indices) {
      if (i >= doc.model.rank()) {
        throw Error(ErrorCode::DimensionMismatch, "exceptional index out of range", std::to_string(i));
      }
    }
    doc.resolution = std::move(block);
  }
  return doc;
}

Json to_json(const HilbertFunction& h) {
  return {{"k1", to_json(h.k1())},
          {"k2", to_json(h.k2())},
          {"chi", h.chi()},
          {"period", h.period()},
          {"correction", to_json(h.correction())},
          {"extrapolated", h.extrapolated()}};
}

HilbertFunction hilbert_function_from_json(const Json& j) {
  bool extrapolated = false;
  if (auto it = j.find("extrapolated"); it != j.end()) {
    if (!it->is_boolean()) bad("extrapolated must be a boolean", *it);
    extrapolated = it->get<bool>();
  }
  return HilbertFunction(rational_from_json(field(j, "k1")), rational_from_json(field(j, "k2")),
                         integer_from_json(field(j, "chi")), unsigned_from_json(field(j, "period")),
                         vector_from_json(field(j, "correction")), extrapolated);
}

Json to_json(const ConstructionReport& report) {
  Json out = {{"kf2", to_json(report.kf2)},
              {"kf_dot_kx", to_json(report.kf_dot_kx)},
              {"fiber_genus", report.fiber_genus}};
  for (const auto& [key, value] : report.auxiliary) out["aux." + key] = to_json(value);
  for (std::size_t i = 0; i < report.assumptions.size(); ++i) {
    out["assumption." + std::to_string(i)] = report.assumptions[i];
  }
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "malformed JSON", e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open file", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace folcan
