#include "folcan/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "folcan/bounds.hpp"
#include "folcan/constructions.hpp"
#include "folcan/error.hpp"
#include "folcan/riemann_roch.hpp"
#include "folcan/serialization.hpp"
#include "folcan/surface_model.hpp"

namespace folcan::cli {

namespace {

struct IntersectArgs {
  std::string model_path;
  std::string divisor;
  std::vector<std::string> curves;
};

struct HilbertArgs {
  std::string numerics_path;
  std::uint64_t mmax = 10;
  bool strict = false;
};

struct EnumerateArgs {
  std::string k1;
  std::string k2;
  std::uint64_t s = 1;
  std::vector<long> chi;
  std::size_t cap = 0;
  std::size_t max_cusps = 0;
  bool no_cusps = false;
  bool divisible = false;
};

struct BoundsArgs {
  std::string k1;
  std::string k2;
  std::uint64_t s = 1;
  std::string kx2;
  std::uint64_t m = 0;
  std::string q0;
  std::string q1;
  std::string h0;
};

struct ExampleArgs {
  RuledCoverInput ruled;
  AbelianCoverInput abelian;
  std::string sweep;
  std::optional<long> chi;
};

Json error_object(std::string_view code, const std::string& message, const std::string& context) {
  return {{"error", {{"code", code}, {"message", message}, {"context", context}}}};
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::IoError:
      return kExitParse;
    default:
      return kExitValidation;
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Rational rational_flag(const std::string& text, const char* name) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, std::string("--") + name + ": " + e.what(), text);
  }
}

// ---------------------------------------------------------------- intersect

std::string run_intersect(const IntersectArgs& a, OutputFormat format) {
  const ModelDocument doc = model_document_from_json(parse_json(read_file(a.model_path)));
  const SurfaceModel& model = doc.model;
  const Inertia sig = signature(model.pairing());

  Json out = {{"basis_labels", model.basis_labels()},
              {"signature", {{"positives", sig.positives}, {"negatives", sig.negatives}, {"zeros", sig.zeros}}}};

  std::vector<std::tuple<std::string, std::string, Rational>> rows;

  Json classes = Json::object();
  for (const auto& [na, va] : model.distinguished_classes()) {
    for (const auto& [nb, vb] : model.distinguished_classes()) {
      const Rational v = model.intersect(va, vb);
      classes[na][nb] = to_json(v);
      if (!doc.resolution) rows.emplace_back(na, nb, v);
    }
  }
  out["class_pairing"] = classes;

  if (doc.resolution) {
    const ResolutionData res = doc.resolution_data();
    Json pullbacks = Json::object();
    Json coefficients = Json::object();
    Json weil = Json::object();
    for (const auto& [name, strict] : res.strict_transforms()) {
      pullbacks[name] = to_json(mumford_pullback(res, strict));
      coefficients[name] = to_json(mumford_coefficients(res, strict));
    }
    for (const auto& [na, sa] : res.strict_transforms()) {
      for (const auto& [nb, sb] : res.strict_transforms()) {
        const Rational v = weil_intersect(res, sa, sb);
        weil[na][nb] = to_json(v);
        rows.emplace_back(na, nb, v);
      }
    }
    out["resolution"] = {{"exceptional_indices", res.exceptional_indices()},
                         {"exceptional_negative_definite", true},
                         {"pullbacks", pullbacks},
                         {"coefficients", coefficients},
                         {"weil_pairing", weil}};
  }

  if (!a.divisor.empty()) {
    const RationalVector d = model.class_of(a.divisor);
    std::vector<RationalVector> curves;
    for (const auto& c : a.curves) curves.push_back(model.class_of(c));
    const AmplitudeVerdict amp = numerical_amplitude_check(model, d, curves);
    Json dots = Json::object();
    for (std::size_t i = 0; i < curves.size(); ++i) dots[a.curves[i]] = to_json(model.intersect(d, curves[i]));
    out["checks"] = {{"divisor", a.divisor},
                     {"self_intersection", to_json(model.intersect(d, d))},
                     {"curves", a.curves},
                     {"dot_curves", dots},
                     {"big", amp.big},
                     {"strictly_positive_on_curves", amp.strictly_positive_on_curves},
                     {"nef_on_curves", nef_check(model, d, curves)}};
  }

  if (format == OutputFormat::Json) return dump(out);
  std::string csv = "a,b,value\n";
  for (const auto& [na, nb, v] : rows) csv += csv_escape(na) + "," + csv_escape(nb) + "," + v.str() + "\n";
  return csv;
}

// ------------------------------------------------------------------ hilbert

std::string run_hilbert(const HilbertArgs& a, OutputFormat format) {
  const ModelNumerics num = numerics_from_json(parse_json(read_file(a.numerics_path)));
  const bool integral = integrality_check(num);
  if (a.strict && !integral) to_hilbert_function(num);  // throws NotIntegral

  if (format == OutputFormat::Csv) {
    std::string csv = "m,P\n";
    for (std::uint64_t m = 0; m <= a.mmax; ++m) {
      csv += std::to_string(m) + "," + hilbert_value(num, m).str() + "\n";
    }
    return csv;
  }

  Json values = Json::array();
  bool extrapolated = false;
  for (std::uint64_t m = 0; m <= a.mmax; ++m) {
    values.push_back({{"m", m}, {"P", to_json(hilbert_value(num, m))}});
    extrapolated = extrapolated || basket_uses_extrapolation(num.basket, m);
  }
  Json out = {{"numerics", to_json(num)},
              {"q_index", q_index(num.basket)},
              {"integrality_window", integrality_window(num)},
              {"integral", integral},
              {"extrapolated", extrapolated},
              {"values", values}};
  if (integral) {
    const HilbertFunction h = to_hilbert_function(num);
    out["hilbert_function"] = to_json(h);
    out["second_difference_ok"] = second_difference_check(h);
  }
  return dump(out);
}

// ---------------------------------------------------------------- enumerate

std::string run_enumerate(const EnumerateArgs& a, OutputFormat format, unsigned workers) {
  EnumerationQuery q;
  q.k1 = rational_flag(a.k1, "k1");
  q.k2 = rational_flag(a.k2, "k2");
  q.s = a.s;
  q.chi_set = std::set<long>(a.chi.begin(), a.chi.end());
  q.basket_cap = a.cap;
  q.max_cusps = a.max_cusps;
  q.include_cusps = !a.no_cusps;
  q.index_filter = a.divisible ? IndexFilter::Divides : IndexFilter::Equal;

  const std::vector<EnumeratedFunction> found = enumerate_hilbert(q, workers);

  if (format == OutputFormat::Csv) {
    std::string csv = "index,k1,k2,chi,period,correction,extrapolated,witnesses\n";
    for (std::size_t i = 0; i < found.size(); ++i) {
      const HilbertFunction& h = found[i].function;
      std::string corr;
      for (std::size_t r = 0; r < h.correction().size(); ++r) corr += (r ? ";" : "") + h.correction()[r].str();
      std::string wit;
      for (std::size_t w = 0; w < found[i].witnesses.size(); ++w) wit += (w ? " " : "") + found[i].witnesses[w].key();
      csv += std::to_string(i) + "," + h.k1().str() + "," + h.k2().str() + "," + std::to_string(h.chi()) + "," +
             std::to_string(h.period()) + "," + corr + "," + (h.extrapolated() ? "true" : "false") + "," +
             csv_escape(wit) + "\n";
    }
    return csv;
  }

  Json list = Json::array();
  for (const auto& f : found) {
    const HilbertFunction& h = f.function;
    Json witnesses = Json::array();
    for (const auto& b : f.witnesses) {
      witnesses.push_back({{"key", b.key()}, {"q_index", q_index(b)}, {"basket", to_json(b)}});
    }
    ModelNumerics probe{h.k1(), h.k2(), h.chi(), f.witnesses.front(), std::nullopt};
    const std::uint64_t window = integrality_window(probe);
    Json values = Json::array();
    for (std::uint64_t m = 0; m <= 2 * window; ++m) values.push_back(to_json(h.value(m)));
    list.push_back({{"canonical", to_json(h)}, {"witnesses", witnesses}, {"window", window}, {"values", values}});
  }
  Json query = {{"k1", to_json(q.k1)},
                {"k2", to_json(q.k2)},
                {"s", q.s},
                {"chi", q.chi_set},
                {"cap", q.basket_cap},
                {"max_cusps", q.include_cusps ? q.max_cusps : 0},
                {"index_filter", a.divisible ? "divides" : "equal"}};
  return dump({{"query", query}, {"count", found.size()}, {"hilbert_functions", list}});
}

// ------------------------------------------------------------------- bounds

std::string run_bounds(const BoundsArgs& a, OutputFormat format) {
  const Rational k1 = rational_flag(a.k1, "k1");
  const Rational k2 = rational_flag(a.k2, "k2");
  const BoundReport r = kx2_bounds(k1, k2, a.s);

  std::vector<std::pair<std::string, Json>> kv = {
      {"k1", to_json(k1)},
      {"k2", to_json(k2)},
      {"s", a.s},
      {"kx2_upper", to_json(r.kx2_upper)},
      {"kx2_lower_exclusive", to_json(r.kx2_lower_exclusive)},
      {"kx2_lower_exclusive_linear", to_json(r.kx2_lower_exclusive_linear)},
      {"interval_empty", r.interval_empty},
  };
  if (!a.kx2.empty()) {
    const Rational kx2 = rational_flag(a.kx2, "kx2");
    const AmpleNumerics d = ample_divisor_numerics(k1, k2, kx2, a.s);
    kv.emplace_back("kx2", to_json(kx2));
    kv.emplace_back("kx2_in_range", r.kx2_lower_exclusive < kx2 && kx2 <= r.kx2_upper);
    kv.emplace_back("D_squared", to_json(d.d_squared));
    kv.emplace_back("D_dot_KX", to_json(d.d_dot_kx));
    if (a.m > 0) {
      if (a.q0.empty() || a.q1.empty() || a.h0.empty()) {
        throw Error(ErrorCode::InvalidInput, "envelope check needs --q0, --q1 and --h0");
      }
      kv.emplace_back("envelope_m", a.m);
      kv.emplace_back("envelope_holds", km_envelope(d.d_squared, a.m, rational_flag(a.q0, "q0"),
                                                    rational_flag(a.q1, "q1"), rational_flag(a.h0, "h0")));
    }
  }

  if (format == OutputFormat::Json) {
    Json out = Json::object();
    for (auto& [k, v] : kv) out[k] = v;
    return dump(out);
  }
  std::string csv = "key,value\n";
  for (auto& [k, v] : kv) csv += k + "," + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  return csv;
}

// ------------------------------------------------------------------ example

struct SweepRange {
  std::string key;
  long from = 0;
  long to = 0;
};

SweepRange parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  const auto dots = text.find("..");
  if (eq == std::string::npos || dots == std::string::npos || dots < eq) {
    throw Error(ErrorCode::ParseError, "sweep must look like key=a..b", text);
  }
  SweepRange r;
  r.key = text.substr(0, eq);
  try {
    std::size_t used = 0;
    const std::string lo = text.substr(eq + 1, dots - eq - 1);
    const std::string hi = text.substr(dots + 2);
    r.from = std::stol(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(lo);
    r.to = std::stol(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(hi);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "sweep bounds must be integers", text);
  }
  if (r.from > r.to) throw Error(ErrorCode::InvalidInput, "empty sweep range", text);
  return r;
}

Json flat_example(const std::string& family, const ExampleArgs& a) {
  ConstructionReport report;
  Json out;
  if (family == "ruled") {
    report = ruled_double_cover(a.ruled);
    out = {{"family", "ruled"}, {"k", a.ruled.k}, {"g", a.ruled.g}, {"q", a.ruled.q}};
  } else {
    report = abelian_double_cover(a.abelian);
    out = {{"family", "abelian"}, {"d", a.abelian.d}, {"n", a.abelian.n}};
  }
  out.update(to_json(report));
  if (a.chi) {
    const ModelNumerics num = to_model_numerics(report, *a.chi);
    out["chi"] = *a.chi;
    out["integral"] = integrality_check(num);
  }
  return out;
}

std::string run_example(const std::string& family, ExampleArgs a, OutputFormat format) {
  if (a.sweep.empty()) {
    const Json report = flat_example(family, a);
    if (format == OutputFormat::Json) return dump(report);
    std::string csv = "key,value\n";
    for (const auto& [k, v] : report.items()) {
      csv += csv_escape(k) + "," + csv_escape(v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
    return csv;
  }

  const SweepRange range = parse_sweep(a.sweep);
  long* target = nullptr;
  if (family == "ruled") {
    if (range.key == "k") target = &a.ruled.k;
    if (range.key == "g") target = &a.ruled.g;
    if (range.key == "q") target = &a.ruled.q;
  } else {
    if (range.key == "d") target = &a.abelian.d;
    if (range.key == "n") target = &a.abelian.n;
  }
  if (!target) throw Error(ErrorCode::InvalidInput, "unknown sweep parameter for " + family, range.key);

  std::vector<Json> rows;
  for (long v = range.from; v <= range.to; ++v) {
    *target = v;
    if (family == "ruled" && range.key == "k" && v % 2 != 0) continue;
    rows.push_back(flat_example(family, a));
  }

  if (format == OutputFormat::Json) return dump(rows);
  const std::vector<std::string> cols =
      family == "ruled" ? std::vector<std::string>{"k", "g", "q", "kf2", "kf_dot_kx", "fiber_genus"}
                        : std::vector<std::string>{"d", "n", "kf2", "kf_dot_kx", "fiber_genus", "aux.A.F"};
  std::string csv;
  for (std::size_t i = 0; i < cols.size(); ++i) csv += (i ? "," : "") + cols[i];
  csv += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const Json& v = row.at(cols[i]);
      csv += (i ? "," : "") + (v.is_string() ? v.get<std::string>() : v.dump());
    }
    csv += "\n";
  }
  return csv;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact numerical invariants of foliated surfaces", "folcan"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  RunConfig config;
  std::string format = "json";
  std::string out_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--workers", config.worker_count, "Worker threads for enumerate")->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "Write the document to a file instead of stdout");

  IntersectArgs ia;
  auto* intersect = app.add_subcommand("intersect", "Intersection numbers and Mumford pullbacks of a model file");
  intersect->add_option("--model", ia.model_path, "Model JSON document")->required();
  intersect->add_option("--divisor", ia.divisor, "Class label for amplitude and nef checks");
  intersect->add_option("--curves", ia.curves, "Curve labels for the checks")->delimiter(',');

  HilbertArgs ha;
  auto* hilbert = app.add_subcommand("hilbert", "Tabulate P(m) from a numerics file");
  hilbert->add_option("--numerics", ha.numerics_path, "Numerics JSON document")->required();
  hilbert->add_option("--mmax", ha.mmax, "Largest m to tabulate");
  hilbert->add_flag("--strict", ha.strict, "Fail with NotIntegral when P is not integer valued");

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate Hilbert functions with fixed K_F^2, K_F.K_X, index");
  enumerate->add_option("--k1", ea.k1, "K_F^2 as p/q")->required();
  enumerate->add_option("--k2", ea.k2, "K_F.K_X as p/q")->required();
  enumerate->add_option("--s", ea.s, "Q-index")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--chi", ea.chi, "Comma-separated chi(O_X) values")->delimiter(',');
  enumerate->add_option("--cap", ea.cap, "Maximum number of Q-Gorenstein singular points");
  enumerate->add_option("--max-cusps", ea.max_cusps, "Maximum number of cusps");
  enumerate->add_flag("--no-cusps", ea.no_cusps, "Exclude non-Q-Gorenstein cusps");
  enumerate->add_flag("--divisible", ea.divisible, "Accept baskets whose index divides s");

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "K_X^2 bounds and ample-divisor numerics");
  bounds->add_option("--k1", ba.k1, "K_F^2 as p/q")->required();
  bounds->add_option("--k2", ba.k2, "K_F.K_X as p/q")->required();
  bounds->add_option("--s", ba.s, "Index")->required()->check(CLI::PositiveNumber);
  bounds->add_option("--kx2", ba.kx2, "K_X^2 as p/q");
  bounds->add_option("--m", ba.m, "Envelope check: multiple m");
  bounds->add_option("--q0", ba.q0, "Envelope constant term");
  bounds->add_option("--q1", ba.q1, "Envelope linear coefficient");
  bounds->add_option("--h0", ba.h0, "Envelope: observed h^0(mD)");

  ExampleArgs xa;
  auto* example = app.add_subcommand("example", "Numerics of the double-cover example families");
  example->require_subcommand(1);
  auto* ruled = example->add_subcommand("ruled", "Double cover of a ruled surface");
  ruled->add_option("--k", xa.ruled.k, "deg D (even)");
  ruled->add_option("--g", xa.ruled.g, "fiber genus");
  ruled->add_option("--q", xa.ruled.q, "base curve genus");
  ruled->add_option("--sweep", xa.sweep, "Parameter range, e.g. q=0..10");
  ruled->add_option("--chi", xa.chi, "chi(O_S) for the integrality check");
  auto* abelian = example->add_subcommand("abelian", "Double cover of E x E");
  abelian->add_option("--d", xa.abelian.d, "deg D on E");
  abelian->add_option("--n", xa.abelian.n, "multiplication parameter");
  abelian->add_option("--sweep", xa.sweep, "Parameter range, e.g. n=0..5");
  abelian->add_option("--chi", xa.chi, "chi(O_S) for the integrality check");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << error_object("ParseError", e.what(), "").dump() << "\n";
    return kExitParse;
  }

  config.output_format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
  if (!out_path.empty()) config.out_path = out_path;

  try {
    std::string document;
    if (intersect->parsed()) {
      config.command = Command::Intersect;
      config.input_path = ia.model_path;
      document = run_intersect(ia, config.output_format);
    } else if (hilbert->parsed()) {
      config.command = Command::Hilbert;
      config.input_path = ha.numerics_path;
      document = run_hilbert(ha, config.output_format);
    } else if (enumerate->parsed()) {
      config.command = Command::Enumerate;
      document = run_enumerate(ea, config.output_format, config.worker_count);
    } else if (bounds->parsed()) {
      config.command = Command::Bounds;
      document = run_bounds(ba, config.output_format);
    } else {
      config.command = Command::Example;
      document = run_example(ruled->parsed() ? "ruled" : "abelian", xa, config.output_format);
    }

    if (config.out_path) {
      std::ofstream file(*config.out_path, std::ios::binary);
      if (!file) throw Error(ErrorCode::IoError, "cannot open output file", *config.out_path);
      file << document;
    } else {
      out << document;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << error_object(to_string(e.code()), e.what(), e.context()).dump() << "\n";
    return exit_status(e.code());
  } catch (const nlohmann::json::exception& e) {
    err << error_object("ParseError", e.what(), "").dump() << "\n";
    return kExitParse;
  }
}

}  // namespace folcan::cli
