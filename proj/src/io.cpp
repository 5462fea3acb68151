#include "hypersig/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hypersig/catalog.hpp"
#include "hypersig/errors.hpp"
#include "hypersig/hvs.hpp"
#include "hypersig/inertia.hpp"
#include "hypersig/signatures.hpp"
#include "hypersig/unit_circle.hpp"

namespace hypersig {

namespace {

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // byte offset → line number
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw InputError("JSON syntax error at line " + std::to_string(line) + ": " + e.what());
  }
}

std::string field(const std::string& where, const std::string& key) {
  return where.empty() ? key : where + "." + key;
}

Rational integer_entry(const Json& x, const std::string& where) {
  if (x.is_number_integer()) {
    if (x.is_number_unsigned()) return Rational(Integer(std::to_string(x.get<std::uint64_t>())));
    return Rational(Integer(std::to_string(x.get<std::int64_t>())));
  }
  if (x.is_number_float()) throw InputError("field '" + where + "': expected integer (non-integer or out of range)");
  throw InputError("field '" + where + "': expected integer, got " + std::string(x.type_name()));
}

Json alexander_json(const RatPoly& p) {
  Json out = Json::array();
  for (int k = 0; k <= p.degree(); ++k) {
    const Integer c = p.coeff(k).get_num();
    if (c.fits_slong_p())
      out.push_back(c.get_si());
    else
      out.push_back(c.get_str());
  }
  return out;
}

}  // namespace

SeifertMatrix seifert_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) throw InputError("field '" + (where.empty() ? "<root>" : where) + "': expected object");
  for (const auto& [key, value] : j.items())
    if (key != "n" && key != "matrix" && key != "name")
      throw InputError("field '" + field(where, key) + "': unknown field");
  if (!j.contains("n")) throw InputError("field '" + field(where, "n") + "': missing");
  if (!j.contains("matrix")) throw InputError("field '" + field(where, "matrix") + "': missing");
  const Json& jn = j["n"];
  if (!jn.is_number_integer() || jn.get<std::int64_t>() < 1 || jn.get<std::int64_t>() > 1000000)
    throw InputError("field '" + field(where, "n") + "': expected integer ≥ 1");
  std::optional<std::string> name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InputError("field '" + field(where, "name") + "': expected string");
    name = j["name"].get<std::string>();
  }
  const Json& jm = j["matrix"];
  const std::string mwhere = field(where, "matrix");
  if (!jm.is_array()) throw InputError("field '" + mwhere + "': expected array of arrays");
  const std::size_t rows = jm.size();
  RatMatrix m(rows, rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rw = mwhere + "[" + std::to_string(i) + "]";
    if (!jm[i].is_array()) throw InputError("field '" + rw + "': expected array");
    if (jm[i].size() != rows)
      throw InputError("field '" + rw + "': matrix is not square (row has " + std::to_string(jm[i].size()) +
                       " entries, expected " + std::to_string(rows) + ")");
    for (std::size_t k = 0; k < rows; ++k)
      m(i, k) = integer_entry(jm[i][k], rw + "[" + std::to_string(k) + "]");
  }
  return SeifertMatrix(static_cast<int>(jn.get<std::int64_t>()), std::move(m), name);
}

SeifertMatrix parse_seifert_json(std::string_view text) { return seifert_from_json(parse_text(text)); }

Json to_json(const CertifiedReal& value) { return value.to_string(); }

Json to_json(const Spectrum& sp) {
  Json out = Json::array();
  for (const auto& e : sp.entries()) {
    Json item{{"value", e.value.to_string()}, {"multiplicity", e.multiplicity}};
    if (!e.value.is_exact()) item["enclosure_width"] = e.value.width();
    out.push_back(std::move(item));
  }
  return out;
}

Json to_json(const SemicontinuityReport& rep) {
  Json records = Json::array();
  for (const auto& r : rep.records) {
    Json item{{"alpha", to_string(r.alpha)},
              {"lhs_inside", r.lhs_inside},
              {"rhs_inside", r.rhs_inside},
              {"lhs_outside", r.lhs_outside},
              {"rhs_outside", r.rhs_outside},
              {"slack_inside", r.slack_inside},
              {"slack_outside", r.slack_outside},
              {"admissible", r.admissible}};
    if (r.strict) item["strict"] = Json{{"lhs", r.strict->lhs}, {"rhs", r.strict->rhs}, {"holds", r.strict->holds}};
    records.push_back(std::move(item));
  }
  return Json{{"mode", to_string(rep.mode)}, {"records", std::move(records)}, {"verdict", to_string(rep.verdict)}};
}

Json invariants_json(const SeifertMatrix& s, const NumericOptions& opts) {
  const auto keef = keef_reduce(s);
  const RatPoly delta = alexander(s);
  Json angles = Json::array();
  for (const auto& r : unit_circle_roots(delta, RootOptions{opts.precision_bits})) {
    Json item{{"alpha", r.alpha.to_string()}, {"multiplicity", r.multiplicity}};
    if (r.order > 0) item["order"] = r.order;
    if (!r.alpha.is_exact()) item["enclosure_width"] = r.alpha.width();
    angles.push_back(std::move(item));
  }
  Json out{{"mu", s.mu()},
           {"n", s.n()},
           {"epsilon", s.epsilon()},
           {"n0", keef.n0},
           {"alexander", alexander_json(delta)},
           {"eigenvalue_angles", std::move(angles)},
           {"keef_warning", keef.warning}};
  out["name"] = s.name() ? Json(*s.name()) : Json(nullptr);
  return out;
}

Spectrum spectrum_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError("field '" + where + "': expected array");
  Spectrum sp;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    const Json& e = j[i];
    Json value;
    int mult = 1;
    if (e.is_object()) {
      if (!e.contains("value")) throw InputError("field '" + w + ".value': missing");
      value = e["value"];
      if (e.contains("multiplicity")) {
        if (!e["multiplicity"].is_number_integer() || e["multiplicity"].get<std::int64_t>() < 1)
          throw InputError("field '" + w + ".multiplicity': expected positive integer");
        mult = static_cast<int>(e["multiplicity"].get<std::int64_t>());
      }
    } else {
      value = e;
    }
    Rational v;
    if (value.is_string()) {
      try {
        v = parse_rational(value.get<std::string>());
      } catch (const InputError& err) {
        throw InputError("field '" + w + "': " + err.what());
      }
    } else if (value.is_number_integer()) {
      v = integer_entry(value, w);
    } else {
      throw InputError("field '" + w + "': expected \"p/q\" string");
    }
    if (v <= 0 || v > 2) throw InputError("field '" + w + "': spectral value must lie in (0, 2]");
    sp.add(CertifiedReal::exact(v), mult);
  }
  return sp;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string profile_csv(const SeifertMatrix& s, const std::vector<Rational>& grid, const NumericOptions& opts) {
  for (const auto& g : grid)
    if (g <= 0 || g >= 1) throw InputError("grid value " + to_string(g) + " outside (0, 1); ξ = 1 is excluded");

  struct Row {
    ProfileValue value;
    bool jump = false;
  };
  std::map<Rational, Row> rows;
  const auto prof = signature_profile(s, opts);
  for (const auto& iv : prof.intervals) rows[iv.sample] = {iv.value, false};
  for (std::size_t k = 0; k < prof.jumps.size(); ++k)
    if (prof.at_jumps[k]) rows[prof.jumps[k].alpha.value()] = {*prof.at_jumps[k], true};
  const NullityOracle nullity_at(s);
  for (const auto& g : grid) {
    if (rows.contains(g)) continue;
    const CirclePoint p(g);
    const Inertia in = nullity_at.inertia(p, opts);
    bool is_jump = false;
    for (const auto& j : prof.jumps)
      if (j.alpha.is_exact() && j.alpha.value() == g) is_jump = true;
    rows[g] = {{in.signature(), in.n_zero}, is_jump};
  }

  std::ostringstream os;
  os << "alpha,sigma,nullity,is_jump\n";
  for (const auto& [alpha, row] : rows)
    os << to_string(alpha) << ',' << row.value.sigma << ',' << row.value.nullity << ','
       << (row.jump ? "true" : "false") << '\n';
  return os.str();
}

namespace {

SpectralInput spectral_input(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return catalog_entry(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError("field '" + where + "': " + e.what());
    }
  }
  if (j.is_object() && j.contains("spectrum")) {
    if (j.size() != 1) throw InputError("field '" + where + "': spectrum objects take no other fields");
    return spectrum_from_json(j["spectrum"], where + ".spectrum");
  }
  if (j.is_object()) return seifert_from_json(j, where);
  throw InputError("field '" + where + "': expected catalog name, Seifert object or {\"spectrum\": [...]}");
}

Spectrum spectrum_of(const SpectralInput& in, const NumericOptions& opts) {
  if (const auto* sp = std::get_if<Spectrum>(&in)) return *sp;
  return extract_spectrum(std::get<SeifertMatrix>(in), opts);
}

std::vector<CertifiedReal> forbidden_of(const SpectralInput& in, const NumericOptions& opts) {
  if (const auto* sp = std::get_if<Spectrum>(&in)) return spectrum_angles(*sp);
  std::vector<CertifiedReal> out;
  for (const auto& r : unit_circle_roots(alexander(std::get<SeifertMatrix>(in)), RootOptions{opts.precision_bits}))
    out.push_back(r.alpha);
  return out;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  const Json j = parse_text(text);
  if (!j.is_object()) throw InputError("field '<root>': expected object");
  for (const auto& [key, value] : j.items())
    if (key != "mode" && key != "central" && key != "locals" && key != "betti" && key != "strict")
      throw InputError("field '" + key + "': unknown field");
  Scenario sc;
  if (!j.contains("mode") || !j["mode"].is_string()) throw InputError("field 'mode': expected string");
  const auto mode = j["mode"].get<std::string>();
  if (mode == "local")
    sc.mode = Mode::local;
  else if (mode == "infinity")
    sc.mode = Mode::infinity;
  else if (mode == "local_to_global")
    sc.mode = Mode::local_to_global;
  else
    throw InputError("field 'mode': expected \"local\", \"infinity\" or \"local_to_global\"");
  if (!j.contains("central")) throw InputError("field 'central': missing");
  sc.central = spectral_input(j["central"], "central");
  if (!j.contains("locals") || !j["locals"].is_array()) throw InputError("field 'locals': expected array");
  for (std::size_t i = 0; i < j["locals"].size(); ++i)
    sc.locals.push_back(spectral_input(j["locals"][i], "locals[" + std::to_string(i) + "]"));
  if (j.contains("strict")) {
    if (!j["strict"].is_boolean()) throw InputError("field 'strict': expected boolean");
    sc.strict = j["strict"].get<bool>();
  }
  if (j.contains("betti")) {
    const Json& b = j["betti"];
    if (!b.is_object()) throw InputError("field 'betti': expected object");
    for (const auto& [key, value] : b.items()) {
      if (key != "b1") throw InputError("field 'betti." + key + "': unknown field");
      if (!value.is_number_integer() || value.get<std::int64_t>() < 0)
        throw InputError("field 'betti.b1': expected non-negative integer");
      sc.strict_b1 = value.get<std::int64_t>();
    }
  }
  if (sc.mode == Mode::infinity && sc.locals.size() != 1)
    throw InputError("field 'locals': infinity mode takes exactly one entry (the special fiber)");
  if (sc.mode == Mode::local) {
    const auto* c = std::get_if<SeifertMatrix>(&sc.central);
    if (!c) throw InputError("field 'central': local mode needs a Seifert matrix or catalog name");
    for (std::size_t i = 0; i < sc.locals.size(); ++i)
      if (!std::holds_alternative<SeifertMatrix>(sc.locals[i]))
        throw InputError("field 'locals[" + std::to_string(i) + "]': local mode needs Seifert matrices");
  }
  return sc;
}

SemicontinuityReport run_scenario(const Scenario& sc, const NumericOptions& opts) {
  switch (sc.mode) {
    case Mode::local: {
      const auto& c = std::get<SeifertMatrix>(sc.central);
      std::vector<SeifertMatrix> locals;
      for (const auto& l : sc.locals) locals.push_back(std::get<SeifertMatrix>(l));
      DeformationInstance inst{c.name().value_or("central"), c, std::move(locals), false, true};
      SemicontinuityOptions so;
      so.numeric = opts;
      so.strict = sc.strict;
      so.strict_b1 = sc.strict_b1;
      return check_local(inst, so);
    }
    case Mode::infinity:
      return check_infinity(spectrum_of(sc.central, opts), spectrum_of(sc.locals.front(), opts),
                            forbidden_of(sc.central, opts));
    case Mode::local_to_global: {
      std::vector<Spectrum> locals;
      for (const auto& l : sc.locals) locals.push_back(spectrum_of(l, opts));
      return check_local_to_global(spectrum_of(sc.central, opts), locals, forbidden_of(sc.central, opts));
    }
  }
  throw InputError("unknown mode");
}

}  // namespace hypersig
