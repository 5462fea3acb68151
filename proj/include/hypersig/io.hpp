#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hypersig/options.hpp"
#include "hypersig/semicontinuity.hpp"
#include "hypersig/seifert.hpp"
#include "hypersig/spectrum.hpp"

namespace hypersig {

using Json = nlohmann::json;

/// Parses {"n": int ≥ 1, "matrix": [[int, ...], ...], "name"?: string}.
/// Throws InputError naming the line (syntax) or the offending field.
SeifertMatrix parse_seifert_json(std::string_view text);
SeifertMatrix seifert_from_json(const Json& j, const std::string& where = "");

Json to_json(const CertifiedReal& value);
Json to_json(const Spectrum& sp);
Json to_json(const SemicontinuityReport& rep);
Json invariants_json(const SeifertMatrix& s, const NumericOptions& opts = {});

/// Spectrum from [{"value": "p/q", "multiplicity": k}, ...] or ["p/q", ...].
Spectrum spectrum_from_json(const Json& j, const std::string& where = "spectrum");

/// Sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

/// CSV "alpha,sigma,nullity,is_jump" over interval samples, exactly
/// evaluable jumps and the extra grid. Grid values must lie in (0, 1).
std::string profile_csv(const SeifertMatrix& s, const std::vector<Rational>& grid,
                        const NumericOptions& opts = {});

using SpectralInput = std::variant<SeifertMatrix, Spectrum>;

struct Scenario {
  Mode mode = Mode::local;
  SpectralInput central = Spectrum{};
  std::vector<SpectralInput> locals;
  bool strict = false;
  std::optional<long> strict_b1;
};

/// Entries are catalog names, Seifert objects {"n", "matrix"} or
/// {"spectrum": [...]}; "betti" may carry "b1" for the strict n = 1 check.
Scenario parse_scenario(std::string_view text);
SemicontinuityReport run_scenario(const Scenario& sc, const NumericOptions& opts = {});

}  // namespace hypersig
