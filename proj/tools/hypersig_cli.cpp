// hypersig: invariants, signature profiles, spectra and semicontinuity checks
// for integer Seifert matrices.
//
// Exit codes: 0 ok / verdict holds, 1 verdict fails, 2 malformed input or
// usage, 3 input outside the method's domain (singular, off-circle, precision),
// 4 vacuous verdict.
#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include "hypersig/catalog.hpp"
#include "hypersig/errors.hpp"
#include "hypersig/hvs.hpp"
#include "hypersig/io.hpp"

namespace fs = std::filesystem;
using namespace hypersig;

namespace {

enum Exit : int { kOk = 0, kFails = 1, kMalformed = 2, kDomain = 3, kVacuous = 4 };

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A readable file wins; otherwise the argument is a catalog name.
SeifertMatrix load_seifert(const std::string& arg) {
  std::error_code ec;
  if (fs::is_regular_file(arg, ec)) {
    try {
      return parse_seifert_json(read_file(arg));
    } catch (const InputError& e) {
      throw InputError(arg + ": " + e.what());
    }
  }
  try {
    return catalog_entry(arg);
  } catch (const InputError&) {
    throw InputError("'" + arg + "' is neither a readable file nor a catalog name");
  }
}

// Everything or nothing: write next to the target, then rename over it.
void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text << std::flush;
    return;
  }
  const fs::path target(out);
  fs::path tmp = target;
  tmp += ".tmp-" + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError("cannot write " + tmp.string());
    f << text;
    f.flush();
    if (!f) {
      fs::remove(tmp);
      throw InputError("write failed for " + tmp.string());
    }
  }
  fs::rename(tmp, target);
}

std::vector<Rational> parse_grid(const std::vector<std::string>& raw) {
  std::vector<Rational> out;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) out.push_back(parse_rational(tok));
  }
  return out;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::holds: return kOk;
    case Verdict::fails: return kFails;
    case Verdict::vacuous: return kVacuous;
  }
  return kMalformed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seifert-matrix invariants, signatures, spectra and semicontinuity checks"};
  app.require_subcommand(1);

  NumericOptions opts;
  std::string out;
  bool strict = false;
  app.add_option("--tol", opts.relative_tol, "relative tolerance for eigenvalue sign decisions")
      ->check(CLI::PositiveNumber);
  app.add_option("--precision", opts.precision_bits, "bits of certified precision for irrational angles")
      ->check(CLI::Range(8, 4096));
  app.add_option("--out", out, "write the result here (atomically) instead of stdout");
  app.add_flag("--strict", strict, "check: also test the stronger n = 1 inequality");
  app.fallthrough();

  std::string input;
  std::vector<std::string> grid_raw;
  auto* inv = app.add_subcommand("invariants", "mu, n, epsilon, n0, Alexander polynomial, eigenvalue angles");
  inv->add_option("input", input, "Seifert JSON file or catalog name")->required();
  auto* prof = app.add_subcommand("profile", "signature/nullity profile as CSV");
  prof->add_option("input", input, "Seifert JSON file or catalog name")->required();
  prof->add_option("--grid", grid_raw, "extra sample angles in (0, 1), e.g. 1/3,1/2");
  auto* spec = app.add_subcommand("spectrum", "mod-2 spectrum as JSON");
  spec->add_option("input", input, "Seifert JSON file or catalog name")->required();
  auto* check = app.add_subcommand("check", "semicontinuity report for a scenario JSON");
  check->add_option("scenario", input, "scenario JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }

  try {
    if (*inv) {
      emit(dump(invariants_json(load_seifert(input), opts)), out);
      return kOk;
    }
    if (*prof) {
      const auto grid = parse_grid(grid_raw);
      emit(profile_csv(load_seifert(input), grid, opts), out);
      return kOk;
    }
    if (*spec) {
      emit(dump(to_json(extract_spectrum(load_seifert(input), opts))), out);
      return kOk;
    }
    if (*check) {
      Scenario sc = parse_scenario(read_file(input));
      if (strict) sc.strict = true;
      const auto rep = run_scenario(sc, opts);
      emit(dump(to_json(rep)), out);
      return verdict_exit(rep.verdict);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMalformed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMalformed;
  }
  return kMalformed;
}
