#include "sidonlab/cli.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sidonlab/bleiverify.hpp"
#include "sidonlab/indexcomb.hpp"
#include "sidonlab/norms.hpp"
#include "sidonlab/polyjson.hpp"

namespace sidonlab {

namespace {

using nlohmann::ordered_json;

constexpr const char* kToolVersion = "sidonlab 0.1.0";

struct ConfigField {
  const char* name;
  double BoundConfig::*member;
};

constexpr ConfigField kConfigFields[] = {
    {"c0", &BoundConfig::c0},           {"a", &BoundConfig::a},
    {"tau", &BoundConfig::tau},         {"C_tau", &BoundConfig::C_tau},
    {"C0", &BoundConfig::C0},           {"C1", &BoundConfig::C1},
    {"c_abs", &BoundConfig::c_abs},     {"K", &BoundConfig::K},
    {"epsilon", &BoundConfig::epsilon}, {"compa_C", &BoundConfig::compa_C},
    {"C_aa", &BoundConfig::C_aa},
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError(path + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string join_ints(const std::vector<int>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

// "10,20:30,100:1000:100" -> 10, 20..30, 100..1000 step 100
std::vector<long> parse_grid(const std::string& spec, const char* what) {
  std::vector<long> out;
  auto to_long = [&](const std::string& tok) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok.empty() || v != std::floor(v) || std::abs(v) > 9e15)
      throw UsageError(std::string(what) + ": '" + tok + "' is not an integer");
    return static_cast<long>(v);
  };
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::vector<std::string> parts;
    std::stringstream ps(item);
    std::string part;
    while (std::getline(ps, part, ':')) parts.push_back(part);
    if (parts.size() == 1) {
      out.push_back(to_long(parts[0]));
    } else if (parts.size() == 2 || parts.size() == 3) {
      const long lo = to_long(parts[0]);
      const long hi = to_long(parts[1]);
      const long step = parts.size() == 3 ? to_long(parts[2]) : 1;
      if (step < 1 || hi < lo) throw UsageError(std::string(what) + ": bad range '" + item + "'");
      for (long v = lo; v <= hi; v += step) out.push_back(v);
    } else {
      throw UsageError(std::string(what) + ": bad item '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string(what) + ": grid is empty");
  return out;
}

ordered_json witness_json(const Polynomial& p, const Point& w) {
  ordered_json arr = ordered_json::array();
  for (const auto& z : w) {
    if (p.domain() == Domain::cube)
      arr.push_back(static_cast<int>(z.real()));
    else
      arr.push_back({z.real(), z.imag()});
  }
  return arr;
}

struct Invocation {
  std::string out_path;
  std::string manifest_path;
  std::string config_path;
  std::uint64_t seed = 0;
  std::array<std::optional<double>, std::size(kConfigFields)> overrides;
};

void add_output_options(CLI::App* sub, Invocation& inv) {
  sub->add_option("--out", inv.out_path, "Write the report to this file instead of stdout");
  sub->add_option("--manifest", inv.manifest_path, "Write a run manifest (JSON) to this file");
}

void add_config_options(CLI::App* sub, Invocation& inv) {
  sub->add_option("--config", inv.config_path, "JSON file with BoundConfig fields")
      ->check(CLI::ExistingFile);
  for (std::size_t f = 0; f < std::size(kConfigFields); ++f)
    sub->add_option(std::string("--") + kConfigFields[f].name, inv.overrides[f],
                    std::string("Override BoundConfig.") + kConfigFields[f].name);
}

struct AscentFlags {
  int restarts = 16;
  int iters = 500;
  double tol = 1e-10;
  int grid = 0;
};

void add_ascent_options(CLI::App* sub, AscentFlags& a, Invocation& inv) {
  sub->add_option("--restarts", a.restarts, "Random restarts of the phase ascent")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sub->add_option("--iters", a.iters, "Iterations per restart")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--tol", a.tol, "Gradient-norm stopping tolerance")->capture_default_str();
  sub->add_option("--grid", a.grid, "Use a uniform phase grid with this many points per angle (n <= 3)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--seed", inv.seed, "Seed of the random restarts")->capture_default_str();
}

BoundConfig effective_config(const Invocation& inv) {
  BoundConfig cfg;
  if (!inv.config_path.empty()) cfg = config_from_json(read_file(inv.config_path));
  for (std::size_t f = 0; f < std::size(kConfigFields); ++f)
    if (inv.overrides[f]) cfg.*(kConfigFields[f].member) = *inv.overrides[f];
  cfg.validate();
  return cfg;
}

SupNormEstimate estimate_sup(const Polynomial& p, const AscentFlags& a, const Invocation& inv,
                             std::uint64_t cap, bool cap_from_env) {
  if (p.domain() == Domain::cube) {
    if (a.grid > 0) throw UsageError("--grid applies to torus polynomials only");
    int max_n = kExhaustiveCubeCap;
    if (cap_from_env) {
      max_n = 0;
      while (max_n < 62 && (std::uint64_t{1} << (max_n + 1)) <= cap) ++max_n;
    }
    return supnorm_cube_exact(p, max_n);
  }
  if (a.grid > 0) return supnorm_torus_grid(p, a.grid);
  AscentOptions opt;
  opt.restarts = a.restarts;
  opt.max_iters = a.iters;
  opt.tol = a.tol;
  opt.seed = inv.seed;
  return supnorm_torus_estimate(p, opt);
}

ordered_json parameters_of(const CLI::App* sub) {
  ordered_json params = ordered_json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    const std::string name = opt->get_name(false, true);
    if (name == "--help" || name == "-h" || name == "--manifest") continue;
    std::string value;
    const auto& res = opt->results();
    for (std::size_t i = 0; i < res.size(); ++i) value += (i ? "," : "") + res[i];
    if (res.empty()) value = opt->get_default_str();
    if (opt->get_type_size() == 0) value = opt->count() > 0 ? "true" : "false";
    params[name] = value;
  }
  return params;
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

BoundConfig config_from_json(const std::string& text, BoundConfig base) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("config: expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    const ConfigField* hit = nullptr;
    for (const auto& f : kConfigFields)
      if (key == f.name) hit = &f;
    if (!hit) throw std::invalid_argument("config: unknown field \"" + key + "\"");
    if (!value.is_number()) throw std::invalid_argument("config: \"" + key + "\" must be a number");
    base.*(hit->member) = value.get<double>();
  }
  return base;
}

std::string config_to_json(const BoundConfig& cfg) {
  ordered_json doc;
  for (const auto& f : kConfigFields) doc[f.name] = cfg.*(f.member);
  return doc.dump();
}

std::uint64_t enumeration_cap_from_env() {
  const char* raw = std::getenv("SIDONLAB_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultEnumerationCap;
  const std::string s(raw);
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19)
    throw std::invalid_argument("SIDONLAB_CAP must be a non-negative integer, got '" + s + "'");
  return std::stoull(s);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical companion for Bohnenblust-Hille and Sidon constant bounds", "sidonlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Invocation inv;
  std::function<int(std::ostream&)> action;
  std::optional<BoundConfig> used_config;

  std::uint64_t cap = kDefaultEnumerationCap;
  bool cap_from_env = false;
  try {
    cap = enumeration_cap_from_env();
    cap_from_env = std::getenv("SIDONLAB_CAP") != nullptr && *std::getenv("SIDONLAB_CAP") != '\0';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  // verify-lemmas
  int d_max = 6;
  int n_max = 6;
  bool inject_fault = false;
  auto* verify = app.add_subcommand("verify-lemmas", "Exact checks of the extension lemma and binomial identities");
  verify->add_option("--d-max", d_max, "Largest degree")->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_option("--n-max", n_max, "Largest number of variables")->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_flag("--inject-fault", inject_fault, "Corrupt one closed form (testing)")->group("");
  add_output_options(verify, inv);
  verify->callback([&] {
    action = [&](std::ostream& os) {
      os << "check,k,d,n,S,lhs,rhs,status\n";
      bool violation = false;
      bool skipped = false;
      bool fault = inject_fault;
      auto row = [&](const char* check, int k, int d, int n, const std::string& S, const std::string& lhs,
                     const std::string& rhs, bool ok) {
        os << check << ',' << k << ',' << d << ',' << n << ',' << S << ',' << lhs << ',' << rhs << ','
           << (ok ? "pass" : "FAIL") << '\n';
        if (!ok) {
          violation = true;
          err << "violation: " << check << " k=" << k << " d=" << d << " n=" << n
              << (S.empty() ? "" : " S={" + S + "}") << ": " << lhs << " vs " << rhs << "\n";
        }
      };
      for (int d = 1; d <= d_max; ++d)
        for (int k = 1; k <= d; ++k)
          for (int n = 1; n <= n_max; ++n)
            for (const auto& S : subsets_of_size(d, d - k)) {
              Rational closed(binomial(n + d - 1, d), binomial(n + k - 1, k));
              if (fault) {
                closed += 1;
                fault = false;
              }
              const std::string s = join_ints(S, ';');
              try {
                const Rational mean = mean_extension_count(d, k, n, S, cap);
                row("ext", k, d, n, s, mean.str(), closed.str(), mean == closed);
              } catch (const CapExceeded& e) {
                skipped = true;
                os << "ext," << k << ',' << d << ',' << n << ',' << s << ",,,skipped\n";
                err << "cap exceeded: ext k=" << k << " d=" << d << " n=" << n << " S={" << s
                    << "}: needs " << e.required() << " > " << e.cap() << "\n";
              }
            }
      for (int d = 1; d <= d_max; ++d)
        for (int k = 1; k <= d; ++k)
          for (int n = d; n <= n_max; ++n) {
            const auto c = check_strange(k, d, n);
            row("strange", k, d, n, "", c.lhs_power.str(), c.rhs_power.str(), c.holds);
          }
      for (int d = 1; d <= d_max; ++d)
        for (int k = 1; k <= d; ++k)
          for (int n = d; n <= n_max; ++n) {
            const Rational ratio(binomial(n, d), binomial(n - k, d - k) * binomial(n, k));
            const Rational want(BigInt(1), binomial(d, k));
            row("win", k, d, n, "", ratio.str(), want.str(), ratio == want);
          }
      if (violation) return kExitViolation;
      return skipped ? kExitCap : kExitOk;
    };
  });

  // blei
  std::string poly_file;
  int blei_k = 0;
  std::string variant_name;
  auto* blei = app.add_subcommand("blei", "Both sides of Blei's inequality for a polynomial file");
  blei->add_option("file", poly_file, "Polynomial JSON file")->required()->check(CLI::ExistingFile);
  blei->add_option("-k,--k", blei_k, "Block size k")->required();
  blei->add_option("--variant", variant_name, "complex | boolean | boolean-strengthened")
      ->check(CLI::IsMember({"complex", "boolean", "boolean-strengthened"}));
  add_output_options(blei, inv);
  blei->callback([&] {
    action = [&](std::ostream& os) {
      const Polynomial p = read_polynomial_file(poly_file);
      if (!p.homogeneous()) throw UsageError("blei: the polynomial must be homogeneous");
      const BleiVariant variant =
          variant_name.empty()
              ? (p.domain() == Domain::torus ? BleiVariant::complex_form : BleiVariant::boolean)
              : blei_variant_from_string(variant_name);
      if (blei_k < 1 || blei_k > p.d()) throw UsageError("blei: need 1 <= k <= d");
      const BigInt work = BigInt(p.coefficients().size()) * binomial(p.d(), blei_k);
      if (work > cap) throw CapExceeded("blei: too many (coefficient, subset) pairs", work, cap);
      const BleiSides sides = blei_sides(p.coefficients(), blei_k, variant);
      ordered_json doc;
      doc["domain"] = to_string(p.domain());
      doc["n"] = p.n();
      doc["d"] = p.d();
      doc["variant"] = to_string(variant);
      doc["k"] = sides.k;
      doc["lhs"] = sides.lhs;
      doc["rhs"] = sides.rhs;
      doc["rhs_unstrengthened"] = sides.rhs_unstrengthened;
      if (variant == BleiVariant::boolean_strengthened)
        doc["strengthening_factor"] = sides.strengthening_factor;
      doc["violated"] = sides.violated();
      ordered_json terms = ordered_json::array();
      for (const auto& [S, term] : sides.per_subset_terms) {
        ordered_json t;
        t["S"] = S;
        t["term"] = term;
        terms.push_back(std::move(t));
      }
      doc["per_subset_terms"] = std::move(terms);
      os << doc.dump(2) << "\n";
      if (sides.violated()) {
        err << "violation: lhs " << format_double(sides.lhs) << " > rhs " << format_double(sides.rhs) << "\n";
        return kExitViolation;
      }
      return kExitOk;
    };
  });

  // supnorm
  AscentFlags ascent;
  auto* supnorm = app.add_subcommand("supnorm", "Sup-norm of a polynomial: exact on the cube, lower bound on the torus");
  supnorm->add_option("file", poly_file, "Polynomial JSON file")->required()->check(CLI::ExistingFile);
  add_ascent_options(supnorm, ascent, inv);
  add_output_options(supnorm, inv);
  supnorm->callback([&] {
    action = [&](std::ostream& os) {
      const Polynomial p = read_polynomial_file(poly_file);
      const SupNormEstimate est = estimate_sup(p, ascent, inv, cap, cap_from_env);
      ordered_json doc;
      doc["domain"] = to_string(p.domain());
      doc["n"] = p.n();
      doc["d"] = p.d();
      doc["method"] = to_string(est.method);
      doc["value"] = est.value;
      doc["certified_exact"] = est.certified_exact;
      doc["witness"] = witness_json(p, est.witness);
      doc["restarts_used"] = est.restarts_used;
      doc["iterations"] = est.iterations;
      doc["seed"] = inv.seed;
      os << doc.dump(2) << "\n";
      return kExitOk;
    };
  });

  // bh-ratio
  auto* bh = app.add_subcommand("bh-ratio", "Coefficient norm over estimated sup-norm");
  bh->add_option("file", poly_file, "Polynomial JSON file")->required()->check(CLI::ExistingFile);
  add_ascent_options(bh, ascent, inv);
  add_config_options(bh, inv);
  add_output_options(bh, inv);
  bh->callback([&] {
    action = [&](std::ostream& os) {
      const BoundConfig cfg = effective_config(inv);
      used_config = cfg;
      const Polynomial p = read_polynomial_file(poly_file);
      if (p.d() < 1) throw UsageError("bh-ratio: degree must be >= 1");
      const SupNormEstimate est = estimate_sup(p, ascent, inv, cap, cap_from_env);
      if (!(est.value > 0.0)) throw UsageError("bh-ratio: the polynomial vanishes identically");
      const double ratio = bh_ratio(p, est);
      ordered_json doc;
      doc["domain"] = to_string(p.domain());
      doc["n"] = p.n();
      doc["d"] = p.d();
      doc["coeff_norm"] = coeff_lp_norm(p, 2.0 * p.d() / (p.d() + 1.0));
      doc["sup"] = est.value;
      doc["sup_method"] = to_string(est.method);
      doc["certified_exact"] = est.certified_exact;
      doc["ratio"] = ratio;
      ordered_json bound;
      if (p.d() == 1) {
        bound["name"] = "degree_one";
        bound["value"] = 1.0;
        bound["log_value"] = 0.0;
      } else {
        const BoundReport r = p.domain() == Domain::cube ? bound_boolean(p.d(), cfg).strengthened
                                                         : bound_complex(p.d(), cfg);
        bound["name"] = r.name;
        bound["value"] = r.value;
        bound["log_value"] = r.log_value;
        bound["formula"] = r.formula;
      }
      doc["within_bound"] = std::log(ratio) <= bound["log_value"].get<double>() + 1e-12;
      doc["bound"] = std::move(bound);
      doc["seed"] = inv.seed;
      doc["config"] = ordered_json::parse(config_to_json(cfg));
      os << doc.dump(2) << "\n";
      return kExitOk;
    };
  });

  // bounds
  std::string d_grid;
  auto* bounds = app.add_subcommand("bounds", "Curves of the explicit bounds over a grid of degrees");
  bounds->add_option("--d-grid", d_grid, "Degrees, e.g. 10,100,1000 or 2:50 or 10:1000:10")->required();
  add_config_options(bounds, inv);
  add_output_options(bounds, inv);
  bounds->callback([&] {
    action = [&](std::ostream& os) {
      const BoundConfig cfg = effective_config(inv);
      used_config = cfg;
      const auto grid = parse_grid(d_grid, "--d-grid");
      for (long d : grid)
        if (d < 2 || d > 1'000'000) throw UsageError("--d-grid: degrees must lie in [2, 1000000]");
      os << "d,bound_complex,log_bound_complex,bound_bps,log_bound_bps,bps_over_complex,"
            "boolean_strengthened,k_boolean_strengthened,boolean_unstrengthened,k_boolean_unstrengthened,"
            "boolean_simplified,k_boolean_simplified,k_formula_real,k_formula,k_exhaustive,hc,log_L\n";
      for (long dl : grid) {
        const int d = static_cast<int>(dl);
        const auto bc = bound_complex(d, cfg);
        const auto bp = bound_bps(d, cfg);
        const auto bb = bound_boolean(d, cfg);
        const auto ko = optimal_k_complex(d, cfg);
        os << d << ',' << format_double(bc.value) << ',' << format_double(bc.log_value) << ','
           << format_double(bp.value) << ',' << format_double(bp.log_value) << ','
           << format_double(std::exp(bp.log_value - bc.log_value)) << ','
           << format_double(bb.strengthened.value) << ',' << bb.k_strengthened << ','
           << format_double(bb.unstrengthened.value) << ',' << bb.k_unstrengthened << ','
           << format_double(bb.simplified.value) << ',' << bb.k_simplified << ','
           << format_double(ko.formula_real) << ',' << ko.k_formula << ',' << ko.k_exhaustive << ','
           << format_double(hc_constant(d, ko.k_exhaustive)) << ','
           << format_double(log_chebyshev_L(d, ko.k_exhaustive)) << '\n';
      }
      return kExitOk;
    };
  });

  // aa
  std::string n_grid;
  auto* aa = app.add_subcommand("aa", "Regime table for the Aaronson-Ambainis reduction");
  aa->add_option("--n-grid", n_grid, "Numbers of variables, e.g. 1e3,1e4,1e5")->required();
  add_config_options(aa, inv);
  add_output_options(aa, inv);
  aa->callback([&] {
    action = [&](std::ostream& os) {
      const BoundConfig cfg = effective_config(inv);
      used_config = cfg;
      if (!(cfg.K > 1.0)) throw UsageError("aa: K must exceed 1");
      const auto grid = parse_grid(n_grid, "--n-grid");
      for (long n : grid)
        if (n < 4) throw UsageError("--n-grid: need n >= 4");
      os << "n,n_eps,d_star,gap_lo,gap_hi,gap_nonempty,log_trivial,log_sidon,log_required\n";
      for (long n : grid) {
        const auto row = aa_regimes(n, cfg);
        const long gap_hi = static_cast<long>(std::ceil(row.n_eps)) - 1;
        os << n << ',' << format_double(row.n_eps) << ',' << row.d_star << ',' << row.d_star + 1 << ','
           << gap_hi << ',' << (row.gap_nonempty ? "true" : "false") << ',' << format_double(row.log_trivial)
           << ',' << format_double(row.log_sidon) << ',' << format_double(row.log_required) << '\n';
      }
      err << "note: log_trivial uses ||f||_2 = C(n,d)^(1/2), the multilinear count\n";
      return kExitOk;
    };
  });

  // replay
  std::string replay_path;
  auto* replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay->add_option("manifest", replay_path, "Manifest written by --manifest")->required()->check(CLI::ExistingFile);
  replay->callback([&] { action = nullptr; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (replay->parsed()) {
    std::vector<std::string> recorded;
    try {
      const auto doc = nlohmann::json::parse(read_file(replay_path));
      recorded = doc.at("argv").get<std::vector<std::string>>();
    } catch (const std::exception& e) {
      err << "error: " << replay_path << ": not a manifest (" << e.what() << ")\n";
      return kExitUsage;
    }
    if (!recorded.empty() && recorded.front() == "replay") {
      err << "error: a manifest cannot replay another replay\n";
      return kExitUsage;
    }
    return run_cli(recorded, out, err);
  }

  const CLI::App* sub = app.get_subcommands().front();
  int code = kExitOk;
  try {
    std::ostringstream body;
    code = action(body);
    if (inv.out_path.empty()) {
      out << body.str();
    } else {
      std::ofstream f(inv.out_path, std::ios::binary);
      if (!f) throw UsageError(inv.out_path + ": cannot write");
      f << body.str();
    }
    if (!inv.manifest_path.empty()) {
      ordered_json m;
      m["command"] = sub->get_name();
      m["argv"] = args;
      m["parameters"] = parameters_of(sub);
      m["seed"] = inv.seed;
      ordered_json versions;
      versions["tool"] = kToolVersion;
      versions["config_hash"] = used_config ? hex64(fnv1a(config_to_json(*used_config))) : "";
      m["versions"] = std::move(versions);
      m["outputs"] = ordered_json::array({inv.out_path.empty() ? "-" : inv.out_path});
      std::ofstream f(inv.manifest_path, std::ios::binary);
      if (!f) throw UsageError(inv.manifest_path + ": cannot write");
      f << m.dump(2) << "\n";
    }
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << " (needs " << e.required() << ", cap " << e.cap()
        << "; raise SIDONLAB_CAP)\n";
    return kExitCap;
  } catch (const IdentityViolation& e) {
    err << "violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const PolyParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return code;
}

}  // namespace sidonlab
