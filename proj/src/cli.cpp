#include "degplus/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "degplus/bounds.hpp"
#include "degplus/cone.hpp"
#include "degplus/error.hpp"
#include "degplus/json_io.hpp"
#include "degplus/sampling.hpp"
#include "degplus/search.hpp"
#include "degplus/star.hpp"

namespace degplus {

namespace {

struct PolySource {
  std::string poly;
  std::vector<std::string> factors;
  unsigned power = 1;
};

struct Globals {
  bool json = false;
  Precision ceiling_bits = 8192;
  std::optional<std::size_t> cap;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_poly_options(CLI::App* sub, PolySource& src) {
  sub->add_option("--poly", src.poly, "Ascending comma-separated rational coefficients, e.g. \"3,-1,1\"");
  sub->add_option("--factor", src.factors, "A factor (repeatable); the polynomial is their product");
  sub->add_option("--power", src.power, "Raise the polynomial to this power")->check(CLI::PositiveNumber);
}

std::vector<Polynomial> parsed_factors(const PolySource& src) {
  std::vector<Polynomial> out;
  for (const auto& f : src.factors) out.push_back(parse_polynomial(f));
  return out;
}

Polynomial resolve(const PolySource& src) {
  const bool has_poly = !src.poly.empty();
  if (has_poly == !src.factors.empty()) throw UsageError("give exactly one of --poly or --factor");
  Polynomial p = Polynomial::constant(1);
  if (has_poly) {
    p = parse_polynomial(src.poly);
  } else {
    for (const auto& f : parsed_factors(src)) p *= f;
  }
  return pow(p, src.power);
}

std::string entry_text(const BoundEntry& e) {
  std::string out = e.value ? std::to_string(*e.value) : "n/a (" + e.reason + ")";
  if (e.conservative) out += " (conservative: angle tie undecided at the precision ceiling)";
  if (!e.provenance.empty()) out += "  [" + e.provenance + "]";
  return out;
}

void print_bounds(std::ostream& out, const Polynomial& p, const BoundsReport& r) {
  out << "p: " << to_pretty_string(p) << "\n";
  out << "class: " << to_string(r.positivity) << "\n";
  if (r.stripped_x_power > 0) out << "stripped x-power: " << r.stripped_x_power << "\n";
  out << "n_up: " << entry_text(r.n_up) << "\n";
  out << "n_down: " << entry_text(r.n_down) << "\n";
  out << "lower_angle_power: " << entry_text(r.lower_angle_power) << "\n";
  out << "upper_structural: " << entry_text(r.upper_structural) << "\n";
  out << "upper_turan: " << entry_text(r.upper_turan) << "\n";
  out << "upper_estim_M: " << entry_text(r.upper_estim_M) << "\n";
  out << "upper_estim_L: " << entry_text(r.upper_estim_L) << "\n";
  out << "upper_zaimi: " << entry_text(r.upper_zaimi);
  if (r.upper_zaimi.value && !r.zaimi_irreducibility_verified) out << " (irreducibility unverified)";
  out << "\n";
  out << "exact_closed_form: " << entry_text(r.exact_closed_form) << "\n";
}

std::string interval_text(const std::pair<Rational, Rational>& iv) {
  return "(" + to_string(iv.first) + ", " + to_string(iv.second) + "]";
}

void print_degplus(std::ostream& out, const Polynomial& p, const DegPlusResult& r) {
  out << "p: " << to_pretty_string(p) << "\n";
  if (const auto* inf = std::get_if<InfiniteDegPlus>(&r)) {
    out << "deg_plus: infinite (positive real root in " << interval_text(inf->root_interval) << ")\n";
    return;
  }
  const auto& c = std::get<DegPlusCertificate>(r);
  out << "deg_plus: " << c.deg_plus << "\n";
  out << "D: " << c.D << "\n";
  out << "witness: " << to_pretty_string(c.witness) << "\n";
  out << "product: " << to_pretty_string(c.product) << "\n";
  if (c.farkas_below) {
    const bool ok = verify_farkas(p, c.deg_plus - 1, *c.farkas_below);
    out << "below: degree " << c.deg_plus - 1 << " infeasible, Farkas certificate "
        << (ok ? "verified" : "FAILED verification") << "\n";
  } else {
    out << "below: none needed (deg_plus = deg p)\n";
  }
}

ScanGrid make_grid(const std::string& a_min, const std::string& a_max, const std::string& b_min,
                   const std::string& b_max, unsigned den, unsigned k_max) {
  return ScanGrid{parse_rational(a_min), parse_rational(a_max), parse_rational(b_min), parse_rational(b_max), den,
                  k_max};
}

int random_check(std::ostream& out, const Globals& g, unsigned count, const PrecisionPolicy& policy) {
  Rng rng(g.seed);
  std::size_t disagreements = 0;
  for (unsigned i = 0; i < count; ++i) {
    const Polynomial q = random_quadratic(rng, 20);
    const std::size_t closed = exact_quadratic(q, policy).value;
    const std::size_t lp = deg_plus_finite(q).deg_plus;
    if (closed != lp) {
      ++disagreements;
      out << "quadratic " << to_string(q) << ": closed form " << closed << ", LP " << lp << "\n";
    }
    const Polynomial c = random_cubic(rng, 20);
    const CubicResult cr = exact_cubic(c, policy);
    const std::size_t lpc = deg_plus_finite(c).deg_plus;
    if (cr.value != lpc || !cr.consistent) {
      ++disagreements;
      out << "cubic " << to_string(c) << ": closed form " << cr.value << ", LP " << lpc << "\n";
    }
  }
  out << "checked " << count << " quadratics and " << count << " cubics (seed " << g.seed << "), disagreements: "
      << disagreements << "\n";
  return disagreements == 0 ? 0 : 3;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal-degree nonnegative-coefficient multiples of rational polynomials", "degplus"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_option("--precision-ceiling-bits", g.ceiling_bits, "Largest working precision for root enclosures")
      ->check(CLI::Range(64, 1 << 20));
  app.add_option("--cap", g.cap, "Iteration cap for the Polya search");
  app.add_option("--seed", g.seed, "Seed for random-check");
  app.add_option("--jobs", g.jobs, "Worker threads for scans")->check(CLI::PositiveNumber);

  PolySource src;
  auto* classify_cmd = app.add_subcommand("classify", "Exact positivity class (Sturm)");
  add_poly_options(classify_cmd, src);
  auto* bounds_cmd = app.add_subcommand("bounds", "All bounds and closed forms for deg+");
  add_poly_options(bounds_cmd, src);
  auto* degplus_cmd = app.add_subcommand("degplus", "Exact deg+ with witness and Farkas certificate");
  add_poly_options(degplus_cmd, src);
  auto* polya_cmd = app.add_subcommand("polya", "Least k with (x+1)^k p coefficient-nonnegative");
  add_poly_options(polya_cmd, src);

  auto* cone_cmd = app.add_subcommand("cone", "Extremal rays of the cone of nonnegative multiples");
  add_poly_options(cone_cmd, src);
  std::optional<std::size_t> cone_n;
  std::optional<std::size_t> cone_budget;
  cone_cmd->add_option("--n", cone_n, "Cofactor degree bound n (rays of M_n)");
  cone_cmd->add_option("--budget", cone_budget, "Degree budget for the least generating set");

  auto* star_cmd = app.add_subcommand("star", "Property (*) for the given factors, or auto mode for --poly");
  add_poly_options(star_cmd, src);
  bool star_auto = false;
  star_cmd->add_flag("--auto", star_auto, "Try several factorizations, including the given one");

  std::string a_min = "-2", a_max = "-1/3", b_min = "1/4", b_max = "3", out_path;
  unsigned den = 3, k_max = 3;
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--a-min", a_min, "Smallest a in x^2 + a x + b");
    sub->add_option("--a-max", a_max, "Largest a");
    sub->add_option("--b-min", b_min, "Smallest b");
    sub->add_option("--b-max", b_max, "Largest b");
    sub->add_option("--den", den, "Denominator bound for a and b")->check(CLI::PositiveNumber);
    sub->add_option("--k-max", k_max, "Largest power k")->check(CLI::PositiveNumber);
    sub->add_option("--out", out_path, "Write CSV rows here instead of stdout");
  };
  auto* scan_cmd = app.add_subcommand("scan", "deg+(p^k) against ceil(k pi / phi) + 1 over a grid");
  add_grid(scan_cmd);
  auto* star_scan_cmd = app.add_subcommand("star-scan", "Property (*) of p^k with factors [p] * k over a grid");
  add_grid(star_scan_cmd);

  auto* random_cmd = app.add_subcommand("random-check", "Closed forms against the LP on random inputs");
  unsigned count = 50;
  random_cmd->add_option("--count", count, "Number of quadratics (and of cubics)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const PrecisionPolicy policy{128, g.ceiling_bits};
  try {
    if (classify_cmd->parsed()) {
      const Polynomial p = resolve(src);
      const auto c = classify(p);
      const std::size_t roots = count_positive_roots(p);
      if (g.json) {
        out << Json{{"class", std::string(to_string(c))}, {"positive_roots", roots}}.dump() << "\n";
      } else {
        out << to_string(c) << "\n" << "positive roots: " << roots << "\n";
      }
    } else if (bounds_cmd->parsed()) {
      const Polynomial p = resolve(src);
      try {
        const BoundsReport r = report(p, policy);
        if (g.json) {
          out << to_json(r).dump() << "\n";
        } else {
          print_bounds(out, p, r);
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::PositiveRootPresent) throw;
        const auto iv = *isolate_positive_root(strip_x_power(p).rest);
        if (g.json) {
          out << Json{{"deg_plus", "infinite"},
                      {"reason", "PositiveRootPresent"},
                      {"positive_root_interval", {to_string(iv.first), to_string(iv.second)}}}
                     .dump()
              << "\n";
        } else {
          out << "p: " << to_pretty_string(p) << "\n"
              << "deg_plus: infinite (positive real root in " << interval_text(iv) << ")\n";
        }
      }
    } else if (degplus_cmd->parsed()) {
      const Polynomial p = resolve(src);
      const DegPlusResult r = deg_plus(p);
      if (g.json) {
        out << to_json(r).dump() << "\n";
      } else {
        print_degplus(out, p, r);
      }
    } else if (polya_cmd->parsed()) {
      const Polynomial p = resolve(src);
      const PolyaResult r = polya_exponent(p, g.cap ? *g.cap : 10000);
      if (g.json) {
        out << Json{{"k", r.k}, {"product", to_json(r.product)}}.dump() << "\n";
      } else {
        out << "k: " << r.k << "\n" << "product: " << to_pretty_string(r.product) << "\n";
      }
    } else if (cone_cmd->parsed()) {
      const Polynomial p = resolve(src);
      if (cone_n.has_value() == cone_budget.has_value()) throw UsageError("give exactly one of --n or --budget");
      std::vector<Polynomial> rays;
      Json payload;
      if (cone_n) {
        const ConeGenerators gens = cone_generators(p, *cone_n);
        rays = gens.rays;
        payload = to_json(gens);
      } else {
        rays = least_generating_set(p, *cone_budget);
        payload = to_json(ConeGenerators{*cone_budget, rays});
        payload.erase("n");
        payload["budget"] = *cone_budget;
      }
      if (g.json) {
        out << payload.dump() << "\n";
      } else {
        out << rays.size() << (rays.size() == 1 ? " generator" : " generators") << "\n";
        for (const auto& r : rays) out << "  " << to_pretty_string(r) << "\n";
      }
    } else if (star_cmd->parsed()) {
      const Polynomial p = resolve(src);
      std::vector<Polynomial> factors;
      for (unsigned i = 0; i < src.power; ++i) {
        for (const auto& f : parsed_factors(src)) factors.push_back(f);
      }
      std::vector<StarReport> shown;
      std::string verdict;
      if (star_auto || factors.empty()) {
        const StarSearch s = property_star_auto(p, factors);
        shown = s.attempts;
        verdict = s.established ? "holds" : "not established";
      } else {
        shown.push_back(property_star(p, factors));
        verdict = shown.back().verdict ? "holds" : "fails for this factorization";
      }
      if (g.json) {
        Json attempts = Json::array();
        for (const auto& r : shown) attempts.push_back(to_json(r));
        out << Json{{"verdict", verdict}, {"attempts", attempts}}.dump() << "\n";
      } else {
        out << "p: " << to_pretty_string(p) << "\n";
        for (const auto& r : shown) {
          out << "factors:";
          for (const auto& f : r.factors) out << " [" << to_pretty_string(f) << "]";
          out << "\n  D(p) = " << r.total_D << ", factor D values:";
          for (auto d : r.per_factor_D) out << " " << d;
          out << (r.additivity_holds ? " (additive)" : " (not additive)") << "\n";
          for (std::size_t i = 0; i < r.truncation_products.size(); ++i) {
            out << "  p_" << i + 1 << " (1/p_" << i + 1 << ")_" << r.per_factor_D[i] << " = "
                << to_pretty_string(r.truncation_products[i])
                << (r.truncation_products[i].has_nonnegative_coeffs() ? "" : "  (negative coefficient)") << "\n";
          }
        }
        out << "property (*): " << verdict << "\n";
      }
    } else if (scan_cmd->parsed() || star_scan_cmd->parsed()) {
      const bool star = star_scan_cmd->parsed();
      const ScanGrid grid = make_grid(a_min, a_max, b_min, b_max, den, k_max);
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw UsageError("cannot open " + out_path);
      }
      std::ostream& rows = out_path.empty() ? out : file;
      rows << csv_header(star) << "\n";
      auto sink = [&](const ScanRow& row) { rows << csv_row(row, star) << "\n" << std::flush; };
      const ScanResult r = star ? star_conjecture_scan(grid, g.jobs, sink, policy)
                                : conjecture_scan(grid, g.jobs, sink, policy);
      (out_path.empty() ? err : out) << scan_summary(r, star).dump() << "\n";
    } else if (random_cmd->parsed()) {
      return random_check(out, g, count, policy);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return (e.code() == ErrorCode::PrecisionExhausted || e.code() == ErrorCode::CapExceeded) ? 1 : 2;
  }
  return 0;
}

}  // namespace degplus
