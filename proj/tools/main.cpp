// twistlab command-line surface: reproducible runs of the class-group,
// zero-scan, explicit-formula, density, and figure-data computations with
// deterministic 12-significant-digit output and an on-disk zero cache.
//
// Exit codes: 0 success, 2 invalid configuration, 3 balance failure
// (explicit-formula residual exceeds its certified tail).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "twistlab/efterms.hpp"

using json = nlohmann::ordered_json;
using namespace twistlab;

namespace {

// All floating-point output is pinned to 12 significant digits so identical
// configurations produce byte-identical files.
std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Round-trip through the fixed format so JSON numbers carry the same digits
// as the CSV output.
double round12(double x) { return std::strtod(fmt12(x).c_str(), nullptr); }

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::trunc);
  if (!f) throw std::invalid_argument("cannot open output path " + out_path);
  f << text;
}

void emit_json(const json& j, const std::string& out_path) {
  emit(j.dump(2) + "\n", out_path);
}

// Prime table sized for every prime-power sum at scale sigma * L, with a
// hard ceiling so a typo in sigma or X fails fast instead of thrashing.
PrimeTable prime_table_for(double sigma, double L) {
  double need = std::exp(sigma * L) + 16.0;
  if (need > 6.0e7)
    throw std::invalid_argument(
        "support window exp(sigma L) exceeds the prime-table ceiling 6e7");
  return PrimeTable(static_cast<i64>(std::max(200000.0, need)));
}

TestFunctionPair make_tf(const std::string& name, double sigma) {
  if (name == "fejer") return fejer_pair(sigma);
  if (name == "bump") return bump_pair(sigma);
  throw std::invalid_argument("unknown test function family: " + name);
}

// Zero cache persistence: one JSON object per line, one line per ordinate,
// keyed by discriminant, stored scan height, and the scan grid step. Entries
// from a different grid step are discarded, never reinterpreted.
constexpr double kScanGridStep = 0.01;

void load_cache(ZeroCache& cache, const std::string& path) {
  std::ifstream f(path);
  if (!f) return;  // absent cache file is an empty cache
  std::map<i64, std::pair<double, std::vector<double>>> acc;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) continue;
    if (!j.contains("d") || !j.contains("T") || !j.contains("gamma")) continue;
    if (j.value("grid", 0.0) != kScanGridStep) continue;
    i64 d = j["d"].get<i64>();
    double T = j["T"].get<double>();
    auto& e = acc[d];
    if (T > e.first) e = {T, {}};
    if (T == e.first) e.second.push_back(j["gamma"].get<double>());
  }
  for (auto& [d, e] : acc) {
    std::sort(e.second.begin(), e.second.end());
    cache.put(d, e.first, std::move(e.second));
  }
}

void save_cache(const ZeroCache& cache, const std::string& path) {
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw std::invalid_argument("cannot open cache path " + path);
  for (auto& [d, e] : cache.snapshot()) {
    int idx = 0;
    // Full round-trip precision: the cache feeds later computations, so
    // (unlike presentation output) it must not quantize the ordinates.
    for (double g : e.second) {
      json j{{"d", d},
             {"T", e.first},
             {"grid", kScanGridStep},
             {"index", ++idx},
             {"gamma", g}};
      f << j.dump() << "\n";
    }
  }
}

json ef_report_json(const EFReport& r) {
  json j{{"L", round12(r.L)},
         {"sigma", round12(r.sigma)},
         {"T", round12(r.T)},
         {"conductor", round12(r.conductor)},
         {"gamma_factor", round12(r.gamma)},
         {"even_primes_zeta", round12(r.even1)},
         {"even_primes_twist", round12(r.even2)},
         {"odd_primes", round12(r.odd)},
         {"pole_siegel", round12(r.pole_siegel)},
         {"zero_side", round12(r.zero_side)},
         {"zero_count", r.zero_count},
         {"residual", round12(r.residual)},
         {"tail_zero", round12(r.tail_zero)},
         {"tail_quadrature", round12(r.tail_quadrature)},
         {"tail_total", round12(r.tail_total)},
         {"balanced", r.balanced}};
  if (r.delta) j["delta"] = round12(*r.delta);
  if (!r.per_member_zero_counts.empty())
    j["per_member_zero_counts"] = r.per_member_zero_counts;
  return j;
}

struct Flags {
  i64 D = 0, X = 0, e = 0, pmax = 1000, threads = 1;
  i64 d = 0, d1 = 0, d2 = 0;
  double sigma = 1.0, T = 30.0, tmax = 10.0, step = 0.01, eps = 0.1;
  double Xscale = 0.0, delta = 0.0;
  std::string tf = "fejer", out, cache, mode = "family";
  bool no_zeros = false;
};

int cmd_classgroup(const Flags& fl) {
  PrimeTable pt(std::max<i64>(1000, static_cast<i64>(std::sqrt((double)fl.D)) + 2));
  auto G = class_group(fl.D, pt);
  json forms = json::array();
  for (auto& f : G.reduced_forms) forms.push_back({f.a, f.b, f.c});
  json chars = json::array();
  for (auto& psi : genus_characters(fl.D, pt))
    chars.push_back({{"d1", psi.d1}, {"d2", psi.d2}});
  auto rep = principal_genus_min_prime(G, pt);
  json j{{"D", fl.D},
         {"h", G.h},
         {"invariant_factors", G.invariant_factors},
         {"genus_count", G.genus_count},
         {"principal_genus_exponent", G.e},
         {"principal_genus", G.principal_genus},
         {"reduced_forms", forms},
         {"genus_characters", chars},
         {"min_prime_check_pass", rep.pass}};
  emit_json(j, fl.out);
  return 0;
}

int cmd_zeros(const Flags& fl) {
  ZeroCache cache;
  if (!fl.cache.empty()) load_cache(cache, fl.cache);
  const auto& ords = cache.ordinates(fl.d, fl.T);
  if (!fl.cache.empty()) save_cache(cache, fl.cache);
  std::ostringstream os;
  os << "index,gamma\n";
  int idx = 0;
  for (double g : ords) os << ++idx << "," << fmt12(g) << "\n";
  emit(os.str(), fl.out);
  return 0;
}

int cmd_efcheck(const Flags& fl) {
  ZeroCache cache;
  if (!fl.cache.empty()) load_cache(cache, fl.cache);
  EFReport r;
  if (fl.mode == "dedekind") {
    double Xs = fl.Xscale > 0.0 ? fl.Xscale : static_cast<double>(fl.X);
    if (Xs < 2.0) throw std::invalid_argument("dedekind mode needs --Xscale >= 2");
    double L = scale_L(fl.D, Xs);
    auto pt = prime_table_for(fl.sigma, L);
    auto tf = make_tf(fl.tf, fl.sigma);
    std::optional<double> synth;
    if (fl.delta > 0.0) synth = fl.delta;
    r = dedekind_ef(fl.D, tf, Xs, fl.T, pt, synth, &cache);
  } else if (fl.mode == "family") {
    double L = scale_L(fl.D, static_cast<double>(fl.X));
    auto pt = prime_table_for(fl.sigma, L);
    auto tf = make_tf(fl.tf, fl.sigma);
    auto fam = enumerate_family(fl.D, fl.X, pt);
    GenusCharacter psi{1, -fl.D};
    if (fl.d1 != 0) psi = GenusCharacter{fl.d1, fl.d2};
    r = ef_balance(fam, psi, tf, fl.T, pt, &cache, !fl.no_zeros);
  } else {
    throw std::invalid_argument("mode must be family or dedekind");
  }
  if (!fl.cache.empty()) save_cache(cache, fl.cache);
  emit_json(ef_report_json(r), fl.out);
  return (!fl.no_zeros && !r.balanced) ? 3 : 0;
}

int cmd_density(const Flags& fl) {
  ZeroCache cache;
  if (!fl.cache.empty()) load_cache(cache, fl.cache);
  double L = scale_L(fl.D, static_cast<double>(fl.X));
  auto pt = prime_table_for(fl.sigma, L);
  auto tf = make_tf(fl.tf, fl.sigma);
  auto fam = enumerate_family(fl.D, fl.X, pt);
  GenusCharacter psi{1, -fl.D};
  if (fl.d1 != 0) psi = GenusCharacter{fl.d1, fl.d2};
  auto d = ef_family_density(fam, psi, tf, fl.T, pt, &cache, !fl.no_zeros);
  if (!fl.cache.empty()) save_cache(cache, fl.cache);
  json j{{"ef", ef_report_json(d.ef)},
         {"xstar", d.xstar},
         {"block_qminus_apos", round12(d.block_qminus_apos)},
         {"block_qminus_aneg", round12(d.block_qminus_aneg)},
         {"block_qplus_apos", round12(d.block_qplus_apos)},
         {"block_qplus_aneg", round12(d.block_qplus_aneg)},
         {"even2_gap_apos", round12(d.even2_gap_apos)},
         {"even2_gap_aneg", round12(d.even2_gap_aneg)},
         {"even2_matches_positive", d.even2_matches_positive},
         {"density_prediction", round12(d.density_prediction)},
         {"sin_kernel", round12(d.sin_kernel)}};
  emit_json(j, fl.out);
  return (!fl.no_zeros && !d.ef.balanced) ? 3 : 0;
}

int cmd_resonance(const Flags& fl) {
  PrimeTable pt(200000);
  auto data = resonance_curve(fl.D, fl.tmax, fl.step, pt);
  // gnuplot-style blocks: the sampled curves first, then the discrete green
  // series (half-ordinates) after a blank line.
  std::ostringstream os;
  os << "t,red,blue\n";
  for (auto& p : data.points)
    os << fmt12(p.t) << "," << fmt12(p.red) << "," << fmt12(p.blue) << "\n";
  os << "\ngreen\n";
  for (double g : data.green) os << fmt12(g) << "\n";
  emit(os.str(), fl.out);
  return 0;
}

int cmd_remfig(const Flags& fl) {
  PrimeTable pt(200000);
  auto rows = rem_figure(fl.tmax, fl.step, pt);
  std::ostringstream os;
  os << "t,red,blue,green\n";
  for (auto& r : rows)
    os << fmt12(r.t) << "," << fmt12(r.red) << "," << fmt12(r.blue) << ","
       << fmt12(r.green) << "\n";
  emit(os.str(), fl.out);
  return 0;
}

int cmd_charsum(const Flags& fl) {
  PrimeTable pt(std::max<i64>(200000, fl.pmax + 1));
  auto fam = enumerate_family(fl.D, fl.X, pt);
  auto recs = burgess_dashboard(fam, fl.pmax, fl.eps, pt);
  std::ostringstream os;
  os << "p,sum,bound,ratio,within\n";
  for (auto& r : recs)
    os << r.p << "," << r.sum << "," << fmt12(r.bound) << "," << fmt12(r.ratio)
       << "," << (r.within ? 1 : 0) << "\n";
  emit(os.str(), fl.out);
  return 0;
}

int cmd_regime(const Flags& fl) {
  i64 e = fl.e;
  if (e <= 0) {
    PrimeTable pt(std::max<i64>(1000, static_cast<i64>(std::sqrt((double)fl.D)) + 2));
    e = class_group(fl.D, pt).e;
  }
  auto r = regime_report(fl.D, fl.X, fl.sigma, e);
  json j{{"D", r.D},
         {"X", r.X},
         {"sigma", round12(r.sigma)},
         {"principal_genus_exponent", e},
         {"algebra_ok", r.algebra_ok},
         {"x_max_algebra", round12(r.x_max_algebra)},
         {"no_split_certificate", r.no_split_certificate},
         {"analysis_ok", r.analysis_ok},
         {"logD_X", round12(r.logD_X)},
         {"window_lo", round12(r.window_lo)},
         {"window_hi", round12(r.window_hi)}};
  if (r.epsilon) j["epsilon"] = round12(*r.epsilon);
  emit_json(j, fl.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "twistlab: explicit-formula and 1-level-density laboratory for "
      "quadratic twists of genus-character L-functions"};
  app.require_subcommand(1);
  Flags fl;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--out", fl.out, "output file (stdout when omitted)");
    c->add_option("--threads", fl.threads, "worker count (reductions are order-fixed)")
        ->check(CLI::PositiveNumber);
  };

  auto* cg = app.add_subcommand("classgroup", "class group of discriminant -D");
  cg->add_option("--D", fl.D, "positive D, -D fundamental")->required();
  add_common(cg);

  auto* zr = app.add_subcommand("zeros", "critical-line ordinates up to T");
  zr->add_option("--d", fl.d, "fundamental discriminant (or 1 for zeta)")
      ->required();
  zr->add_option("--T", fl.T, "scan height")->check(CLI::PositiveNumber);
  zr->add_option("--cache", fl.cache, "line-delimited JSON zero cache");
  add_common(zr);

  auto* ef = app.add_subcommand("efcheck", "two-sided explicit-formula balance");
  ef->add_option("--D", fl.D)->required();
  ef->add_option("--X", fl.X, "family window start (family mode)");
  ef->add_option("--Xscale", fl.Xscale, "scale parameter X (dedekind mode)");
  ef->add_option("--sigma", fl.sigma)->check(CLI::PositiveNumber);
  ef->add_option("--tf", fl.tf)->check(CLI::IsMember({"fejer", "bump"}));
  ef->add_option("--T", fl.T)->check(CLI::PositiveNumber);
  ef->add_option("--mode", fl.mode)->check(CLI::IsMember({"family", "dedekind"}));
  ef->add_option("--d1", fl.d1, "genus character factor d1");
  ef->add_option("--d2", fl.d2, "genus character factor d2");
  ef->add_option("--delta", fl.delta, "synthetic real-zero gap (dedekind mode)");
  ef->add_flag("--no-zeros", fl.no_zeros, "prime/archimedean side only");
  ef->add_option("--cache", fl.cache);
  add_common(ef);

  auto* de = app.add_subcommand("density", "1-level density report");
  de->add_option("--D", fl.D)->required();
  de->add_option("--X", fl.X)->required();
  de->add_option("--sigma", fl.sigma)->check(CLI::PositiveNumber);
  de->add_option("--tf", fl.tf)->check(CLI::IsMember({"fejer", "bump"}));
  de->add_option("--T", fl.T)->check(CLI::PositiveNumber);
  de->add_option("--d1", fl.d1);
  de->add_option("--d2", fl.d2);
  de->add_flag("--no-zeros", fl.no_zeros);
  de->add_option("--cache", fl.cache);
  add_common(de);

  auto* rs = app.add_subcommand("resonance", "edge-of-strip resonance curves");
  rs->add_option("--D", fl.D)->required();
  rs->add_option("--tmax", fl.tmax)->check(CLI::PositiveNumber);
  rs->add_option("--step", fl.step)->check(CLI::PositiveNumber);
  add_common(rs);

  auto* rf = app.add_subcommand("remfig", "remainder-ratio comparison grid");
  rf->add_option("--tmax", fl.tmax)->check(CLI::PositiveNumber);
  rf->add_option("--step", fl.step)->check(CLI::PositiveNumber);
  add_common(rf);

  auto* cs = app.add_subcommand("charsum", "family character-sum dashboard");
  cs->add_option("--D", fl.D)->required();
  cs->add_option("--X", fl.X)->required();
  cs->add_option("--pmax", fl.pmax)->check(CLI::PositiveNumber);
  cs->add_option("--eps", fl.eps)->check(CLI::PositiveNumber);
  add_common(cs);

  auto* rg = app.add_subcommand("regime", "admissibility regime report");
  rg->add_option("--D", fl.D)->required();
  rg->add_option("--X", fl.X)->required();
  rg->add_option("--sigma", fl.sigma)->check(CLI::PositiveNumber);
  rg->add_option("--e", fl.e, "principal-genus exponent (computed if omitted)");
  add_common(rg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    json err{{"error", e.what()}, {"kind", "config"}};
    std::cerr << err.dump() << "\n";
    return 2;
  }

  try {
    if (cg->parsed()) return cmd_classgroup(fl);
    if (zr->parsed()) return cmd_zeros(fl);
    if (ef->parsed()) return cmd_efcheck(fl);
    if (de->parsed()) return cmd_density(fl);
    if (rs->parsed()) return cmd_resonance(fl);
    if (rf->parsed()) return cmd_remfig(fl);
    if (cs->parsed()) return cmd_charsum(fl);
    if (rg->parsed()) return cmd_regime(fl);
  } catch (const std::invalid_argument& e) {
    json err{{"error", e.what()}, {"kind", "config"}};
    std::cerr << err.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    json err{{"error", e.what()}, {"kind", "runtime"}};
    std::cerr << err.dump() << "\n";
    return 2;
  }
  return 2;
}
