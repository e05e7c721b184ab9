#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "matgerm/germfile.hpp"
#include "matgerm/identities.hpp"
#include "matgerm/parser.hpp"
#include "matgerm/report.hpp"

namespace {

using namespace matgerm;
using report::Json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitParse = 2;
constexpr int kExitInconclusive = 3;

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Contained: return kExitOk;
    case Verdict::NotContained: return kExitNegative;
    default: return kExitInconclusive;
  }
}

struct Options {
  std::string file;
  int max_k = kDefaultMaxK;
  int max_degree = kDefaultMaxDegree;
  std::string field = "qq";
  uint64_t seed = 0;
  long cases = 200;
  bool text = false;
  // witness selection (1-based indices)
  std::string witness_type;
  int j = 1, k = 1, l = 1, gamma = 1, nu = 2, q = 1, s = 2;
};

FieldMode mode_of(const Options& o) {
  return o.field == "fp" ? FieldMode::PrimeScreen : FieldMode::Rational;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open germ file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const Json& j, const Options& o) {
  if (o.text) {
    // flat, human-oriented rendering of the same content
    std::function<void(const Json&, const std::string&)> walk =
        [&](const Json& v, const std::string& prefix) {
          if (v.is_object()) {
            for (auto it = v.begin(); it != v.end(); ++it)
              walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
          } else if (v.is_array()) {
            long i = 0;
            for (const auto& e : v) walk(e, prefix + "[" + std::to_string(i++) + "]");
          } else {
            std::cout << prefix << " = " << v.dump() << "\n";
          }
        };
    walk(j, "");
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

Json scan_tangent_power(const GermPresentation& g, const Options& o, int& exit_code) {
  DeterminacyReport last;
  for (int k = 1; k <= o.max_k; ++k) {
    last = check_tangent_contains_power(g, k, mode_of(o));
    if (last.verdict == Verdict::Contained) break;
  }
  if (last.verdict != Verdict::Contained) {
    last.verdict = Verdict::Inconclusive;
    last.note = "no containment up to the requested bound";
  }
  exit_code = verdict_exit(last.verdict);
  return report::determinacy_json(last);
}

int run(const std::string& cmd, const Options& o) {
  Timer timer;
  Json out;
  int code = kExitOk;

  if (cmd == "verify-identities") {
    out = report::run_header(cmd, "seed=" + std::to_string(o.seed) +
                                      ",cases=" + std::to_string(o.cases));
    IdentitySuiteReport rep = run_identity_suite(o.seed, o.cases);
    out["identities"] = report::identity_suite_json(rep);
    code = rep.all_passed ? kExitOk : kExitNegative;
    out["timing_ms"] = timer.ms();
    emit(out, o);
    return code;
  }

  std::string input = slurp(o.file);
  GermFile gf = parse_germ_file(input);
  const auto& names = gf.germ.varnames;
  out = report::run_header(cmd, input);

  if (cmd == "minors") {
    MinorVector f = maximal_minors(gf.germ);
    Json arr = Json::array();
    for (const auto& m : f) arr.push_back(report::poly_json(m, names));
    out["minors"] = arr;
  } else if (cmd == "cofactors") {
    Json arr = Json::array();
    for (int j = 0; j < gf.germ.p(); ++j)
      for (int k = 0; k < gf.germ.n(); ++k)
        for (int s = 0; s < gf.germ.p(); ++s) {
          if (s == j) continue;
          Json e;
          e["j"] = j + 1;
          e["k"] = k + 1;
          e["s"] = s + 1;
          e["cofactor"] = report::poly_json(cofactor(gf.germ, j, k, s), names);
          arr.push_back(std::move(e));
        }
    out["cofactors"] = arr;
  } else if (cmd == "tangent") {
    GeneratorSet gs = GeneratorSet::build(gf.germ);
    auto dump = [&](const std::vector<PolyMatrix>& v) {
      Json arr = Json::array();
      for (const auto& m : v) arr.push_back(report::matrix_json(m, names));
      return arr;
    };
    out["jacobian_generators"] = dump(gs.jgens);
    out["column_generators"] = dump(gs.cgens);
    out["row_generators"] = dump(gs.rgens);
  } else if (cmd == "witness") {
    TangentCombination c;
    if (o.witness_type == "minor-unit")
      c = witness_minor_unit(gf.germ, o.j - 1, o.k - 1, o.l - 1);
    else if (o.witness_type == "gradient-pair")
      c = witness_gradient_pair(gf.germ, o.j - 1, o.l - 1, o.gamma - 1, o.k - 1);
    else if (o.witness_type == "jacobian-minor")
      c = witness_jacobian_minor(gf.germ, o.q - 1, o.s - 1, o.gamma - 1, o.nu - 1,
                                 o.k - 1, o.l - 1);
    else
      throw std::runtime_error("unknown witness type: " + o.witness_type);
    bool ok = verify_combination(c, gf.germ);
    out["witness_type"] = o.witness_type;
    out["certificate"] = report::combination_json(c, names);
    out["verified"] = ok;
    code = ok ? kExitOk : kExitNegative;
  } else if (cmd == "determinacy") {
    DeterminacyReport rep = determinacy_degree(gf.germ, o.max_k, mode_of(o));
    out["determinacy"] = report::determinacy_json(rep);
    code = verdict_exit(rep.verdict);
  } else if (cmd == "isolated") {
    DeterminacyReport rep = isolated_singularity_check(gf.germ, o.max_k, mode_of(o));
    out["isolated"] = report::determinacy_json(rep);
    code = verdict_exit(rep.verdict);
  } else if (cmd == "tjurina") {
    TjurinaReport rep = tjurina_number(gf.germ, o.max_degree, mode_of(o));
    out["tjurina"] = report::tjurina_json(rep);
    code = rep.value ? kExitOk : kExitInconclusive;
  } else if (cmd == "homogeneity") {
    if (!gf.weights) throw std::runtime_error("germ file has no weights: line");
    HomogeneityResult h = check_weighted_homogeneous(gf.germ, *gf.weights);
    out["homogeneity"] = report::homogeneity_json(h);
    if (h.ok) out["control_spec"] = report::control_spec_json(control_spec(h.type, gf.germ));
    code = h.ok ? kExitOk : kExitNegative;
  } else if (cmd == "classify") {
    if (!gf.weights) throw std::runtime_error("germ file has no weights: line");
    if (!gf.deformation) throw std::runtime_error("germ file has no deformation: block");
    TrivialityVerdict v =
        classify_deformation(gf.germ, *gf.deformation, *gf.weights, o.max_k, mode_of(o));
    out["classification"] = report::triviality_json(v);
    FiltrationCertificate cert =
        filtration_certificate(gf.germ, *gf.deformation, *gf.weights);
    out["filtration_certificate"] = report::certificate_json(cert, names);
    code = (v.verdict == Triviality::NoConclusion) ? kExitNegative : kExitOk;
    if (!cert.identities_ok) code = kExitNegative;
  } else if (cmd == "check") {
    if (gf.weights) {
      HomogeneityResult h = check_weighted_homogeneous(gf.germ, *gf.weights);
      out["homogeneity"] = report::homogeneity_json(h);
      if (h.ok)
        out["control_spec"] = report::control_spec_json(control_spec(h.type, gf.germ));
      else
        code = std::max(code, kExitNegative);
    }
    DeterminacyReport iso = isolated_singularity_check(gf.germ, o.max_k, mode_of(o));
    out["isolated"] = report::determinacy_json(iso);
    code = std::max(code, verdict_exit(iso.verdict));
    int tp_code = kExitOk;
    out["tangent_power"] = scan_tangent_power(gf.germ, o, tp_code);
    code = std::max(code, tp_code);
    DeterminacyReport det = determinacy_degree(gf.germ, o.max_k, mode_of(o));
    out["determinacy"] = report::determinacy_json(det);
    code = std::max(code, verdict_exit(det.verdict));
    if (gf.weights && gf.deformation) {
      TrivialityVerdict v =
          classify_deformation(gf.germ, *gf.deformation, *gf.weights, o.max_k, mode_of(o));
      out["classification"] = report::triviality_json(v);
      FiltrationCertificate cert =
          filtration_certificate(gf.germ, *gf.deformation, *gf.weights);
      out["filtration_certificate"] = report::certificate_json(cert, names);
      if (v.verdict == Triviality::NoConclusion || !cert.identities_ok)
        code = std::max(code, kExitNegative);
    }
  } else {
    throw std::runtime_error("unknown command: " + cmd);
  }

  out["timing_ms"] = timer.ms();
  emit(out, o);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of n x (n+1) polynomial matrix germs"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool needs_file) {
    if (needs_file) sub->add_option("file", o.file, "germ file")->required();
    sub->add_option("--max-k", o.max_k, "scan bound for determinacy checks");
    sub->add_option("--max-degree", o.max_degree, "truncation bound for tjurina");
    sub->add_option("--field", o.field, "qq (exact) or fp (modular pre-screen)")
        ->check(CLI::IsMember({"qq", "fp"}));
    sub->add_flag("--text", o.text, "plain-text output");
    bool json_dummy = false;
    sub->add_flag("--json", json_dummy, "JSON output (default)");
  };

  std::vector<std::string> file_cmds = {"minors",  "cofactors",   "tangent",
                                        "determinacy", "isolated", "tjurina",
                                        "homogeneity", "classify", "check"};
  for (const auto& name : file_cmds) add_common(app.add_subcommand(name), true);

  CLI::App* wit = app.add_subcommand("witness", "emit a tangent-space certificate");
  add_common(wit, true);
  wit->add_option("--type", o.witness_type,
                  "minor-unit | gradient-pair | jacobian-minor")
      ->required();
  wit->add_option("--j", o.j, "minor index (1-based)");
  wit->add_option("--k", o.k, "row index (1-based)");
  wit->add_option("--l", o.l, "column index (1-based)");
  wit->add_option("--gamma", o.gamma, "variable index (1-based)");
  wit->add_option("--nu", o.nu, "second variable index (1-based)");
  wit->add_option("--q", o.q, "first minor index (1-based)");
  wit->add_option("--s", o.s, "second minor index (1-based)");

  CLI::App* ids = app.add_subcommand("verify-identities", "random identity suite");
  add_common(ids, false);
  ids->add_option("--seed", o.seed, "random seed");
  ids->add_option("--cases", o.cases, "cases per identity");

  CLI11_PARSE(app, argc, argv);
  std::string cmd = app.get_subcommands().front()->get_name();

  try {
    return run(cmd, o);
  } catch (const GermFileError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}
