// pelletlab command-line front end.
//
// Exit codes: 0 = all checks pass, 1 = a check failed (mismatch or
// non-pass), 2 = usage or input error.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pelletlab/cyclosub.hpp"
#include "pelletlab/errors.hpp"
#include "pelletlab/pellet.hpp"
#include "pelletlab/protonum.hpp"
#include "pelletlab/version.hpp"

namespace {

using nlohmann::json;
using namespace pelletlab;

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_report(const std::string& path, const json& doc) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write file '" + path + "'");
  out << doc.dump(2) << "\n";
}

json base_report(const std::string& command, json config, json results, double elapsed) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tool"] = {{"name", "pelletlab"}, {"version", kVersion}};
  doc["command"] = command;
  doc["config"] = std::move(config);
  doc["results"] = std::move(results);
  doc["volatile"] = {{"elapsed_seconds", elapsed}, {"generated_at_utc", utc_now()}};
  return doc;
}

class Timer {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json gadget_json(const PeriodGadget& g, const CheckResult& parity) {
  json f_coeffs = json::array();
  for (const auto& c : g.f.coeffs()) f_coeffs.push_back(c.get_str());
  return {{"label", g.label},
          {"nu", g.n},
          {"q", g.q},
          {"generator", g.generator},
          {"subgroup", g.subgroup},
          {"f", f_coeffs},
          {"disc", g.disc.get_str()},
          {"disc_is_square", is_perfect_square(g.disc)},
          {"generator_sign", g.generator_sign()},
          {"certificates",
           {{"cyclic_shift", g.shift_certified},
            {"squarefree", g.squarefree_certified},
            {"parity", parity.passed()}}}};
}

void print_gadget(const PeriodGadget& g, const CheckResult& parity) {
  std::cout << "gadget " << g.label << ": nu = " << g.n << ", q = " << g.q
            << ", generator g = " << g.generator << "\n";
  std::cout << "  H (order " << g.subgroup.size() << "): {";
  for (std::size_t i = 0; i < g.subgroup.size(); ++i) {
    if (i) std::cout << ',';
    std::cout << g.subgroup[i];
  }
  std::cout << "}\n";
  std::cout << "  f (coefficients ascending): " << g.f.to_string() << "\n";
  std::cout << "  disc: " << g.disc.get_str() << "  ("
            << (is_perfect_square(g.disc) ? "perfect square" : "not a square") << ")\n";
  std::cout << "  certificates: cyclic shift " << (g.shift_certified ? "ok" : "FAILED")
            << ", squarefree " << (g.squarefree_certified ? "ok" : "FAILED") << ", parity "
            << (parity.passed() ? "ok" : "FAILED") << "\n";
  if (!parity.passed()) std::cout << "  parity detail: " << parity.detail << "\n";
}

struct MuArgs {
  std::string field;
  std::string modulus;
  std::string poly;
  std::string out;
};

int run_mu(const MuArgs& args) {
  Timer timer;
  auto ctx = make_field(args.field, args.modulus);
  FqPoly f = FqPoly::parse(ctx, args.poly);

  const MuValue def = mu_definition(f);       // validates monic
  const MuValue pel = mu_pellet(f);
  const FqElem disc = discriminant(f);
  const int chi = ctx->quad_char(disc);
  const bool squarefree = f.is_squarefree();

  std::cout << "pelletlab " << kVersion << " mu\n";
  std::cout << "field: " << ctx->spec().to_string() << " (q = " << ctx->q() << ")\n";
  std::cout << "poly: " << f.to_string() << " (degree " << f.degree() << ")\n";
  std::cout << "squarefree: " << (squarefree ? "yes" : "no") << "\n";
  std::cout << "disc: " << ctx->format_elem(disc) << "  chi(disc): " << chi << "\n";

  json results;
  results["degree"] = f.degree();
  results["squarefree"] = squarefree;
  results["disc"] = ctx->format_elem(disc);
  results["chi_disc"] = chi;
  results["mu_definition"] = def;
  results["mu_pellet"] = pel;

  bool consistent = (def == pel);
  if (squarefree) {
    const CycleType ct = cycle_type(f);
    const MuValue proto = mu_proto(f);
    const int fsign = frobenius_sign(f);
    std::cout << "cycle type: " << ct.to_string() << " (r = " << ct.factor_count() << ")\n";
    std::cout << "frobenius sign: " << fsign << "\n";
    std::cout << "mu (definition):              " << def << "\n";
    std::cout << "mu (discriminant/character):  " << pel << "\n";
    std::cout << "mu (frobenius sign):          " << proto << "\n";
    results["cycle_type"] = ct.to_string();
    results["frobenius_sign"] = fsign;
    results["mu_proto"] = proto;
    consistent = consistent && (def == proto);
  } else {
    std::cout << "cycle type: n/a (not squarefree)\n";
    std::cout << "mu (definition):              " << def << "\n";
    std::cout << "mu (discriminant/character):  " << pel << "\n";
    std::cout << "mu (frobenius sign):          n/a (not squarefree)\n";
    results["cycle_type"] = nullptr;
    results["frobenius_sign"] = nullptr;
    results["mu_proto"] = nullptr;
  }
  results["consistent"] = consistent;

  const double elapsed = timer.seconds();
  std::cout << "consistent: " << (consistent ? "yes" : "NO") << "\n";
  std::cout << "elapsed: " << elapsed << " s\n";

  json config = {{"field", args.field},
                 {"modulus", args.modulus.empty() ? json(nullptr) : json(args.modulus)},
                 {"poly", args.poly},
                 {"seed", 0}};
  write_report(args.out, base_report("mu", config, results, elapsed));
  return consistent ? 0 : 1;
}

struct SweepArgs {
  std::string field;
  std::string modulus;
  unsigned max_deg = 0;
  std::string checks;
  std::string out;
  unsigned jobs = 1;
  std::uint64_t budget = 10'000'000;
  std::size_t mismatch_cap = 100;
  std::uint64_t seed = 0;
};

int run_sweep(const SweepArgs& args) {
  auto ctx = make_field(args.field, args.modulus);
  SweepOptions options;
  options.max_deg = args.max_deg;
  options.jobs = args.jobs;
  options.budget = args.budget;
  options.mismatch_cap = args.mismatch_cap;
  options.seed = args.seed;
  if (!args.checks.empty()) {
    options.checks.clear();
    std::stringstream ss{args.checks};
    std::string piece;
    while (std::getline(ss, piece, ',')) options.checks.insert(sweep_check_from_name(piece));
    if (options.checks.empty()) throw DomainError("--checks must name at least one check");
  }

  const SweepReport report = sweep(ctx, options);

  std::cout << "pelletlab " << kVersion << " sweep\n";
  std::cout << "field: " << ctx->spec().to_string() << " (q = " << ctx->q()
            << "), max degree " << options.max_deg << ", jobs " << options.jobs << ", seed "
            << options.seed << "\n";
  std::cout << "checks:";
  for (auto c : options.checks) std::cout << ' ' << sweep_check_name(c);
  std::cout << "\n";
  std::cout << "deg      total squarefree    mu=-1     mu=0    mu=+1  mertens\n";
  for (std::size_t n = 0; n < report.per_degree.size(); ++n) {
    const auto& t = report.per_degree[n];
    std::cout << n << "  " << t.total << "  " << t.squarefree << "  " << t.mu_minus << "  "
              << t.mu_zero << "  " << t.mu_plus << "  " << t.mertens << "\n";
  }
  std::cout << "polynomials checked: " << report.polynomials_checked << "\n";
  std::cout << "mismatches: " << report.mismatches.size()
            << (report.mismatches_truncated ? " (truncated)" : "") << "\n";
  for (const auto& m : report.mismatches) {
    std::cout << "  MISMATCH [" << m.check << "] deg " << m.degree << " poly " << m.poly
              << ": " << m.lhs << " vs " << m.rhs << "\n";
  }
  std::cout << "elapsed: " << report.elapsed_seconds << " s\n";
  std::cout << (report.passed() ? "all checks passed" : "CHECKS FAILED") << "\n";

  if (!args.out.empty()) {
    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw DomainError("cannot write file '" + args.out + "'");
    out << sweep_report_to_json(report);
  }
  return report.passed() ? 0 : 1;
}

struct GadgetArgs {
  unsigned nu = 0;
  std::uint64_t q = 0;
  std::uint64_t cap = kDefaultDirichletCap;
  std::string out;
};

int run_gadget(const GadgetArgs& args) {
  Timer timer;
  const std::uint64_t q = args.q != 0 ? args.q : minimal_admissible_q(args.nu, args.cap);
  const PeriodGadget gadget = build_gadget("gadget", args.nu, q);
  const CheckResult parity = check_alt_disc(gadget);

  std::cout << "pelletlab " << kVersion << " gadget\n";
  print_gadget(gadget, parity);
  const double elapsed = timer.seconds();
  std::cout << "elapsed: " << elapsed << " s\n";

  json config = {{"nu", args.nu}, {"q", args.q == 0 ? json(nullptr) : json(args.q)}, {"seed", 0}};
  write_report(args.out, base_report("gadget", config,
                                     {{"gadget", gadget_json(gadget, parity)},
                                      {"passed", parity.passed()}},
                                     elapsed));
  return parity.passed() ? 0 : 1;
}

struct GadgetTableArgs {
  std::string spec_path;
  std::uint64_t cap = kDefaultDirichletCap;
  std::string out;
};

int run_gadget_table(const GadgetTableArgs& args) {
  Timer timer;
  const PrimeTable table = PrimeTable::from_json_text(read_file(args.spec_path));
  const auto assignments = assign_q(table, args.cap);

  std::cout << "pelletlab " << kVersion << " gadget-table\n";
  std::cout << "table: " << args.spec_path << " (" << table.size() << " primes)\n";

  bool all_pass = true;
  json gadgets_json = json::array();
  for (const auto& a : assignments) {
    const PeriodGadget gadget = build_gadget(a.label, a.nu, a.q);
    const CheckResult parity = check_alt_disc(gadget);
    print_gadget(gadget, parity);
    gadgets_json.push_back(gadget_json(gadget, parity));
    all_pass = all_pass && parity.passed();
  }
  const double elapsed = timer.seconds();
  std::cout << "elapsed: " << elapsed << " s\n";
  std::cout << (all_pass ? "all gadgets certified" : "GADGET CHECKS FAILED") << "\n";

  json config = {{"spec", args.spec_path}, {"dirichlet_cap", args.cap}, {"seed", 0}};
  write_report(args.out,
               base_report("gadget-table", config,
                           {{"gadgets", gadgets_json}, {"passed", all_pass}}, elapsed));
  return all_pass ? 0 : 1;
}

struct Theorem3Args {
  std::string table_path;
  std::string ideal_path;
  bool exhaustive = false;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t cap = kDefaultDirichletCap;
  std::string out;
};

int run_verify_theorem3(const Theorem3Args& args) {
  Timer timer;
  const PrimeTable table = PrimeTable::from_json_text(read_file(args.table_path));
  if (args.exhaustive && args.trials > 0) {
    throw DomainError("--exhaustive and --trials are mutually exclusive");
  }
  const GadgetSet gadgets = build_gadgets(table, args.cap);

  std::cout << "pelletlab " << kVersion << " verify-theorem3\n";
  std::cout << "table: " << args.table_path << " (" << table.size() << " primes), seed "
            << args.seed << "\n";

  std::uint64_t verified = 0;
  std::vector<CheckResult> failures;
  std::string mode;

  auto run_one = [&](const AbstractIdeal& ideal) {
    const CheckResult r = verify_theorem3(ideal, table, gadgets);
    ++verified;
    if (!r.passed()) failures.push_back(r);
  };

  if (!args.ideal_path.empty()) {
    mode = "single";
    run_one(AbstractIdeal::from_json_text(read_file(args.ideal_path)));
  } else if (args.exhaustive || (args.trials == 0 && table.size() <= 12)) {
    mode = "exhaustive";
    if (table.size() > 20) {
      throw DomainError("exhaustive verification is capped at 20 primes (2^20 ideals); "
                        "use --trials");
    }
    const std::uint64_t subsets = std::uint64_t(1) << table.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      std::vector<std::pair<std::string, unsigned>> factors;
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (mask & (std::uint64_t(1) << i)) factors.emplace_back(table.entry(i).label, 1);
      }
      run_one(AbstractIdeal::from_factors(factors));
    }
  } else {
    mode = "random";
    const std::uint64_t trials = args.trials == 0 ? 1000 : args.trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
      run_one(random_ideal(table, derive_seed(args.seed, t), table.size(), true));
    }
  }

  const double elapsed = timer.seconds();
  std::cout << "mode: " << mode << ", squarefree ideals verified: " << verified << "\n";
  for (const auto& f : failures) std::cout << "  FAILED: " << f.detail << "\n";
  std::cout << "elapsed: " << elapsed << " s\n";
  std::cout << (failures.empty() ? "identity holds on every ideal tested"
                                 : "IDENTITY FAILED")
            << "\n";

  json fail_json = json::array();
  for (const auto& f : failures) fail_json.push_back(f.detail);
  json config = {{"table", args.table_path},
                 {"ideal", args.ideal_path.empty() ? json(nullptr) : json(args.ideal_path)},
                 {"mode", mode},
                 {"trials", args.trials},
                 {"seed", args.seed},
                 {"dirichlet_cap", args.cap}};
  write_report(args.out, base_report("verify-theorem3", config,
                                     {{"verified", verified},
                                      {"failures", fail_json},
                                      {"passed", failures.empty()}},
                                     elapsed));
  return failures.empty() ? 0 : 1;
}

struct DisjointnessArgs {
  std::string table_path;
  double tolerance = 1e-9;
  unsigned precision = 53;
  std::uint64_t cap = kDefaultDirichletCap;
  std::string out;
};

int run_disjointness(const DisjointnessArgs& args) {
  Timer timer;
  const PrimeTable table = PrimeTable::from_json_text(read_file(args.table_path));
  const GadgetSet gadgets = build_gadgets(table, args.cap);

  std::cout << "pelletlab " << kVersion << " disjointness\n";
  std::cout << "table: " << args.table_path << " (" << table.size() << " primes), tolerance "
            << args.tolerance << ", precision " << args.precision << " bits\n";

  std::vector<const PeriodGadget*> list;
  for (const auto& e : table.entries()) list.push_back(&gadgets.at(e.label));

  bool all_pass = true;
  json pairs = json::array();
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      const CheckResult r =
          disjointness_evidence(*list[i], *list[j], args.precision, args.tolerance);
      const char* verdict = r.passed() ? "pass"
                            : r.status == CheckResult::Status::inconclusive ? "inconclusive"
                                                                            : "fail";
      std::cout << "  " << list[i]->label << " x " << list[j]->label << ": " << verdict
                << " (" << r.detail << ")\n";
      pairs.push_back({{"a", list[i]->label},
                       {"b", list[j]->label},
                       {"verdict", verdict},
                       {"detail", r.detail}});
      all_pass = all_pass && r.passed();
    }
  }

  const double elapsed = timer.seconds();
  std::cout << "elapsed: " << elapsed << " s\n";
  std::cout << (all_pass ? "all pairs separated" : "NOT ALL PAIRS SEPARATED") << "\n";

  json config = {{"table", args.table_path},
                 {"tolerance", args.tolerance},
                 {"precision_bits", args.precision},
                 {"dirichlet_cap", args.cap},
                 {"seed", 0}};
  write_report(args.out, base_report("disjointness", config,
                                     {{"pairs", pairs}, {"passed", all_pass}}, elapsed));
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moebius function over F_q[T] three ways, and exact Gaussian-period "
               "subfield gadgets for its number-field analogue"};
  app.set_version_flag("--version", std::string("pelletlab ") + kVersion);
  app.require_subcommand(1);

  MuArgs mu_args;
  auto* mu_cmd = app.add_subcommand("mu", "Compute mu(f) by every applicable formula");
  mu_cmd->add_option("--field", mu_args.field, "Field spec: p or p^k")->required();
  mu_cmd->add_option("--modulus", mu_args.modulus,
                     "Modulus coefficients c0,...,ck (ascending, decimal)");
  mu_cmd->add_option("--poly", mu_args.poly, "Polynomial, coefficients ascending")->required();
  mu_cmd->add_option("--out", mu_args.out, "Write the JSON report here");

  SweepArgs sweep_args;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Exhaustively check the mu identities up to a degree");
  sweep_cmd->add_option("--field", sweep_args.field, "Field spec: p or p^k")->required();
  sweep_cmd->add_option("--modulus", sweep_args.modulus,
                        "Modulus coefficients c0,...,ck (ascending, decimal)");
  sweep_cmd->add_option("--max-deg", sweep_args.max_deg, "Largest degree to enumerate")
      ->required();
  sweep_cmd->add_option("--checks", sweep_args.checks,
                        "Comma list of pellet,proto,corollary,disc_vanish (default: all)");
  sweep_cmd->add_option("--out", sweep_args.out, "Write the JSON report here");
  sweep_cmd->add_option("--jobs", sweep_args.jobs, "Worker threads (default 1)");
  sweep_cmd->add_option("--budget", sweep_args.budget,
                        "Refuse sweeps larger than this many polynomials");
  sweep_cmd->add_option("--mismatch-cap", sweep_args.mismatch_cap,
                        "Stop collecting mismatches beyond this many (default 100)");
  sweep_cmd->add_option("--seed", sweep_args.seed, "Seed echoed into the report");

  GadgetArgs gadget_args;
  auto* gadget_cmd =
      app.add_subcommand("gadget", "Build one Gaussian-period gadget and certify it");
  gadget_cmd->add_option("--nu", gadget_args.nu, "Additive value nu (>= 1)")->required();
  gadget_cmd->add_option("--q", gadget_args.q,
                         "Prime q = 1 mod nu (default: minimal admissible)");
  gadget_cmd->add_option("--dirichlet-cap", gadget_args.cap, "Prime search bound");
  gadget_cmd->add_option("--out", gadget_args.out, "Write the JSON report here");

  GadgetTableArgs table_args;
  auto* table_cmd =
      app.add_subcommand("gadget-table", "Assign primes and build gadgets for a prime table");
  table_cmd->add_option("--spec", table_args.spec_path, "Prime-table JSON document")
      ->required();
  table_cmd->add_option("--dirichlet-cap", table_args.cap, "Prime search bound");
  table_cmd->add_option("--out", table_args.out, "Write the JSON report here");

  Theorem3Args thm_args;
  auto* thm_cmd = app.add_subcommand(
      "verify-theorem3", "Check mu_A(I) = (-1)^nu(I) * factorwise sign over a prime table");
  thm_cmd->add_option("--table", thm_args.table_path, "Prime-table JSON document")->required();
  thm_cmd->add_option("--ideal", thm_args.ideal_path,
                      "Verify a single ideal JSON document instead");
  thm_cmd->add_flag("--exhaustive", thm_args.exhaustive,
                    "Enumerate all squarefree ideals (default for <= 12 primes)");
  thm_cmd->add_option("--trials", thm_args.trials, "Number of random squarefree ideals");
  thm_cmd->add_option("--seed", thm_args.seed, "Master seed for the random trials");
  thm_cmd->add_option("--dirichlet-cap", thm_args.cap, "Prime search bound");
  thm_cmd->add_option("--out", thm_args.out, "Write the JSON report here");

  DisjointnessArgs dis_args;
  auto* dis_cmd = app.add_subcommand(
      "disjointness", "Numerical linear-disjointness evidence for all gadget pairs");
  dis_cmd->add_option("--table", dis_args.table_path, "Prime-table JSON document")->required();
  dis_cmd->add_option("--tolerance", dis_args.tolerance,
                      "Minimum pairwise gap between conjugate sums (default 1e-9)");
  dis_cmd->add_option("--precision", dis_args.precision,
                      "Working precision in bits (default 53)");
  dis_cmd->add_option("--dirichlet-cap", dis_args.cap, "Prime search bound");
  dis_cmd->add_option("--out", dis_args.out, "Write the JSON report here");

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(mu_cmd)) return run_mu(mu_args);
    if (app.got_subcommand(sweep_cmd)) return run_sweep(sweep_args);
    if (app.got_subcommand(gadget_cmd)) return run_gadget(gadget_args);
    if (app.got_subcommand(table_cmd)) return run_gadget_table(table_args);
    if (app.got_subcommand(thm_cmd)) return run_verify_theorem3(thm_args);
    if (app.got_subcommand(dis_cmd)) return run_disjointness(dis_args);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
