// montes: prime decomposition, index and generators from the command line.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "montes/corpus.hpp"
#include "montes/error.hpp"
#include "montes/parse.hpp"
#include "montes/report.hpp"
#include "montes/suites.hpp"

using namespace montes;

namespace {

constexpr int kOk = 0, kInvalid = 2, kInternal = 3;

bool input_error(Errc c) {
  switch (c) {
    case Errc::ParseError:
    case Errc::NonMonic:
    case Errc::NotSquarefree:
    case Errc::NotPrime:
    case Errc::PrimeTooLarge:
    case Errc::DegreeTooSmall:
    case Errc::ZeroPolynomial:
    case Errc::NotApplicable:
      return true;
    default:
      return false;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Integer parse_prime(const std::string& s) {
  Integer p;
  if (s.empty() || p.set_str(s, 10) != 0) fail(Errc::ParseError, "prime is not a decimal integer: " + s);
  return p;
}

std::string emit(const IntPolynomial& f, const std::string& format) {
  return format == "coeffs" ? format_coeffs(f) : f.to_string() + "\n";
}

std::vector<corpus::LevelSpec> parse_levels(const std::string& s) {
  std::vector<corpus::LevelSpec> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    corpus::LevelSpec L;
    char c1 = 0, c2 = 0;
    std::istringstream is(item);
    if (!(is >> L.e >> c1 >> L.f >> c2 >> L.h) || c1 != ',' || c2 != ',')
      fail(Errc::ParseError, "level spec must be e,f,h: " + item);
    out.push_back(L);
  }
  return out;
}

struct BenchCase {
  std::string name;
  IntPolynomial f;
  long p;
};

std::vector<BenchCase> bench_cases() {
  std::vector<BenchCase> v;
  v.push_back({"sextic-pairs", corpus::sextic_pairs_example(), 2});
  v.push_back({"cubic-power", corpus::cubic_power_example(), 2});
  for (unsigned l = 1; l <= 4; ++l) v.push_back({"tower-" + std::to_string(l), corpus::tower(l), 2});
  for (long p : {7L, 13L, 1009L}) v.push_back({"quartic-" + std::to_string(p), corpus::quartic_refine(p, 500), p});
  v.push_back({"multi-branch-1", corpus::multi_branch(1), 13});
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime decomposition, p-index and ideal generators via higher-order Newton polygons"};
  app.require_subcommand(1);

  // factor
  auto* fac = app.add_subcommand("factor", "decompose p in Q[x]/(f)");
  std::string prime_s, poly_expr, poly_file, format = "expr";
  bool want_gen = false, want_disc = false, want_json = false, parallel = false, timings = false;
  std::uint64_t seed = 0;
  fac->add_option("--prime,-p", prime_s, "the prime p")->required();
  auto* o_poly = fac->add_option("--poly", poly_expr, "polynomial expression in x");
  auto* o_file = fac->add_option("--poly-file", poly_file, "file holding the polynomial");
  o_poly->excludes(o_file);
  fac->add_flag("--generators", want_gen, "compute two-element generators");
  fac->add_flag("--disc", want_disc, "also compute v_p(disc f)");
  fac->add_flag("--json", want_json, "JSON output");
  fac->add_option("--seed", seed, "seed for every randomized choice");
  fac->add_flag("--parallel", parallel, "OpenMP kernels");
  fac->add_option("--format", format, "input format")->check(CLI::IsMember({"expr", "coeffs"}));
  fac->add_flag("--timings", timings, "report wall-clock timings");

  // corpus
  auto* cor = app.add_subcommand("corpus", "print a polynomial from a family with known answer");
  std::string family, levels_s, out_format = "expr";
  unsigned level = 1, j = 1;
  unsigned long k = 1, N = 5000;
  long cp = 2, f0 = 1;
  bool random = false;
  cor->add_option("--family", family, "tower | quartic-refine | multi-branch")
      ->required()
      ->check(CLI::IsMember({"tower", "quartic-refine", "multi-branch"}));
  cor->add_option("--level", level, "tower level (fixed chain)");
  cor->add_flag("--random", random, "random tower with prescribed levels");
  cor->add_option("--levels", levels_s, "e,f,h;e,f,h;... for a random tower");
  cor->add_option("--f0", f0, "residual degree at order zero for a random tower");
  cor->add_option("--prime,-p", cp, "prime");
  cor->add_option("--k", k, "quartic-refine exponent");
  cor->add_option("--j", j, "multi-branch factor count");
  cor->add_option("--N", N, "multi-branch tail exponent");
  cor->add_option("--seed", seed, "seed");
  cor->add_option("--format", out_format, "output format")->check(CLI::IsMember({"expr", "coeffs"}));

  // bench
  auto* ben = app.add_subcommand("bench", "time the reference inputs, CSV on stdout");
  std::vector<std::string> cases;
  bool cases_given = false, list_cases = false;
  unsigned repeat = 1;
  ben->add_option("--cases", cases, "case names (default: all); empty string for none")->delimiter(',');
  ben->add_option("--repeat", repeat, "runs per case, timings are averaged")->check(CLI::PositiveNumber);
  ben->add_flag("--parallel", parallel, "OpenMP kernels");
  ben->add_flag("--list", list_cases, "list case names");

  // verify (developer use)
  auto* ver = app.add_subcommand("verify", "");
  ver->group("");
  std::string suite = "all";
  std::size_t count = 100;
  ver->add_option("--suite", suite, "suite name or all");
  ver->add_option("--count", count, "instances per suite");
  ver->add_option("--seed", seed, "seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (*fac) {
      if (poly_expr.empty() && poly_file.empty()) fail(Errc::ParseError, "one of --poly or --poly-file is required");
      std::string text = poly_file.empty() ? poly_expr : read_file(poly_file);
      FactorRequest req;
      req.poly = format == "coeffs" ? parse_coeffs(text) : parse_poly(text);
      req.p = parse_prime(prime_s);
      req.generators = want_gen;
      req.disc = want_disc;
      req.timings = timings;
      req.opt.seed = seed;
      req.opt.parallel = parallel;
      Report rep = factor(req);
      std::cout << (want_json ? to_json(rep, want_disc) + "\n" : to_text(rep, want_disc));
      return kOk;
    }
    if (*cor) {
      if (cp < 2 || mpz_probab_prime_p(Integer(cp).get_mpz_t(), 40) == 0)
        fail(Errc::NotPrime, std::to_string(cp) + " is not prime");
      IntPolynomial f;
      if (family == "tower") {
        if (random) {
          auto rt = corpus::random_tower(static_cast<Residue>(cp), f0, parse_levels(levels_s), seed);
          std::cerr << "expect one prime with e=" << rt.e << " f=" << rt.f << " at p=" << cp << "\n";
          f = rt.poly;
        } else {
          f = corpus::tower(level);
        }
      } else if (family == "quartic-refine") {
        f = corpus::quartic_refine(cp, k);
      } else {
        f = corpus::multi_branch(j, N);
      }
      std::cout << emit(f, out_format);
      return kOk;
    }
    if (*ben) {
      cases_given = ben->count("--cases") > 0;
      auto all = bench_cases();
      if (list_cases) {
        for (const auto& c : all) std::cout << c.name << "\n";
        return kOk;
      }
      for (const auto& name : cases) {
        if (name.empty()) continue;
        bool known = std::any_of(all.begin(), all.end(), [&](const BenchCase& c) { return c.name == name; });
        if (!known) fail(Errc::NotApplicable, "unknown bench case " + name);
      }
      std::cout << "case,degree,prime,index,primes,repeat,mean_ms\n";
      for (const auto& c : all) {
        bool selected = !cases_given || std::find(cases.begin(), cases.end(), c.name) != cases.end();
        if (!selected) continue;
        Options opt;
        opt.parallel = parallel;
        double total = 0;
        RunResult r;
        for (unsigned i = 0; i < repeat; ++i) {
          auto t0 = std::chrono::steady_clock::now();
          r = run(c.f, c.p, opt);
          total += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        }
        std::cout << c.name << "," << c.f.degree() << "," << c.p << "," << r.index << "," << r.primes.size() << ","
                  << repeat << "," << total / repeat << "\n";
      }
      return kOk;
    }
    if (*ver) {
      std::vector<std::string> names = suite == "all" ? verify::suite_names() : std::vector<std::string>{suite};
      bool ok = true;
      for (const auto& n : names) {
        auto r = verify::run_suite(n, count, seed);
        std::cout << r.name << ": " << r.checked << " checked, " << r.failed << " failed, " << r.skipped
                  << " skipped" << (r.first_failure.empty() ? "" : "; first failure: " + r.first_failure) << "\n";
        ok = ok && r.ok();
      }
      return ok ? kOk : kInternal;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error(e.code()) ? kInvalid : kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
