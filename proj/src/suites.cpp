#include "montes/suites.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "montes/error.hpp"
#include "montes/idealgen.hpp"
#include "montes/verify.hpp"

namespace montes::verify {

namespace {

constexpr std::array<long, 4> kPrimes{2, 3, 5, 13};

struct Instance {
  IntPolynomial f;
  Integer p;
};

Instance random_instance(std::mt19937_64& rng, std::size_t i) {
  return Instance{random_monic_squarefree(rng, 6, 50), Integer(kPrimes[i % kPrimes.size()])};
}

void record(SuiteResult& s, bool ok, const std::string& what) {
  ++s.checked;
  if (!ok) {
    ++s.failed;
    if (s.first_failure.empty()) s.first_failure = what;
  }
}

std::string describe(const IntPolynomial& f, const Integer& p) { return f.to_string() + " at p = " + p.get_str(); }

std::vector<EF> ef_list(const RunResult& r) {
  std::vector<EF> v;
  for (const auto& q : r.primes) v.push_back(EF{q.e, q.f});
  std::sort(v.begin(), v.end());
  return v;
}

// guard a single check so one exception is one failure, not a crashed suite
void guarded(SuiteResult& s, const std::string& what, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    record(s, false, what + ": " + e.what());
  }
}

}  // namespace

GridCheck check_generators(const IntPolynomial& f, const Integer& p) {
  GridCheck g;
  Options opt;
  g.result = run(f, p, opt);
  ExpansionCache cache(f);
  GeneratorData gd = compute_generators(g.result, cache, opt);
  const auto& primes = g.result.primes;
  const std::size_t n = primes.size();
  auto bad = [&](const std::string& why) {
    if (g.ok) g.detail = why;
    g.ok = false;
  };
  g.grid.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& gen = primes[i].generator;
    if (!gen) {
      bad("missing generator");
      continue;
    }
    // alpha = num / p^k: strip and compare with p^k exactly
    FieldElement alpha = make_element(gen->num, ipow(p, gen->p_power), f);
    Integer den = alpha.den;
    while (den % p == 0) den /= p;
    if (den != 1) bad("denominator is not a power of p");
    for (std::size_t j = 0; j < n; ++j) {
      g.grid[i][j] = value_at_prime(gd.rep_types[j], alpha, cache);
      if (g.grid[i][j] != (i == j ? 1 : 0))
        bad("v_" + std::to_string(j) + "(alpha_" + std::to_string(i) + ") = " + std::to_string(g.grid[i][j]));
    }
    if (value_at_prime(gd.rep_types[i], gd.betas[i], cache) != 1) bad("v(beta) != 1 for prime " + std::to_string(i));
    for (const auto& d : primes[i].dominators) {
      std::int64_t direct = value_at_prime(gd.rep_types[d.index], gd.betas[i], cache);
      std::int64_t closed = v_q_beta(primes, i, d.index);
      if (direct != closed)
        bad("cross valuation " + std::to_string(direct) + " vs closed form " + std::to_string(closed));
    }
  }
  return g;
}

SuiteResult suite_partition(std::size_t count, std::uint64_t seed) {
  SuiteResult s;
  s.name = "partition";
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    Instance in = random_instance(rng, i);
    guarded(s, describe(in.f, in.p), [&] {
      RunResult r = run(in.f, in.p);
      std::int64_t total = 0;
      for (const auto& q : r.primes) total += q.e * q.f;
      record(s, total == in.f.degree(), describe(in.f, in.p));
    });
  }
  return s;
}

SuiteResult suite_tame(std::size_t count, std::uint64_t seed) {
  SuiteResult s;
  s.name = "tame";
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    Instance in = random_instance(rng, i);
    guarded(s, describe(in.f, in.p), [&] {
      RunResult r = run(in.f, in.p);
      std::int64_t v = static_cast<std::int64_t>(pval(sylvester_discriminant(in.f), in.p));
      try {
        record(s, tame_disc_check(r, v), describe(in.f, in.p));
      } catch (const Error& e) {
        if (e.code() != Errc::NotApplicable) throw;
        ++s.skipped;
      }
    });
  }
  return s;
}

SuiteResult suite_dedekind(std::size_t count, std::uint64_t seed) {
  SuiteResult s;
  s.name = "dedekind";
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    Instance in = random_instance(rng, i);
    guarded(s, describe(in.f, in.p), [&] {
      RunResult r = run(in.f, in.p);
      auto oracle = dedekind_oracle(in.f, in.p);
      bool ok = (r.index == 0) == oracle.has_value();
      if (ok && oracle) ok = *oracle == ef_list(r);
      record(s, ok, describe(in.f, in.p));
    });
  }
  return s;
}

SuiteResult suite_lattice(std::size_t count, std::uint64_t seed) {
  SuiteResult s;
  s.name = "lattice";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> hs(0, 6), ws(1, 4);
  for (std::size_t i = 0; i < count; ++i) {
    PrincipalPolygon n = random_polygon(rng, 12, 40);
    std::int64_t h = hs(rng), w = ws(rng);
    guarded(s, n.to_string(), [&] {
      record(s, polygon_index(n) == lattice_index_oracle(n), "index of " + n.to_string());
      record(s, cut_index(n, h, w) == lattice_cut_index_oracle(n, h, w),
             "cut index of " + n.to_string() + " at h = " + std::to_string(h));
    });
  }
  return s;
}

namespace {

// polynomials built to go through at least one refinement branch
IntPolynomial synthetic_refinement(std::mt19937_64& rng, long p) {
  std::uniform_int_distribution<long> ks(2, 6), as(-20, 20), us(1, 40), shape(0, 3);
  const IntPolynomial X = IntPolynomial::x();
  auto unit = [&] {
    long u;
    do u = us(rng);
    while (u % p == 0);
    return u;
  };
  auto quad = [&](long a) {
    long k = ks(rng);
    return pow(X - IntPolynomial{a}, 2) + IntPolynomial::constant(unit() * ipow(Integer(p), 2 * k));
  };
  switch (shape(rng)) {
    case 0:
      return quad(as(rng));
    case 1: {
      long k = ks(rng);
      return pow(X - IntPolynomial{as(rng)}, 3) + IntPolynomial::constant(unit() * ipow(Integer(p), 3 * k + 1));
    }
    case 2: {
      long a = as(rng);
      return quad(a) * quad(a + p * as(rng));
    }
    default: {
      long a = as(rng);
      return quad(a) * (X - IntPolynomial{a + p * p * as(rng)});
    }
  }
}

}  // namespace

SuiteResult suite_refinement(std::size_t count, std::uint64_t seed) {
  SuiteResult s;
  s.name = "refinement";
  std::mt19937_64 rng(seed);
  // the narrated example and the (x-2)^2 + 2^(2k) family first
  std::vector<Instance> sources;
  for (long k = 2; k <= 6; ++k)
    sources.push_back(Instance{pow(IntPolynomial{-2, 1}, 2) + IntPolynomial::constant(ipow(Integer(2), 2 * k)), 2});
  std::size_t tries = 0;
  while (s.checked < count && tries < 50 * count + 100) {
    Instance in;
    if (tries < sources.size()) {
      in = sources[tries];
    } else {
      long p = kPrimes[tries % 3];
      in = Instance{synthetic_refinement(rng, p), Integer(p)};
    }
    ++tries;
    if (gcd_z(in.f, derivative(in.f)).degree() != 0) continue;
    guarded(s, describe(in.f, in.p), [&] {
      for (const auto& inst : refinement_instances(in.f, in.p, 4)) {
        if (s.checked >= count) break;
        RefinementReport rep = refinement_equivalence_check(inst);
        if (rep.ok && !rep.detail.empty()) {
          ++s.skipped;
          continue;
        }
        record(s, rep.ok, describe(in.f, in.p) + ": " + rep.detail);
      }
    });
  }
  return s;
}

SuiteResult suite_generators(std::size_t count, std::uint64_t seed) {
  SuiteResult s;
  s.name = "generators";
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    // prefer inputs with several primes and a nonzero index
    Instance in = random_instance(rng, i);
    for (int t = 0; t < 20; ++t) {
      RunResult r = run(in.f, in.p);
      if (r.primes.size() >= 2 && r.index > 0) break;
      in = random_instance(rng, i);
    }
    guarded(s, describe(in.f, in.p), [&] {
      GridCheck g = check_generators(in.f, in.p);
      record(s, g.ok, describe(in.f, in.p) + ": " + g.detail);
    });
  }
  return s;
}

std::vector<std::string> suite_names() {
  return {"partition", "tame", "dedekind", "lattice", "refinement", "generators"};
}

SuiteResult run_suite(const std::string& name, std::size_t count, std::uint64_t seed) {
  if (name == "partition") return suite_partition(count, seed);
  if (name == "tame") return suite_tame(count, seed);
  if (name == "dedekind") return suite_dedekind(count, seed);
  if (name == "lattice") return suite_lattice(count, seed);
  if (name == "refinement") return suite_refinement(count, seed);
  if (name == "generators") return suite_generators(count, seed);
  fail(Errc::NotApplicable, "unknown suite " + name);
}

}  // namespace montes::verify
