#include "montes/algorithm.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "montes/error.hpp"
#include "montes/idealgen.hpp"
#include "montes/kernels.hpp"

namespace montes {

std::vector<IntPolynomial> ExpansionCache::prefix(const IntPolynomial& phi, std::size_t count) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    for (const auto& e : entries_)
      if (e.parts.size() >= count && e.phi == phi)
        return std::vector<IntPolynomial>(e.parts.begin(), e.parts.begin() + static_cast<long>(count));
  }
  std::vector<IntPolynomial> parts =
      parallel_ ? kernels::phi_prefix_parallel(f_, phi, count) : kernels::phi_prefix_serial(f_, phi, count);
  std::lock_guard<std::mutex> lock(mu_);
  // a refined representative never comes back, keep the cache small
  if (entries_.size() >= 64) entries_.erase(entries_.begin());
  entries_.push_back(Entry{phi, parts});
  return parts;
}

bool is_squarefree(const IntPolynomial& f, std::uint64_t seed) {
  if (f.degree() <= 1) return true;
  IntPolynomial df = derivative(f);
  std::mt19937_64 rng(seed ^ 0x5eed5eedULL);
  for (int attempt = 0; attempt < 3; ++attempt) {
    Integer q(static_cast<unsigned long>(rng() >> 3) | (1UL << 60));
    mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
    if (mpz_divisible_p(f.lead().get_mpz_t(), q.get_mpz_t())) continue;
    Residue qq = q.get_ui();
    FFPolynomial a = reduce_mod_p(f, qq), b = reduce_mod_p(df, qq);
    if (b.degree() != df.degree()) continue;
    TowerField K(qq);
    if (K.pgcd(a, b).degree() == 0) return true;
  }
  return gcd_z(f, df).degree() == 0;
}

void validate_input(const IntPolynomial& f, const Integer& p, std::uint64_t seed) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "zero polynomial");
  if (f.degree() < 1) fail(Errc::DegreeTooSmall, "polynomial must have positive degree");
  if (!f.is_monic()) fail(Errc::NonMonic, "polynomial must be monic");
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) fail(Errc::NotPrime, p.get_str() + " is not prime");
  if (mpz_sizeinbase(p.get_mpz_t(), 2) > 62) fail(Errc::PrimeTooLarge, "prime must be below 2^62");
  if (!is_squarefree(f, seed)) fail(Errc::NotSquarefree, "polynomial is not squarefree");
}

namespace {

Residue to_residue(const Integer& p) { return static_cast<Residue>(p.get_ui()); }

// log_p of a Hadamard bound for |disc f|, plus deg f; the safety cap is four times this
std::uint64_t iteration_cap(const IntPolynomial& f, const Integer& p) {
  auto log2_norm = [](const IntPolynomial& g) {
    std::size_t bits = 0;
    for (const auto& c : g.coeffs()) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    return static_cast<double>(bits) + 0.5 * std::log2(static_cast<double>(g.size()) + 1.0);
  };
  double n = static_cast<double>(f.degree());
  double lg = (n - 1) * log2_norm(f) + n * log2_norm(derivative(f));
  double bound = lg / std::log2(p.get_d()) + 1.0;
  return 4 * (static_cast<std::uint64_t>(bound) + static_cast<std::uint64_t>(f.degree())) + 16;
}

std::int64_t product_e(const Type& t) {
  std::int64_t E = 1;
  for (unsigned k = 1; k <= t.depth(); ++k)
    if (t.level(k).closed()) E *= t.level(k).e;
  return E;
}

}  // namespace

Analysis analyze(const Type& t0, unsigned omega, ExpansionCache& cache, const Options& opt) {
  Analysis an;
  an.type = t0;
  const unsigned k = t0.depth();
  const Level& top = t0.level(k);
  const std::int64_t H = top.cutH;
  std::int64_t bump = 0;  // p-adic exponent of the perturbation, 0 = none
  for (int attempt = 0;; ++attempt) {
    if (attempt > 8) fail(Errc::InvariantViolation, "could not perturb a representative dividing f");
    auto parts = cache.prefix(an.type.pending_phi(), omega + 1);
    if (parts[0].is_zero()) {
      // phi | f: move phi by a high power of p, it stays a representative of the same type
      std::vector<IntPolynomial> tail(parts.begin() + 1, parts.end());
      std::int64_t ymax = 0;
      std::vector<IntPolynomial> shifted{IntPolynomial{}};
      shifted.insert(shifted.end(), tail.begin(), tail.end());
      for (std::size_t i = 1; i < shifted.size(); ++i)
        if (!shifted[i].is_zero())
          ymax = std::max(ymax, value(an.type, k, shifted[i]) + static_cast<std::int64_t>(i) * top.V);
      std::int64_t E = product_e(an.type);
      std::int64_t need = 2 * ymax + H + top.V + 2;
      std::int64_t N = std::max<std::int64_t>(bump * 2, (need + E - 1) / E + 1);
      bump = N;
      an.type = t0.with_pending_phi(t0.pending_phi() + IntPolynomial::constant(ipow(t0.prime(), N)));
      an.perturbed = true;
      continue;
    }
    an.newton = newton_from_expansion(an.type, k, parts, opt.parallel);
    an.cut = cut(an.newton.principal, H);
    bool ok = !an.cut.empty() && an.cut.start_x() == 0 && an.cut.end_x() == static_cast<std::int64_t>(omega);
    if (!ok) {
      if (an.perturbed) {
        an.type = t0.with_pending_phi(t0.pending_phi() + IntPolynomial::constant(ipow(t0.prime(), bump * 2)));
        bump *= 2;
        continue;
      }
      fail(Errc::InvariantViolation, "cut polygon " + an.cut.to_string() + " does not end at omega = " +
                                         std::to_string(omega) + " for " + t0.to_string());
    }
    break;
  }
  const TowerField& K = an.type.tower();
  std::int64_t weight = static_cast<std::int64_t>(K.dim(k));
  an.index = cut_index(an.newton.principal, H, weight);
  if (an.index < 0) fail(Errc::InvariantViolation, "negative index contribution");
  std::int64_t covered = 0;
  for (const Side& side : an.cut.sides) {
    FFPolynomial R = residual_poly(an.type, k, an.newton, side);
    FFFactorization fac = K.factor(R, opt.seed);
    for (auto& fq : fac.factors) {
      Branch b;
      b.side = side;
      b.psi = fq.poly;
      b.mult = fq.multiplicity;
      b.closed = an.type.closed_with(side.slope, fq.poly);
      covered += side.slope.e * fq.poly.degree() * static_cast<std::int64_t>(fq.multiplicity);
      an.branches.push_back(std::move(b));
    }
  }
  if (covered != static_cast<std::int64_t>(omega))
    fail(Errc::InvariantViolation, "distance law fails: branches cover " + std::to_string(covered) + " of " +
                                       std::to_string(omega));
  return an;
}

AlgorithmState initialize(const IntPolynomial& f, const Integer& p, const Options& opt) {
  validate_input(f, p, opt.seed);
  AlgorithmState st;
  st.f = f;
  st.p = p;
  st.opt = opt;
  st.cache = std::make_shared<ExpansionCache>(f, opt.parallel);
  st.iteration_cap = iteration_cap(f, p);
  const Residue pr = to_residue(p);
  TowerField F(pr);
  FFFactorization fac = F.factor(reduce_mod_p(f, pr), opt.seed);
  std::vector<IntPolynomial> phis;
  IntPolynomial prod{1};
  for (const auto& q : fac.factors) {
    phis.push_back(lift_residues(q.poly));
    prod = prod * pow(phis.back(), q.multiplicity);
  }
  IntPolynomial M = exact_div(f - prod, p);
  FFPolynomial Mbar = reduce_mod_p(M, pr);
  std::vector<StackEntry> pending;
  for (std::size_t i = 0; i < fac.factors.size(); ++i) {
    const auto& q = fac.factors[i];
    Type t = Type::order_zero(pr, q.poly, phis[i]);
    bool kummer = q.multiplicity == 1 || !F.prem(Mbar, q.poly).is_zero();
    if (kummer) {
      CompleteRecord rec;
      rec.type = t;
      rec.e = q.multiplicity;
      rec.f = q.poly.degree();
      rec.dedekind = true;
      rec.dedekind_mult = q.multiplicity;
      st.complete.push_back(std::move(rec));
    } else {
      pending.push_back(StackEntry{t, q.multiplicity, {}});
    }
  }
  for (auto it = pending.rbegin(); it != pending.rend(); ++it) st.stack.push_back(std::move(*it));
  return st;
}

std::int64_t represented_degree(const AlgorithmState& st) {
  std::int64_t total = 0;
  for (const auto& s : st.stack) total += s.type.pending_phi().degree() * static_cast<std::int64_t>(s.omega);
  for (const auto& c : st.complete) total += c.e * c.f;
  return total;
}

void main_loop_step(AlgorithmState& st) {
  if (st.stack.empty()) fail(Errc::InvariantViolation, "main loop on an empty stack");
  if (++st.stats.iterations > st.iteration_cap) fail(Errc::InvariantViolation, "iteration cap exceeded");
  StackEntry entry = std::move(st.stack.back());
  st.stack.pop_back();
  Analysis an = analyze(entry.type, entry.omega, *st.cache, st.opt);
  if (an.perturbed) ++st.stats.perturbations;
  st.total_index = checked_add(st.total_index, an.index);
  const std::uint64_t polygon = st.next_polygon++;
  const unsigned k = an.type.depth();
  std::vector<StackEntry> children;
  for (auto& b : an.branches) {
    std::vector<BranchTag> lineage = entry.lineage;
    lineage.push_back(BranchTag{polygon, k, b.side.slope});
    st.stats.max_order = std::max(st.stats.max_order, b.closed.order());
    if (b.mult == 1) {
      CompleteRecord rec;
      rec.e = b.closed.ram_index();
      rec.f = b.closed.residue_degree();
      rec.type = std::move(b.closed);
      rec.lineage = std::move(lineage);
      st.complete.push_back(std::move(rec));
    } else if (b.psi.degree() == 1 && b.side.slope.e == 1) {
      IntPolynomial phi = representative(b.closed);
      children.push_back(StackEntry{an.type.refined(phi, b.side.slope.h), b.mult, std::move(lineage)});
      ++st.stats.refinements;
    } else {
      IntPolynomial phi = representative(b.closed);
      children.push_back(StackEntry{b.closed.opened_with(phi), b.mult, std::move(lineage)});
    }
  }
  for (auto it = children.rbegin(); it != children.rend(); ++it) st.stack.push_back(std::move(*it));
  if (st.opt.check_invariants && represented_degree(st) != st.f.degree())
    fail(Errc::InvariantViolation, "types no longer represent all of f");
}

void record_dominators(std::vector<CompleteRecord>& primes) {
  for (std::size_t i = 0; i < primes.size(); ++i) {
    auto& rec = primes[i];
    rec.dominators.clear();
    if (rec.lineage.empty()) continue;
    const BranchTag& last = rec.lineage.back();
    for (std::size_t j = 0; j < primes.size(); ++j) {
      if (j == i) continue;
      for (const auto& tag : primes[j].lineage) {
        if (tag.polygon != last.polygon) continue;
        if (steeper(tag.slope, last.slope)) rec.dominators.push_back(Dominator{j, tag.slope});
        break;
      }
    }
  }
}

RunResult run(const IntPolynomial& f, const Integer& p, const Options& opt) {
  AlgorithmState st = initialize(f, p, opt);
  while (!st.stack.empty()) main_loop_step(st);
  if (represented_degree(st) != f.degree()) fail(Errc::InvariantViolation, "sum of e*f differs from deg f");
  RunResult res;
  res.f = f;
  res.p = p;
  res.index = st.total_index;
  res.primes = std::move(st.complete);
  res.stats = st.stats;
  record_dominators(res.primes);
  if (opt.generators) compute_generators(res, *st.cache, opt);
  return res;
}

Type representative_type(const CompleteRecord& rec, ExpansionCache& cache, const Options& opt) {
  if (rec.type.has_pending()) {
    if (rec.dedekind_mult == 1) return rec.type;
    Analysis an = analyze(rec.type, rec.dedekind_mult, cache, opt);
    if (an.branches.size() != 1 || an.branches[0].mult != 1)
      fail(Errc::InvariantViolation, "Dedekind factor does not give a single complete branch");
    const Type& t = an.branches[0].closed;
    return t.opened_with(representative(t));
  }
  return rec.type.opened_with(representative(rec.type));
}

}  // namespace montes
