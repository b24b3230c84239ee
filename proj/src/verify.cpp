#include "montes/verify.hpp"

#include <algorithm>

#include "montes/error.hpp"

namespace montes::verify {

namespace {

constexpr std::int64_t kMaxWidth = 64;
constexpr std::int64_t kMaxHeight = 1 << 14;

// y <= N(x) for x inside the polygon's abscissa range
bool on_or_below(const PrincipalPolygon& n, std::int64_t x, std::int64_t y) {
  for (const Side& s : n.sides) {
    if (x < s.start.x || x > s.end.x) continue;
    return y * s.E <= s.start.y * s.E - s.H * (x - s.start.x);
  }
  return false;
}

void check_size(const PrincipalPolygon& n) {
  if (n.empty()) return;
  if (n.end_x() - n.start_x() > kMaxWidth) fail(Errc::OracleTooLarge, "polygon wider than 64");
  if (n.sides.front().start.y - n.sides.back().end.y > kMaxHeight) fail(Errc::OracleTooLarge, "polygon too tall");
}

// small dense polynomials over F_p, constant first, trimmed
using Poly = std::vector<std::uint64_t>;

struct Fp {
  std::uint64_t p;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return a + b >= p ? a + b - p : a + b; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint64_t inv(std::uint64_t a) const {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  static void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  Poly sub(Poly a, const Poly& b) const {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = sub(a[i], b[i]);
    trim(a);
    return a;
  }
  Poly mul(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
    trim(r);
    return r;
  }
  std::pair<Poly, Poly> divmod(Poly a, const Poly& b) const {
    std::uint64_t li = inv(b.back());
    if (a.size() < b.size()) return {{}, a};
    const long n = static_cast<long>(a.size()), m = static_cast<long>(b.size());
    Poly q(static_cast<std::size_t>(n - m + 1), 0);
    for (long i = n - 1; i >= m - 1; --i) {
      std::uint64_t c = mul(a[i], li);
      q[i - m + 1] = c;
      for (long j = 0; j < m; ++j) a[i - m + 1 + j] = sub(a[i - m + 1 + j], mul(c, b[j]));
    }
    trim(a);
    trim(q);
    return {q, a};
  }
  Poly monic(Poly a) const {
    if (a.empty()) return a;
    std::uint64_t li = inv(a.back());
    for (auto& c : a) c = mul(c, li);
    return a;
  }
  Poly gcd(Poly a, Poly b) const {
    while (!b.empty()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  Poly powmod(Poly base, std::uint64_t e, const Poly& m) const {
    Poly r{1};
    base = divmod(base, m).second;
    while (e) {
      if (e & 1) r = divmod(mul(r, base), m).second;
      base = divmod(mul(base, base), m).second;
      e >>= 1;
    }
    return r;
  }
  Poly reduce(const IntPolynomial& P) const {
    Poly r;
    Integer q(static_cast<unsigned long>(p));
    for (const auto& c : P.coeffs()) {
      Integer m = c % q;
      if (m < 0) m += q;
      r.push_back(m.get_ui());
    }
    trim(r);
    return r;
  }
};

long deg(const Poly& a) { return static_cast<long>(a.size()) - 1; }

IntPolynomial lift(const Poly& a) {
  std::vector<Integer> c;
  for (auto v : a) c.emplace_back(static_cast<unsigned long>(v));
  return IntPolynomial(std::move(c));
}

}  // namespace

std::int64_t lattice_index_oracle(const PrincipalPolygon& n) {
  if (n.empty()) return 0;
  check_size(n);
  const std::int64_t x0 = n.start_x(), x1 = n.end_x();
  const std::int64_t y1 = n.sides.back().end.y, y0 = n.sides.front().start.y;
  std::int64_t count = 0;
  for (std::int64_t x = x0 + 1; x <= x1; ++x)
    for (std::int64_t y = y1 + 1; y <= y0; ++y)
      if (on_or_below(n, x, y)) ++count;
  return count;
}

std::int64_t lattice_cut_index_oracle(const PrincipalPolygon& n, std::int64_t h, std::int64_t weight) {
  if (n.empty()) return 0;
  check_size(n);
  // last vertex of the part steeper than -h
  PPoint last = n.sides.front().start;
  for (const Side& s : n.sides) {
    if (s.H <= h * s.E) break;
    last = s.end;
  }
  const std::int64_t x0 = n.start_x();
  const std::int64_t y0 = n.sides.front().start.y;
  std::int64_t count = 0;
  for (std::int64_t x = x0 + 1; x <= last.x; ++x)
    for (std::int64_t y = last.y + h * (last.x - x) + 1; y <= y0; ++y)
      if (on_or_below(n, x, y)) ++count;
  return weight * count;
}

std::optional<std::vector<EF>> dedekind_oracle(const IntPolynomial& f, const Integer& p) {
  if (!f.is_monic() || f.degree() < 1) fail(Errc::NonMonic, "dedekind oracle needs a monic polynomial");
  if (mpz_sizeinbase(p.get_mpz_t(), 2) > 62) fail(Errc::PrimeTooLarge, "prime too large");
  const Fp F{p.get_ui()};
  const Poly fbar = F.reduce(f);
  const Poly x{0, 1};
  Poly S = fbar, rad{1};
  Poly xq = Poly{0, 1};
  std::vector<EF> out;
  for (long d = 1; deg(S) > 0; ++d) {
    xq = F.powmod(xq, F.p, fbar);
    Poly T = F.gcd(S, F.divmod(F.sub(xq, x), S).second);
    if (deg(T) <= 0) continue;
    rad = F.mul(rad, T);
    Poly G = T;
    for (std::int64_t k = 1; deg(G) > 0; ++k) {
      S = F.divmod(S, G).first;
      Poly G2 = F.gcd(S, G);
      for (long c = 0; c < (deg(G) - std::max(deg(G2), 0L)) / d; ++c) out.push_back(EF{k, d});
      G = G2;
    }
  }
  Poly hbar = F.divmod(fbar, rad).first;
  IntPolynomial M = exact_div(f - lift(rad) * lift(hbar), p);
  Poly D = F.gcd(F.gcd(F.reduce(M), rad), hbar);
  if (deg(D) > 0) return std::nullopt;
  std::sort(out.begin(), out.end());
  return out;
}

Integer sylvester_discriminant(const IntPolynomial& f) {
  const long n = f.degree();
  if (n < 1) fail(Errc::DegreeTooSmall, "discriminant of a constant");
  if (n > 8) fail(Errc::OracleTooLarge, "Sylvester oracle limited to degree 8");
  if (n == 1) return 1;
  IntPolynomial g = derivative(f);
  const long m = n - 1, N = n + m;
  std::vector<std::vector<Integer>> A(N, std::vector<Integer>(N, 0));
  for (long r = 0; r < m; ++r)
    for (long j = 0; j <= n; ++j) A[r][r + j] = f[n - j];
  for (long r = 0; r < n; ++r)
    for (long j = 0; j <= m; ++j) A[m + r][r + j] = g[m - j];
  // Bareiss
  Integer prev = 1;
  int sign = 1;
  for (long k = 0; k < N - 1; ++k) {
    if (A[k][k] == 0) {
      long s = k + 1;
      while (s < N && A[s][k] == 0) ++s;
      if (s == N) return 0;
      std::swap(A[k], A[s]);
      sign = -sign;
    }
    for (long i = k + 1; i < N; ++i) {
      for (long j = k + 1; j < N; ++j) {
        Integer v = A[i][j] * A[k][k] - A[i][k] * A[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        A[i][j] = v;
      }
      A[i][k] = 0;
    }
    prev = A[k][k];
  }
  Integer res = sign * A[N - 1][N - 1];
  Integer disc = res / f.lead();
  if ((n * (n - 1) / 2) % 2) disc = -disc;
  return disc;
}

bool tame_disc_check(const RunResult& r, std::int64_t disc_valuation) {
  std::int64_t different = 0;
  for (const auto& q : r.primes) {
    if (Integer(q.e) % r.p == 0) fail(Errc::NotApplicable, "wild ramification");
    different += (q.e - 1) * q.f;
  }
  return disc_valuation == 2 * r.index + different;
}

std::vector<RefinementInstance> refinement_instances(const IntPolynomial& f, const Integer& p, std::size_t limit) {
  Options opt;
  AlgorithmState st = initialize(f, p, opt);
  std::vector<RefinementInstance> out;
  std::vector<StackEntry> todo = st.stack;
  for (int steps = 0; !todo.empty() && out.size() < limit && steps < 500; ++steps) {
    StackEntry e = std::move(todo.back());
    todo.pop_back();
    Analysis an = analyze(e.type, e.omega, *st.cache, opt);
    for (const auto& b : an.branches) {
      if (b.mult < 2) continue;
      IntPolynomial phi = representative(b.closed);
      if (b.psi.degree() == 1 && b.side.slope.e == 1) {
        out.push_back(RefinementInstance{f, p, an.type, e.omega, b});
        todo.push_back(StackEntry{an.type.refined(phi, b.side.slope.h), b.mult, {}});
      } else {
        todo.push_back(StackEntry{b.closed.opened_with(phi), b.mult, {}});
      }
    }
  }
  if (out.size() > limit) out.resize(limit);
  return out;
}

RefinementReport refinement_equivalence_check(const RefinementInstance& in) {
  RefinementReport rep;
  auto bad = [&](const std::string& why) {
    rep.ok = false;
    rep.detail = why;
    return rep;
  };
  const Branch& b = in.branch;
  if (b.psi.degree() != 1 || b.side.slope.e != 1 || b.mult < 2)
    fail(Errc::NotApplicable, "branch is not a refinement branch");
  const std::int64_t h = b.side.slope.h;
  const unsigned r = in.parent.depth();
  IntPolynomial phi = representative(b.closed);
  Type tA = in.parent.refined(phi, h);
  Type tB = b.closed.opened_with(phi);
  ExpansionCache cache(in.f);
  Options opt;
  Analysis A = analyze(tA, b.mult, cache, opt);
  Analysis B = analyze(tB, b.mult, cache, opt);
  if (A.perturbed || B.perturbed) {
    rep.detail = "representative divides f";
    return rep;
  }
  if (!(A.cut == affine_H(B.cut, h))) return bad("polygons differ: " + A.cut.to_string() + " vs " + B.cut.to_string());
  if (A.index != B.index) return bad("index " + std::to_string(A.index) + " vs " + std::to_string(B.index));
  if (A.branches.size() != B.branches.size()) return bad("branch count");
  for (std::size_t i = 0; i < A.branches.size(); ++i) {
    const Branch& a = A.branches[i];
    const Branch& c = B.branches[i];
    if (a.side.slope.e != c.side.slope.e || a.side.slope.h != c.side.slope.h + h * c.side.slope.e)
      return bad("slopes " + a.side.slope.to_string() + " vs " + c.side.slope.to_string());
    if (a.mult != c.mult || a.psi.degree() != c.psi.degree()) return bad("residual factor data");
    if (a.closed.ram_index() != c.closed.ram_index() || a.closed.residue_degree() != c.closed.residue_degree())
      return bad("e or f differs");
  }
  // R_B(y) = eps^-s R_A(eps^-e y) with eps the twist of level r
  const TowerField& KB = B.type.tower();
  FFElement ieps = KB.inv(KB.embed(A.type.level(r).eps, r + 1));
  for (std::size_t i = 0; i < A.cut.sides.size(); ++i) {
    const Side& sa = A.cut.sides[i];
    const Side& sb = B.cut.sides[i];
    FFPolynomial RA = residual_poly(A.type, r, A.newton, sa);
    FFPolynomial RB = residual_poly(B.type, r + 1, B.newton, sb);
    if (RA.degree() != RB.degree()) return bad("residual degree");
    for (long j = 0; j <= RA.degree(); ++j) {
      FFElement want = KB.mul(KB.pow(ieps, sa.start.x + j * sa.slope.e), KB.embed(RA.coeffs[j], r + 1));
      if (want != RB.coeffs[j]) return bad("residual twist fails at side " + std::to_string(i));
    }
  }
  return rep;
}

IntPolynomial random_monic(std::mt19937_64& rng, long max_deg, long bound) {
  std::uniform_int_distribution<long> dd(1, max_deg), cd(-bound, bound);
  long n = dd(rng);
  std::vector<Integer> c;
  for (long i = 0; i < n; ++i) c.emplace_back(cd(rng));
  c.emplace_back(1);
  return IntPolynomial(std::move(c));
}

IntPolynomial random_monic_squarefree(std::mt19937_64& rng, long max_deg, long bound) {
  for (;;) {
    IntPolynomial f = random_monic(rng, max_deg, bound);
    if (f.degree() == 1 || gcd_z(f, derivative(f)).degree() == 0) return f;
  }
}

PrincipalPolygon random_polygon(std::mt19937_64& rng, std::int64_t max_x, std::int64_t max_y) {
  std::uniform_int_distribution<std::int64_t> xs(1, max_x), ys(0, max_y);
  for (;;) {
    std::vector<PPoint> pts{PPoint{0, ys(rng)}};
    int k = static_cast<int>(xs(rng) % 6) + 1;
    for (int i = 0; i < k; ++i) pts.push_back(PPoint{xs(rng), ys(rng)});
    PrincipalPolygon n = principal(lower_hull(pts));
    if (!n.empty()) return n;
  }
}

}  // namespace montes::verify
