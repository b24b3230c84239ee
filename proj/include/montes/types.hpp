#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "montes/ffield.hpp"
#include "montes/polygon.hpp"
#include "montes/zpoly.hpp"

namespace montes {

// Level k of a type (k >= 1). phi, V and eps exist as soon as the level is opened; the slope -h/e and the
// residual factor psi are filled in when the level is closed.
struct Level {
  IntPolynomial phi;
  std::int64_t V = 0;   // v_k(phi_k)
  FFElement eps;        // in F_k; the i-th residual coefficient of order k is c(a_i) * eps^i
  std::int64_t cutH = 0;

  std::int64_t h = 0, e = 0;
  std::int64_t ell = 0, ell_prime = 0;  // ell*h - ell_prime*e = 1
  FFPolynomial psi;                     // over F_k
  unsigned f = 0;

  bool closed() const { return e != 0; }
  Slope slope() const { return Slope{h, e}; }
};

class Type {
 public:
  Type() = default;
  // order zero: psi0 over F_p, first representative phi1 (monic lift of psi0)
  static Type order_zero(Residue p, const FFPolynomial& psi0, const IntPolynomial& phi1);

  Residue p() const { return tower_.prime(); }
  const Integer& prime() const { return prime_; }
  const FFPolynomial& psi0() const { return tower_.modulus(0); }
  unsigned f0() const { return tower_.degree_at(0); }
  const TowerField& tower() const { return tower_; }

  // number of closed levels
  unsigned order() const;
  unsigned depth() const { return static_cast<unsigned>(levels_.size()); }
  bool has_pending() const { return !levels_.empty() && !levels_.back().closed(); }
  // k is 1-based
  const Level& level(unsigned k) const { return levels_.at(k - 1); }
  const IntPolynomial& pending_phi() const;
  long m(unsigned k) const { return level(k).phi.degree(); }

  // e_1 ... e_r and f_0 f_1 ... f_r over closed levels
  std::int64_t ram_index() const;
  std::int64_t residue_degree() const;

  // close the open top level with slope -h/e and residual factor psi (over F_order+1)
  Type closed_with(const Slope& s, const FFPolynomial& psi) const;
  // open the next level with the given representative; V and eps come from the recursions
  Type opened_with(const IntPolynomial& phi) const;
  // replace the representative of the open level and store the cutting slope
  Type refined(const IntPolynomial& phi_new, std::int64_t h) const;
  // same type with a different representative that keeps V; used for perturbations
  Type with_pending_phi(const IntPolynomial& phi) const;

  std::string to_string() const;

 private:
  TowerField tower_;
  Integer prime_;
  std::vector<Level> levels_;
};

// v_k(P), 1 <= k <= order+1, P != 0
std::int64_t value(const Type& t, unsigned k, const IntPolynomial& P);

struct CoeffEval {
  std::int64_t v;  // v_k(a)
  FFElement c;     // residual coefficient of the point (0, v)
};
// a != 0 with deg a < m_k; levels below k closed
CoeffEval eval_coefficient(const Type& t, unsigned k, const IntPolynomial& a);

struct NewtonData {
  std::vector<PPoint> points;     // (i, v_k(a_i phi_k^i)) for a_i != 0
  std::vector<FFElement> coeff;   // residual coefficient at each point, parallel to points
  Polygon hull;
  PrincipalPolygon principal;
};
NewtonData newton_from_expansion(const Type& t, unsigned k, const std::vector<IntPolynomial>& expansion,
                                 bool parallel = false);
NewtonData newton(const Type& t, unsigned k, const IntPolynomial& P);

// R_lambda over F_k read off the points on `side`
FFPolynomial residual_poly(const Type& t, unsigned k, const NewtonData& nd, const Side& side);
FFPolynomial residual_poly(const Type& t, unsigned k, const IntPolynomial& P, const Side& side);
// residual polynomial of the lambda_k-component of N_k(P) (level k closed); for k = 0, P/p^v(P) mod p
FFPolynomial residual_component(const Type& t, unsigned k, const IntPolynomial& P);
// ord_{psi_{k-1}} R_{k-1}(P), k >= 1
unsigned omega(const Type& t, unsigned k, const IntPolynomial& P);

// The point (i, u) of N_k with residual coefficient target (in F_k): returns a, deg a < m_k
IntPolynomial lift_point(const Type& t, unsigned k, std::int64_t i, std::int64_t u, const FFElement& target);
// P with deg P < m_{k+1}, v_{k+1}(P) = w and R_k(P) = g (coefficients over F_k, k = 0 allowed)
IntPolynomial lift_prescribed(const Type& t, unsigned k, std::int64_t w, const std::vector<FFElement>& g);

// phi_{r+1} for a type whose top level is closed (order 0: the monic residue lift of psi0)
IntPolynomial representative(const Type& t);

// invariants that are cheap to check: ell identity, degree law, V law
void check_level_invariants(const Type& t);

}  // namespace montes
