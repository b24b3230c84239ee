#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "montes/types.hpp"

namespace montes {

struct Options {
  bool generators = false;
  bool parallel = false;
  std::uint64_t seed = 0;
  // faithful-representation check after every step
  bool check_invariants = true;
};

// one polygon a branch went through: which computation, at which level, along which side
struct BranchTag {
  std::uint64_t polygon = 0;
  unsigned level = 0;
  Slope slope;
};

struct Dominator {
  std::size_t index;  // into RunResult::primes
  Slope slope;        // side of the dominating branch at the common polygon
};

struct Generator {
  IntPolynomial num;       // alpha = num(theta) / p^p_power
  unsigned long p_power = 0;
};

struct CompleteRecord {
  // closed at its completion level; an order-zero Kummer factor keeps its open level 1 instead
  Type type;
  std::int64_t e = 1;
  std::int64_t f = 1;
  bool dedekind = false;
  unsigned dedekind_mult = 1;  // a_i of the modular factor when emitted at initialization
  std::vector<BranchTag> lineage;  // last entry is the completion polygon (empty for Kummer factors)
  std::vector<Dominator> dominators;
  std::optional<IntPolynomial> tweaked_phi;
  std::optional<Generator> generator;
};

struct StackEntry {
  Type type;  // top level open
  unsigned omega = 0;
  std::vector<BranchTag> lineage;
};

struct RunStats {
  std::uint64_t iterations = 0;
  std::uint64_t refinements = 0;
  std::uint64_t perturbations = 0;
  unsigned max_order = 0;
};

// Memoized phi-adic prefixes of one fixed polynomial.
class ExpansionCache {
 public:
  explicit ExpansionCache(IntPolynomial f, bool parallel = false) : f_(std::move(f)), parallel_(parallel) {}
  std::vector<IntPolynomial> prefix(const IntPolynomial& phi, std::size_t count);
  const IntPolynomial& poly() const { return f_; }

 private:
  struct Entry {
    IntPolynomial phi;
    std::vector<IntPolynomial> parts;
  };
  IntPolynomial f_;
  bool parallel_;
  std::mutex mu_;
  std::vector<Entry> entries_;
};

struct Branch {
  Side side;
  FFPolynomial psi;
  unsigned mult = 0;
  Type closed;  // type closed with (slope, psi)
};

struct Analysis {
  Type type;  // the analysed type, with a perturbed representative if phi divided f
  NewtonData newton;
  PrincipalPolygon cut;
  std::int64_t index = 0;
  std::vector<Branch> branches;
  bool perturbed = false;
};

// polygon + residual analysis of f for a type with an open top level
Analysis analyze(const Type& t, unsigned omega, ExpansionCache& cache, const Options& opt);

struct AlgorithmState {
  IntPolynomial f;
  Integer p;
  Options opt;
  std::vector<StackEntry> stack;
  std::vector<CompleteRecord> complete;
  std::int64_t total_index = 0;
  std::uint64_t next_polygon = 0;
  std::uint64_t iteration_cap = 0;
  RunStats stats;
  std::shared_ptr<ExpansionCache> cache;
};

struct RunResult {
  IntPolynomial f;
  Integer p;
  std::int64_t index = 0;
  std::vector<CompleteRecord> primes;
  RunStats stats;
};

// validation shared with the CLI: throws NonMonic, DegreeTooSmall, NotPrime, PrimeTooLarge, NotSquarefree
void validate_input(const IntPolynomial& f, const Integer& p, std::uint64_t seed = 0);
bool is_squarefree(const IntPolynomial& f, std::uint64_t seed = 0);

AlgorithmState initialize(const IntPolynomial& f, const Integer& p, const Options& opt = {});
void main_loop_step(AlgorithmState& st);
RunResult run(const IntPolynomial& f, const Integer& p, const Options& opt = {});

// sum of m * omega over stack and complete types
std::int64_t represented_degree(const AlgorithmState& st);

// the complete type of a record with its representative phi_{r+1} opened as the top level; for a Dedekind
// factor of multiplicity >= 2 this first builds its unique order-one branch
Type representative_type(const CompleteRecord& rec, ExpansionCache& cache, const Options& opt);

// fills CompleteRecord::dominators from the lineages
void record_dominators(std::vector<CompleteRecord>& primes);

}  // namespace montes
