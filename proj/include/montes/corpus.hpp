#pragma once

#include <cstdint>
#include <vector>

#include "montes/types.hpp"
#include "montes/zpoly.hpp"

// Polynomial families with known answers.
namespace montes::corpus {

// the fixed chain phi_1 .. phi_5 at p = 2 (degrees 2, 4, 16, 32, 96)
IntPolynomial tower(unsigned level);
inline constexpr unsigned kTowerLevels = 5;

struct LevelSpec {
  std::int64_t e = 1, f = 1, h = 1;
};
struct RandomTower {
  IntPolynomial poly;
  Type type;  // closed at its last level
  std::int64_t e = 1, f = 1;
};
// phi_{r+1} of a random type with the given f_0 and (e_i, f_i, h_i), moved by a random term of higher value
RandomTower random_tower(Residue p, std::int64_t f0, const std::vector<LevelSpec>& levels, std::uint64_t seed);

// (x^2+x+1)^2 - p^(2k+1): two primes (2,1) and index 2k
IntPolynomial quartic_refine(const Integer& p, unsigned long k);

// prod_{k<j} phi(x+k) + 13^N with the degree-120 phi of the multi-branch family; p = 13
IntPolynomial multi_branch_phi();
IntPolynomial multi_branch(unsigned j, unsigned long N = 5000);

// the degree-12 and degree-150 examples used as reference inputs
IntPolynomial sextic_pairs_example();
IntPolynomial cubic_power_example();

}  // namespace montes::corpus
