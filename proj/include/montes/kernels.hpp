#pragma once

#include <cstddef>
#include <vector>

#include "montes/types.hpp"
#include "montes/zpoly.hpp"

// Hot loops with an OpenMP version and the plain serial one it is tested against.
namespace montes::kernels {

// a_0 .. a_{count-1} of the phi-adic expansion by repeated division
std::vector<IntPolynomial> phi_prefix_serial(const IntPolynomial& P, const IntPolynomial& phi, std::size_t count);
// same result; divide and conquer over phi^(2^j), halves as OpenMP tasks
std::vector<IntPolynomial> phi_prefix_parallel(const IntPolynomial& P, const IntPolynomial& phi, std::size_t count);

// points and residual coefficients of N_k for an expansion
NewtonData points_serial(const Type& t, unsigned k, const std::vector<IntPolynomial>& expansion);
NewtonData points_parallel(const Type& t, unsigned k, const std::vector<IntPolynomial>& expansion);

int max_threads();

}  // namespace montes::kernels
