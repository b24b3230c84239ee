#include "montes/kernels.hpp"

#include <omp.h>

#include "montes/error.hpp"

namespace montes::kernels {

namespace {

// expand P (deg P < n * deg phi) into n coefficients; pw[j] = phi^(2^j)
void expand_dc(const IntPolynomial& P, std::size_t n, const std::vector<IntPolynomial>& pw, IntPolynomial* out) {
  if (n == 1) {
    out[0] = P;
    return;
  }
  std::size_t j = 0;
  while ((std::size_t(2) << j) < n) ++j;
  std::size_t split = std::size_t(1) << j;
  if (P.is_zero()) {
    for (std::size_t i = 0; i < n; ++i) out[i] = IntPolynomial{};
    return;
  }
  DivMod qr = divmod(P, pw[j]);
  // small pieces are not worth a task
  bool spawn = pw[j].degree() >= 16;
#pragma omp task if (spawn) shared(pw, qr) firstprivate(out, split)
  expand_dc(qr.rem, split, pw, out);
  expand_dc(qr.quot, n - split, pw, out + split);
#pragma omp taskwait
}

}  // namespace

std::vector<IntPolynomial> phi_prefix_serial(const IntPolynomial& P, const IntPolynomial& phi, std::size_t count) {
  return phi_expand_prefix(P, phi, count);
}

std::vector<IntPolynomial> phi_prefix_parallel(const IntPolynomial& P, const IntPolynomial& phi, std::size_t count) {
  if (!phi.is_monic()) fail(Errc::NonMonicModulus, "phi must be monic");
  if (phi.degree() < 1) fail(Errc::DegreeTooSmall, "phi must have positive degree");
  std::vector<IntPolynomial> out(count);
  if (count == 0) return out;
  const long m = phi.degree();
  std::vector<IntPolynomial> pw{phi};
  while ((std::size_t(1) << pw.size()) < count) pw.push_back(pw.back() * pw.back());
  IntPolynomial src = P;
  if (P.degree() >= static_cast<long>(count) * m) {
    // drop everything at or above phi^count
    IntPolynomial top{1};
    for (std::size_t b = 0, c = count; c; ++b, c >>= 1)
      if (c & 1) top = top * (b < pw.size() ? pw[b] : pow(phi, std::size_t(1) << b));
    src = rem(P, top);
  }
#pragma omp parallel
#pragma omp single
  expand_dc(src, count, pw, out.data());
  return out;
}

NewtonData points_serial(const Type& t, unsigned k, const std::vector<IntPolynomial>& expansion) {
  return newton_from_expansion(t, k, expansion, false);
}

NewtonData points_parallel(const Type& t, unsigned k, const std::vector<IntPolynomial>& expansion) {
  return newton_from_expansion(t, k, expansion, true);
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace montes::kernels
