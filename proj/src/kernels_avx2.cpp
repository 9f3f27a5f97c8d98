// Built with -mavx2 (no FMA). Only reached after a runtime CPU check.
#include <immintrin.h>

#include "cyberquote/money.hpp"
#include "kernels_impl.hpp"

namespace cyberquote::kernels {
namespace {

void layer_losses_cents(const double* dc, const double* ds, std::size_t n, LossParams p,
                        double* out) {
  const __m256d lc = _mm256_set1_pd(p.lambda_c);
  const __m256d ls = _mm256_set1_pd(p.lambda_s);
  const __m256d disc = _mm256_set1_pd(p.discount);
  const __m256d hundred = _mm256_set1_pd(100.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d c = _mm256_mul_pd(lc, _mm256_loadu_pd(dc + i));
    const __m256d s = _mm256_mul_pd(ls, _mm256_loadu_pd(ds + i));
    const __m256d loss = _mm256_div_pd(_mm256_add_pd(c, s), disc);
    const __m256d cents = _mm256_round_pd(_mm256_mul_pd(loss, hundred),
                                          _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    _mm256_storeu_pd(out + i, cents);
  }
  for (; i < n; ++i) {
    out[i] = round_to_cents((p.lambda_c * dc[i] + p.lambda_s * ds[i]) / p.discount);
  }
}

void accumulate_breach_losses(const double* loss, const double* u, double pi, std::size_t n,
                              double* acc) {
  const __m256d vpi = _mm256_set1_pd(pi);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d hit = _mm256_cmp_pd(_mm256_loadu_pd(u + i), vpi, _CMP_LT_OQ);
    const __m256d add = _mm256_and_pd(hit, _mm256_loadu_pd(loss + i));
    _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i), add));
  }
  for (; i < n; ++i) acc[i] += u[i] < pi ? loss[i] : 0.0;
}

double horizontal(__m256d v) {
  alignas(32) double a[4];
  _mm256_store_pd(a, v);
  return (a[0] + a[1]) + (a[2] + a[3]);
}

double sum(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double total = horizontal(acc);
  for (; i < n; ++i) total += x[i];
  return total;
}

double sum_sq_dev(const double* x, std::size_t n, double mean) {
  const __m256d m = _mm256_set1_pd(mean);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), m);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
  }
  double total = horizontal(acc);
  for (; i < n; ++i) {
    const double d = x[i] - mean;
    total += d * d;
  }
  return total;
}

constexpr KernelTable kAvx2{Isa::avx2, layer_losses_cents, accumulate_breach_losses, sum,
                            sum_sq_dev};

}  // namespace

namespace detail {
const KernelTable* avx2_table() noexcept { return &kAvx2; }
}  // namespace detail

}  // namespace cyberquote::kernels
