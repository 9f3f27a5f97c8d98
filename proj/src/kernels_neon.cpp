#include <arm_neon.h>

#include "cyberquote/money.hpp"
#include "kernels_impl.hpp"

namespace cyberquote::kernels {
namespace {

void layer_losses_cents(const double* dc, const double* ds, std::size_t n, LossParams p,
                        double* out) {
  const float64x2_t lc = vdupq_n_f64(p.lambda_c);
  const float64x2_t ls = vdupq_n_f64(p.lambda_s);
  const float64x2_t disc = vdupq_n_f64(p.discount);
  const float64x2_t hundred = vdupq_n_f64(100.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t c = vmulq_f64(lc, vld1q_f64(dc + i));
    const float64x2_t s = vmulq_f64(ls, vld1q_f64(ds + i));
    const float64x2_t loss = vdivq_f64(vaddq_f64(c, s), disc);
    vst1q_f64(out + i, vrndnq_f64(vmulq_f64(loss, hundred)));
  }
  for (; i < n; ++i) {
    out[i] = round_to_cents((p.lambda_c * dc[i] + p.lambda_s * ds[i]) / p.discount);
  }
}

void accumulate_breach_losses(const double* loss, const double* u, double pi, std::size_t n,
                              double* acc) {
  const float64x2_t vpi = vdupq_n_f64(pi);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t hit = vcltq_f64(vld1q_f64(u + i), vpi);
    const float64x2_t add = vreinterpretq_f64_u64(
        vandq_u64(hit, vreinterpretq_u64_f64(vld1q_f64(loss + i))));
    vst1q_f64(acc + i, vaddq_f64(vld1q_f64(acc + i), add));
  }
  for (; i < n; ++i) acc[i] += u[i] < pi ? loss[i] : 0.0;
}

// lo holds accumulators {0,1}, hi holds {2,3}.
double sum(const double* x, std::size_t n) {
  float64x2_t lo = vdupq_n_f64(0.0), hi = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    lo = vaddq_f64(lo, vld1q_f64(x + i));
    hi = vaddq_f64(hi, vld1q_f64(x + i + 2));
  }
  double total = (vgetq_lane_f64(lo, 0) + vgetq_lane_f64(lo, 1)) +
                 (vgetq_lane_f64(hi, 0) + vgetq_lane_f64(hi, 1));
  for (; i < n; ++i) total += x[i];
  return total;
}

double sum_sq_dev(const double* x, std::size_t n, double mean) {
  const float64x2_t m = vdupq_n_f64(mean);
  float64x2_t lo = vdupq_n_f64(0.0), hi = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const float64x2_t d0 = vsubq_f64(vld1q_f64(x + i), m);
    const float64x2_t d1 = vsubq_f64(vld1q_f64(x + i + 2), m);
    lo = vaddq_f64(lo, vmulq_f64(d0, d0));
    hi = vaddq_f64(hi, vmulq_f64(d1, d1));
  }
  double total = (vgetq_lane_f64(lo, 0) + vgetq_lane_f64(lo, 1)) +
                 (vgetq_lane_f64(hi, 0) + vgetq_lane_f64(hi, 1));
  for (; i < n; ++i) {
    const double d = x[i] - mean;
    total += d * d;
  }
  return total;
}

constexpr KernelTable kNeon{Isa::neon, layer_losses_cents, accumulate_breach_losses, sum,
                            sum_sq_dev};

}  // namespace

namespace detail {
const KernelTable* neon_table() noexcept { return &kNeon; }
}  // namespace detail

}  // namespace cyberquote::kernels
