#include "cyberquote/kernels.hpp"
#include "cyberquote/money.hpp"

namespace cyberquote::kernels {
namespace {

void layer_losses_cents(const double* dc, const double* ds, std::size_t n, LossParams p,
                        double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double loss = (p.lambda_c * dc[i] + p.lambda_s * ds[i]) / p.discount;
    out[i] = round_to_cents(loss);
  }
}

void accumulate_breach_losses(const double* loss, const double* u, double pi, std::size_t n,
                              double* acc) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += u[i] < pi ? loss[i] : 0.0;
}

double sum(const double* x, std::size_t n) {
  double a[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    a[0] += x[i];
    a[1] += x[i + 1];
    a[2] += x[i + 2];
    a[3] += x[i + 3];
  }
  double total = (a[0] + a[1]) + (a[2] + a[3]);
  for (; i < n; ++i) total += x[i];
  return total;
}

double sum_sq_dev(const double* x, std::size_t n, double mean) {
  double a[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (std::size_t j = 0; j < 4; ++j) {
      const double d = x[i + j] - mean;
      a[j] += d * d;
    }
  }
  double total = (a[0] + a[1]) + (a[2] + a[3]);
  for (; i < n; ++i) {
    const double d = x[i] - mean;
    total += d * d;
  }
  return total;
}

constexpr KernelTable kScalar{Isa::scalar, layer_losses_cents, accumulate_breach_losses, sum,
                              sum_sq_dev};

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalar; }

}  // namespace cyberquote::kernels
