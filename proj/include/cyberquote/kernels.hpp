#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

// Data-parallel inner loops of the loss simulation. Every kernel has a scalar
// reference implementation; vector variants (AVX2 on x86-64, NEON on AArch64)
// must agree with it bit for bit, which constrains them to the same operation
// order: no FMA contraction, and sums use four interleaved partial accumulators
// combined as (a0 + a1) + (a2 + a3) before the sequential tail.
namespace cyberquote::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa) noexcept;

struct LossParams {
  double lambda_c = 0.0;
  double lambda_s = 0.0;
  double discount = 1.0;  // (1 + p_bar)^gamma
};

struct KernelTable {
  Isa isa = Isa::scalar;
  // out[i] = round_half_even(100 * ((lambda_c*dc[i] + lambda_s*ds[i]) / discount))
  void (*layer_losses_cents)(const double* dc, const double* ds, std::size_t n, LossParams params,
                             double* out) = nullptr;
  // acc[i] += (u[i] < pi) ? loss[i] : 0
  void (*accumulate_breach_losses)(const double* loss, const double* u, double pi, std::size_t n,
                                   double* acc) = nullptr;
  double (*sum)(const double* x, std::size_t n) = nullptr;
  // sum of (x[i] - mean)^2
  double (*sum_sq_dev)(const double* x, std::size_t n, double mean) = nullptr;
};

const KernelTable& scalar_kernels() noexcept;

// Kernel sets compiled in and supported by the running CPU; scalar always first.
std::vector<Isa> available_isas();

// Throws DomainError when the ISA is not available on this machine.
const KernelTable& kernels_for(Isa isa);

// Best available set, chosen once at first use. The CYBERQUOTE_ISA environment
// variable ("scalar", "avx2", "neon") pins a specific set if it is available.
const KernelTable& active_kernels();

inline void layer_losses_cents(std::span<const double> dc, std::span<const double> ds,
                               LossParams params, std::span<double> out,
                               const KernelTable& k = active_kernels()) {
  k.layer_losses_cents(dc.data(), ds.data(), out.size(), params, out.data());
}

inline double sum(std::span<const double> x, const KernelTable& k = active_kernels()) {
  return k.sum(x.data(), x.size());
}

}  // namespace cyberquote::kernels
