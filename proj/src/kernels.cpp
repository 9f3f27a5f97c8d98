#include <cstdlib>
#include <string>

#include "cyberquote/error.hpp"
#include "kernels_impl.hpp"

namespace cyberquote::kernels {

namespace detail {
#if !defined(CYBERQUOTE_HAVE_AVX2)
const KernelTable* avx2_table() noexcept { return nullptr; }
#endif
#if !defined(CYBERQUOTE_HAVE_NEON)
const KernelTable* neon_table() noexcept { return nullptr; }
#endif
}  // namespace detail

namespace {

bool cpu_has_avx2() noexcept {
#if defined(CYBERQUOTE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* lookup(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return &scalar_kernels();
    case Isa::avx2:
      return cpu_has_avx2() ? detail::avx2_table() : nullptr;
    case Isa::neon:
      // Advanced SIMD is mandatory on AArch64.
      return detail::neon_table();
  }
  return nullptr;
}

const KernelTable& select() {
  if (const char* forced = std::getenv("CYBERQUOTE_ISA")) {
    const std::string name(forced);
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (name == isa_name(isa)) {
        if (const KernelTable* k = lookup(isa)) return *k;
      }
    }
  }
  for (Isa isa : {Isa::avx2, Isa::neon}) {
    if (const KernelTable* k = lookup(isa)) return *k;
  }
  return scalar_kernels();
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "?";
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::scalar};
  for (Isa isa : {Isa::avx2, Isa::neon}) {
    if (lookup(isa)) out.push_back(isa);
  }
  return out;
}

const KernelTable& kernels_for(Isa isa) {
  if (const KernelTable* k = lookup(isa)) return *k;
  throw DomainError("kernel set '" + std::string(isa_name(isa)) + "' is not available");
}

const KernelTable& active_kernels() {
  static const KernelTable& chosen = select();
  return chosen;
}

}  // namespace cyberquote::kernels
