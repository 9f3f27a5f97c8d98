#pragma once

#include "cyberquote/kernels.hpp"

namespace cyberquote::kernels::detail {

const KernelTable* avx2_table() noexcept;
const KernelTable* neon_table() noexcept;

}  // namespace cyberquote::kernels::detail
