#pragma once
// Internal: per-backend kernel entry points. Each backend TU defines one
// table of function pointers; kernels.cpp owns dispatch.

#include <cstddef>

namespace oversub::kernels::detail {

struct KernelTable {
  void (*matvec)(const double*, const double*, const double*, double*,
                 std::size_t, std::size_t);
  void (*matvec_t)(const double*, const double*, double*, std::size_t,
                   std::size_t);
  void (*ger_acc)(double*, const double*, const double*, std::size_t,
                  std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  double (*dot)(const double*, const double*, std::size_t);
  double (*sum)(const double*, std::size_t);
  double (*sumsq_dev)(const double*, std::size_t, double);
  void (*scale)(double, double*, std::size_t);
  void (*clamp01)(double*, std::size_t);
};

const KernelTable& scalar_table();

#if defined(OVERSUB_HAVE_AVX2_TU)
const KernelTable& avx2_table();
#endif
#if defined(OVERSUB_HAVE_NEON_TU)
const KernelTable& neon_table();
#endif

}  // namespace oversub::kernels::detail
