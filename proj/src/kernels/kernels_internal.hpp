#pragma once

#include "zbargmann/kernels.hpp"

namespace zbargmann::kernels::detail {

extern const Table kScalarTable;

#if defined(ZBARGMANN_HAVE_AVX2)
extern const Table kAvx2Table;
#endif

}  // namespace zbargmann::kernels::detail
