#include <cstdlib>
#include <string_view>

#include "kernels_internal.hpp"

namespace zbargmann::kernels {

bool cpu_supports_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Table& scalar_table() { return detail::kScalarTable; }

const Table* avx2_table() {
#if defined(ZBARGMANN_HAVE_AVX2)
  if (cpu_supports_avx2()) return &detail::kAvx2Table;
#endif
  return nullptr;
}

namespace {

const Table& select() {
  if (const char* forced = std::getenv("ZBARGMANN_KERNELS")) {
    if (std::string_view(forced) == "scalar") return scalar_table();
  }
  if (const Table* t = avx2_table()) return *t;
  return scalar_table();
}

}  // namespace

const Table& active() {
  static const Table& chosen = select();
  return chosen;
}

}  // namespace zbargmann::kernels
