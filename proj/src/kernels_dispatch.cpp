#include <cstdlib>
#include <string_view>

#include "tricert/kernels.hpp"

namespace tricert::kern {

#if TRICERT_HAVE_AVX2
const Backend* avx2_backend_impl();
#endif

const Backend* avx2_backend() {
#if TRICERT_HAVE_AVX2
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return avx2_backend_impl();
#endif
  return nullptr;
}

const Backend& active_backend() {
  static const Backend& chosen = []() -> const Backend& {
    const char* env = std::getenv("TRICERT_KERNELS");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_backend();
    if (const Backend* v = avx2_backend()) return *v;
    return scalar_backend();
  }();
  return chosen;
}

}  // namespace tricert::kern
