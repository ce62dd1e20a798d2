#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace utf8tok::simd {

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool cpu_supports(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(UTF8TOK_HAS_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

const Kernels* kernels_for(Isa isa) noexcept {
  if (!cpu_supports(isa)) return nullptr;
  switch (isa) {
    case Isa::scalar:
      return &detail::scalar_kernels;
    case Isa::avx2:
#if defined(UTF8TOK_HAS_AVX2)
      return &detail::avx2_kernels;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

namespace {

const Kernels& select() noexcept {
  if (const char* forced = std::getenv("UTF8TOK_ISA")) {
    const std::string_view name(forced);
    for (Isa isa : {Isa::scalar, Isa::avx2}) {
      if (name == to_string(isa)) {
        if (const Kernels* k = kernels_for(isa)) return *k;
      }
    }
  }
  if (const Kernels* k = kernels_for(Isa::avx2)) return *k;
  return detail::scalar_kernels;
}

}  // namespace

const Kernels& active() noexcept {
  static const Kernels& chosen = select();
  return chosen;
}

}  // namespace utf8tok::simd
