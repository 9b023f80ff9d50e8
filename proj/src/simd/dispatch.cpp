#include "kronperm/simd/kernels.hpp"

#include <cassert>
#include <cstdlib>
#include <string>

namespace kronperm::simd {

#if defined(KRONPERM_HAVE_AVX2)
namespace detail {
const KernelTable& avx2_table();
}
#endif

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

const KernelTable* avx2_kernels() {
#if defined(KRONPERM_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

Isa detect_isa() { return avx2_kernels() ? Isa::Avx2 : Isa::Scalar; }

Isa active_isa() {
  static const Isa isa = [] {
    if (const char* env = std::getenv("KRONPERM_ISA"); env && std::string(env) == "scalar") return Isa::Scalar;
    return detect_isa();
  }();
  return isa;
}

const KernelTable& kernels(Isa isa) {
  if (isa == Isa::Avx2)
    if (const KernelTable* t = avx2_kernels()) return *t;
  return scalar_kernels();
}

void fill_affine_mod(std::uint64_t p, std::uint64_t c, std::uint64_t q, std::span<std::uint64_t> out) {
  assert(q > 0 && p < q && c < q);
  kernels(active_isa()).fill_affine_mod(p, c, q, out.data(), out.size());
}

void compose(std::span<const std::uint64_t> outer, std::span<const std::uint64_t> inner, std::span<std::uint64_t> out) {
  assert(inner.size() == out.size());
  kernels(active_isa()).compose(outer.data(), inner.data(), out.data(), out.size());
}

std::size_t count_fixed(std::span<const std::uint64_t> a) { return kernels(active_isa()).count_fixed(a.data(), a.size()); }

std::size_t count_mismatch(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  assert(a.size() == b.size());
  return kernels(active_isa()).count_mismatch(a.data(), b.data(), a.size());
}

} // namespace kronperm::simd
