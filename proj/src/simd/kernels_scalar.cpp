#include "kronperm/simd/kernels.hpp"

namespace kronperm::simd {
namespace {

void fill_affine_mod_scalar(std::uint64_t p, std::uint64_t c, std::uint64_t q, std::uint64_t* out, std::size_t n) {
  std::uint64_t r = p + c;
  if (r >= q) r -= q;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = r == 0 ? q : r;
    r += p;
    if (r >= q) r -= q;
  }
}

void compose_scalar(const std::uint64_t* outer, const std::uint64_t* inner, std::uint64_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = outer[inner[i] - 1];
}

std::size_t count_fixed_scalar(const std::uint64_t* a, std::size_t n) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count += a[i] == i + 1;
  return count;
}

std::size_t count_mismatch_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count += a[i] != b[i];
  return count;
}

constexpr KernelTable kScalar{
    fill_affine_mod_scalar,
    compose_scalar,
    count_fixed_scalar,
    count_mismatch_scalar,
};

} // namespace

const KernelTable& scalar_kernels() { return kScalar; }

} // namespace kronperm::simd
