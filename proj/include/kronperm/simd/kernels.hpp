#pragma once

// Data-parallel permutation kernels. Each kernel has a scalar reference
// implementation and, on x86-64 builds, an AVX2 variant; the variant is
// chosen once at runtime from CPUID and can be pinned with KRONPERM_ISA=scalar.
//
// Permutations are stored 1-based in uint64 slots. All values must be < 2^62.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace kronperm::simd {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

struct KernelTable {
  // out[i] = rep((p * (i+1) + c) mod q), rep(0) = q. Requires p, c < q.
  void (*fill_affine_mod)(std::uint64_t p, std::uint64_t c, std::uint64_t q, std::uint64_t* out, std::size_t n);
  // out[i] = outer[inner[i] - 1]
  void (*compose)(const std::uint64_t* outer, const std::uint64_t* inner, std::uint64_t* out, std::size_t n);
  // #{i : a[i] == i + 1}
  std::size_t (*count_fixed)(const std::uint64_t* a, std::size_t n);
  // #{i : a[i] != b[i]}
  std::size_t (*count_mismatch)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
};

const KernelTable& scalar_kernels();
/// nullptr when the build or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

Isa detect_isa();
/// ISA used by the dispatching wrappers below.
Isa active_isa();
const KernelTable& kernels(Isa isa);

void fill_affine_mod(std::uint64_t p, std::uint64_t c, std::uint64_t q, std::span<std::uint64_t> out);
void compose(std::span<const std::uint64_t> outer, std::span<const std::uint64_t> inner, std::span<std::uint64_t> out);
std::size_t count_fixed(std::span<const std::uint64_t> a);
std::size_t count_mismatch(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

} // namespace kronperm::simd
