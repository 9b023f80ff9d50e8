#include "kronperm/simd/kernels.hpp"

#include <immintrin.h>

namespace kronperm::simd {

namespace detail {
const KernelTable& avx2_table();
}

namespace {

constexpr std::size_t kLanes = 4;

// Lanes hold residues r_{i..i+3}; each step adds 4p mod q. Values stay below
// 2^63, so the signed 64-bit compare is safe.
void fill_affine_mod_avx2(std::uint64_t p, std::uint64_t c, std::uint64_t q, std::uint64_t* out, std::size_t n) {
  if (n < 2 * kLanes) {
    scalar_kernels().fill_affine_mod(p, c, q, out, n);
    return;
  }
  alignas(32) std::uint64_t init[kLanes];
  for (std::size_t l = 0; l < kLanes; ++l) {
    const unsigned __int128 v = static_cast<unsigned __int128>(p) * (l + 1) + c;
    init[l] = static_cast<std::uint64_t>(v % q);
  }
  const std::uint64_t step = static_cast<std::uint64_t>((static_cast<unsigned __int128>(p) * kLanes) % q);

  const __m256i vq = _mm256_set1_epi64x(static_cast<long long>(q));
  const __m256i vqm1 = _mm256_set1_epi64x(static_cast<long long>(q - 1));
  const __m256i vstep = _mm256_set1_epi64x(static_cast<long long>(step));
  const __m256i zero = _mm256_setzero_si256();
  __m256i r = _mm256_load_si256(reinterpret_cast<const __m256i*>(init));

  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i is_zero = _mm256_cmpeq_epi64(r, zero);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_blendv_epi8(r, vq, is_zero));
    r = _mm256_add_epi64(r, vstep);
    const __m256i wrap = _mm256_cmpgt_epi64(r, vqm1);
    r = _mm256_sub_epi64(r, _mm256_and_si256(wrap, vq));
  }
  alignas(32) std::uint64_t tail[kLanes];
  _mm256_store_si256(reinterpret_cast<__m256i*>(tail), r);
  for (std::size_t l = 0; i < n; ++i, ++l) out[i] = tail[l] == 0 ? q : tail[l];
}

void compose_avx2(const std::uint64_t* outer, const std::uint64_t* inner, std::uint64_t* out, std::size_t n) {
  const long long* base = reinterpret_cast<const long long*>(outer) - 1;
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(inner + i));
    const __m256i v = _mm256_i64gather_epi64(base, idx, 8);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), v);
  }
  for (; i < n; ++i) out[i] = outer[inner[i] - 1];
}

std::size_t count_fixed_avx2(const std::uint64_t* a, std::size_t n) {
  __m256i iota = _mm256_setr_epi64x(1, 2, 3, 4);
  const __m256i four = _mm256_set1_epi64x(4);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const int mask = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(v, iota)));
    count += static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(mask)));
    iota = _mm256_add_epi64(iota, four);
  }
  for (; i < n; ++i) count += a[i] == i + 1;
  return count;
}

std::size_t count_mismatch_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t equal = 0;
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const int mask = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(va, vb)));
    equal += static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(mask)));
  }
  std::size_t mismatch = i - equal;
  for (; i < n; ++i) mismatch += a[i] != b[i];
  return mismatch;
}

constexpr KernelTable kAvx2{
    fill_affine_mod_avx2,
    compose_avx2,
    count_fixed_avx2,
    count_mismatch_avx2,
};

} // namespace

const KernelTable& detail::avx2_table() { return kAvx2; }

} // namespace kronperm::simd
