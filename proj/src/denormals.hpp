// Flushes subnormal doubles to zero for the lifetime of the guard (x86 SSE
// only; elsewhere a no-op). Amplitudes ahead of the ballistic front decay
// geometrically and otherwise spend thousands of steps in the subnormal range,
// which slows the step kernels by roughly 10x.

#pragma once

#if defined(__SSE2__)
#include <xmmintrin.h>
#endif

namespace lollipop::detail {

class ScopedFlushDenormals {
 public:
#if defined(__SSE2__)
  ScopedFlushDenormals() : saved_(_mm_getcsr()) { _mm_setcsr(saved_ | kFlushToZero | kDenormalsAreZero); }
  ~ScopedFlushDenormals() { _mm_setcsr(saved_); }
#else
  ScopedFlushDenormals() = default;
#endif
  ScopedFlushDenormals(const ScopedFlushDenormals&) = delete;
  ScopedFlushDenormals& operator=(const ScopedFlushDenormals&) = delete;

 private:
#if defined(__SSE2__)
  static constexpr unsigned kFlushToZero = 0x8000;
  static constexpr unsigned kDenormalsAreZero = 0x0040;
  unsigned saved_;
#endif
};

}  // namespace lollipop::detail
