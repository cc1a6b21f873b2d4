#pragma once

#include <cstddef>

// Primitive arithmetic kernels behind the autodiff tape and the DSP code.
// Each operation has a scalar reference implementation and an AVX2+FMA
// variant; the active variant is chosen once at runtime from CPUID and can
// be forced with ECGSSL_SIMD=scalar|avx2. Scalar and SIMD variants are
// equivalence-tested against each other (associativity differences only).

namespace ecgssl::kernels {

enum class SimdLevel { scalar = 0, avx2 = 1 };

const char* level_name(SimdLevel level);
bool cpu_has_avx2();

// Level resolved on first use: env override if valid, else best supported.
SimdLevel active_level();

template <typename T>
struct Ops {
  T (*dot)(const T*, const T*, size_t);
  void (*axpy)(T, const T*, T*, size_t);           // y += a*x
  void (*add)(const T*, const T*, T*, size_t);     // out = a + b
  void (*sub)(const T*, const T*, T*, size_t);     // out = a - b
  void (*mul)(const T*, const T*, T*, size_t);     // out = a .* b
  void (*scale)(T, const T*, T*, size_t);          // out = s * a
  T (*sum)(const T*, size_t);
  T (*sumsq)(const T*, size_t);
  // C[m,n] += A[m,k] * B[k,n], all row-major.
  void (*gemm_nn)(int m, int k, int n, const T* A, const T* B, T* C);
  // C[m,n] += A[m,k] * B[n,k]^T
  void (*gemm_nt)(int m, int k, int n, const T* A, const T* B, T* C);
  // C[k,n] += A[m,k]^T * B[m,n]
  void (*gemm_tn)(int m, int k, int n, const T* A, const T* B, T* C);
};

// Table for an explicit level; used by the equivalence tests.
template <typename T>
const Ops<T>& ops_at(SimdLevel level);

// Table for active_level().
template <typename T>
const Ops<T>& ops();

// Convenience forwarders through the active table.
template <typename T>
inline T dot(const T* a, const T* b, size_t n) { return ops<T>().dot(a, b, n); }
template <typename T>
inline void axpy(T alpha, const T* x, T* y, size_t n) { ops<T>().axpy(alpha, x, y, n); }
template <typename T>
inline void add(const T* a, const T* b, T* out, size_t n) { ops<T>().add(a, b, out, n); }
template <typename T>
inline void sub(const T* a, const T* b, T* out, size_t n) { ops<T>().sub(a, b, out, n); }
template <typename T>
inline void mul(const T* a, const T* b, T* out, size_t n) { ops<T>().mul(a, b, out, n); }
template <typename T>
inline void scale(T s, const T* a, T* out, size_t n) { ops<T>().scale(s, a, out, n); }
template <typename T>
inline T sum(const T* a, size_t n) { return ops<T>().sum(a, n); }
template <typename T>
inline T sumsq(const T* a, size_t n) { return ops<T>().sumsq(a, n); }
template <typename T>
inline void gemm_nn(int m, int k, int n, const T* A, const T* B, T* C) {
  ops<T>().gemm_nn(m, k, n, A, B, C);
}
template <typename T>
inline void gemm_nt(int m, int k, int n, const T* A, const T* B, T* C) {
  ops<T>().gemm_nt(m, k, n, A, B, C);
}
template <typename T>
inline void gemm_tn(int m, int k, int n, const T* A, const T* B, T* C) {
  ops<T>().gemm_tn(m, k, n, A, B, C);
}

}  // namespace ecgssl::kernels
