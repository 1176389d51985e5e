#pragma once

#include <complex>
#include <cstddef>

// Complex double kernels: scalar reference implementations plus AVX2 variants
// selected once at runtime. Both tables stay callable so equivalence tests can
// compare them directly. QMONO_KERNELS=scalar in the environment forces the
// reference path.

namespace qmono::kern {

using cx = std::complex<double>;

struct Ops {
    const char* name;
    // sum |a_i|^2
    double (*norm2)(const cx* a, std::size_t n);
    // sum conj(a_i) * b_i
    cx (*dotc)(const cx* a, const cx* b, std::size_t n);
    // y_i += s * x_i
    void (*axpy)(cx* y, cx s, const cx* x, std::size_t n);
    // a_i *= s
    void (*scale)(cx* a, cx s, std::size_t n);
    // plane rotation with real c, complex s:
    //   x_i' =  c*x_i - s*y_i
    //   y_i' =  conj(s)*x_i + c*y_i
    void (*rot)(cx* x, cx* y, std::size_t n, double c, cx s);
};

const Ops& scalar_ops();
const Ops* avx2_ops();   // nullptr when the CPU (or build) lacks AVX2
const Ops& active();

// C (m x n) = A (m x k) * B (k x n), row-major, built on axpy rows
void matmul(cx* c, const cx* a, const cx* b, int m, int k, int n);

}  // namespace qmono::kern
