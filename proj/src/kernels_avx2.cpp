#include "qmono/kernels.hpp"

// Two complex doubles per 256-bit lane, interleaved re/im. Tails fall through
// to scalar arithmetic.

#ifdef QMONO_BUILD_AVX2
#include <immintrin.h>

namespace qmono::kern {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// [a0*b0, a1*b1, ...] with complex multiply per pair: s = [sr si sr si]
inline __m256d cmul(__m256d s_re, __m256d s_im, __m256d x) {
    __m256d x_swap = _mm256_permute_pd(x, 0x5);               // [xi xr xi xr]
    return _mm256_fmaddsub_pd(s_re, x, _mm256_mul_pd(s_im, x_swap));
}

double norm2_avx2(const cx* a, std::size_t n) {
    const double* p = reinterpret_cast<const double*>(a);
    std::size_t nd = 2 * n, i = 0;
    __m256d acc = _mm256_setzero_pd();
    for (; i + 4 <= nd; i += 4) {
        __m256d v = _mm256_loadu_pd(p + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double tail = 0.0;
    for (; i < nd; ++i) tail += p[i] * p[i];
    return hsum(acc) + tail;
}

cx dotc_avx2(const cx* a, const cx* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    std::size_t i = 0;
    __m256d acc_re = _mm256_setzero_pd();  // ar*br + ai*bi pairs
    __m256d acc_im = _mm256_setzero_pd();  // swap(a)*b pairs: [ai*br, ar*bi]
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        acc_re = _mm256_fmadd_pd(va, vb, acc_re);
        acc_im = _mm256_fmadd_pd(_mm256_permute_pd(va, 0x5), vb, acc_im);
    }
    double re = hsum(acc_re);
    // im = sum(odd lanes) - sum(even lanes)
    alignas(32) double q[4];
    _mm256_store_pd(q, acc_im);
    double im = q[1] + q[3] - q[0] - q[2];
    for (; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

void axpy_avx2(cx* y, cx s, const cx* x, std::size_t n) {
    double* py = reinterpret_cast<double*>(y);
    const double* px = reinterpret_cast<const double*>(x);
    __m256d s_re = _mm256_set1_pd(s.real());
    __m256d s_im = _mm256_set1_pd(s.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(px + 2 * i);
        __m256d vy = _mm256_loadu_pd(py + 2 * i);
        _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(vy, cmul(s_re, s_im, vx)));
    }
    for (; i < n; ++i) y[i] += s * x[i];
}

void scale_avx2(cx* a, cx s, std::size_t n) {
    double* p = reinterpret_cast<double*>(a);
    __m256d s_re = _mm256_set1_pd(s.real());
    __m256d s_im = _mm256_set1_pd(s.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d v = _mm256_loadu_pd(p + 2 * i);
        _mm256_storeu_pd(p + 2 * i, cmul(s_re, s_im, v));
    }
    for (; i < n; ++i) a[i] *= s;
}

void rot_avx2(cx* x, cx* y, std::size_t n, double c, cx s) {
    double* px = reinterpret_cast<double*>(x);
    double* py = reinterpret_cast<double*>(y);
    __m256d vc = _mm256_set1_pd(c);
    __m256d s_re = _mm256_set1_pd(s.real());
    __m256d s_im = _mm256_set1_pd(s.imag());
    __m256d sc_re = s_re;
    __m256d sc_im = _mm256_set1_pd(-s.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(px + 2 * i);
        __m256d vy = _mm256_loadu_pd(py + 2 * i);
        __m256d nx = _mm256_fmsub_pd(vc, vx, cmul(s_re, s_im, vy));   // c*x - s*y
        __m256d ny = _mm256_fmadd_pd(vc, vy, cmul(sc_re, sc_im, vx)); // conj(s)*x + c*y
        _mm256_storeu_pd(px + 2 * i, nx);
        _mm256_storeu_pd(py + 2 * i, ny);
    }
    const cx sc = std::conj(s);
    for (; i < n; ++i) {
        cx xi = x[i], yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = sc * xi + c * yi;
    }
}

}  // namespace

const Ops* avx2_ops_impl() {
    static const Ops ops{"avx2", norm2_avx2, dotc_avx2, axpy_avx2, scale_avx2, rot_avx2};
    return &ops;
}

}  // namespace qmono::kern

#else

namespace qmono::kern {
const Ops* avx2_ops_impl() { return nullptr; }
}  // namespace qmono::kern

#endif
