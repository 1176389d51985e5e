#include "qmono/kernels.hpp"

namespace qmono::kern {

namespace {

double norm2_scalar(const cx* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return acc;
}

cx dotc_scalar(const cx* a, const cx* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

void axpy_scalar(cx* y, cx s, const cx* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += s * x[i];
}

void scale_scalar(cx* a, cx s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) a[i] *= s;
}

void rot_scalar(cx* x, cx* y, std::size_t n, double c, cx s) {
    const cx sc = std::conj(s);
    for (std::size_t i = 0; i < n; ++i) {
        cx xi = x[i], yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = sc * xi + c * yi;
    }
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{"scalar", norm2_scalar, dotc_scalar, axpy_scalar, scale_scalar,
                         rot_scalar};
    return ops;
}

void matmul(cx* c, const cx* a, const cx* b, int m, int k, int n) {
    const Ops& ops = active();
    for (std::size_t i = 0; i < static_cast<std::size_t>(m) * n; ++i) c[i] = cx{0.0, 0.0};
    for (int i = 0; i < m; ++i) {
        cx* crow = c + static_cast<std::size_t>(i) * n;
        for (int l = 0; l < k; ++l) {
            cx aval = a[static_cast<std::size_t>(i) * k + l];
            if (aval.real() == 0.0 && aval.imag() == 0.0) continue;
            ops.axpy(crow, aval, b + static_cast<std::size_t>(l) * n, n);
        }
    }
}

}  // namespace qmono::kern
