#include "qmono/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qmono/kernels.hpp"

namespace qmono {

namespace {

double frobenius(const cx* m, int n) {
    return std::sqrt(kern::active().norm2(m, static_cast<std::size_t>(n) * n));
}

double offdiag_frobenius(const std::vector<cx>& a, int n) {
    double acc = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) acc += std::norm(a[static_cast<std::size_t>(p) * n + q]);
    return std::sqrt(2.0 * acc);
}

}  // namespace

EigenSystem hermitian_eigensystem(const cx* m, int n) {
    if (n <= 0) throw std::invalid_argument("matrix dimension must be positive");
    const std::size_t nn = static_cast<std::size_t>(n);

    EigenSystem es;
    es.n = n;
    es.values.assign(nn, 0.0);
    es.vt.assign(nn * nn, cx{0.0, 0.0});
    for (int j = 0; j < n; ++j) es.vt[nn * j + j] = cx{1.0, 0.0};

    std::vector<cx> a(m, m + nn * nn);
    if (n == 1) {
        es.values[0] = a[0].real();
        return es;
    }

    const auto& ops = kern::active();
    const double tol = 1e-12 * std::max(1.0, frobenius(m, n));

    bool converged = false;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                cx apq = a[nn * p + q];
                double mag = std::abs(apq);
                if (mag == 0.0) continue;

                double ap = a[nn * p + p].real();
                double aq = a[nn * q + q].real();
                cx u = apq / mag;
                double tau = (aq - ap) / (2.0 * mag);
                double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                cx s = t * c * u;

                // columns p,q of a <- a * U with U = [[c, s], [-conj(s), c]]
                for (int i = 0; i < n; ++i) {
                    cx xp = a[nn * i + p];
                    cx xq = a[nn * i + q];
                    a[nn * i + p] = c * xp - std::conj(s) * xq;
                    a[nn * i + q] = s * xp + c * xq;
                }
                // rows p,q of a <- U^dagger * a, same mixing for the basis rows
                ops.rot(a.data() + nn * p, a.data() + nn * q, nn, c, s);
                ops.rot(es.vt.data() + nn * p, es.vt.data() + nn * q, nn, c, s);

                a[nn * p + q] = cx{0.0, 0.0};
                a[nn * q + p] = cx{0.0, 0.0};
                a[nn * p + p] = cx{a[nn * p + p].real(), 0.0};
                a[nn * q + q] = cx{a[nn * q + q].real(), 0.0};
            }
        }
        converged = offdiag_frobenius(a, n) <= tol;
    }
    if (!converged) throw std::runtime_error("jacobi eigensolver did not converge");

    // accumulated rows are left eigenvectors; conjugate to get right ones
    for (cx& v : es.vt) v = std::conj(v);

    std::vector<int> order(nn);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a[nn * i + i].real() > a[nn * j + j].real(); });

    std::vector<cx> sorted(nn * nn);
    for (int j = 0; j < n; ++j) {
        es.values[j] = a[nn * order[j] + order[j]].real();
        std::copy_n(es.vt.data() + nn * order[j], nn, sorted.data() + nn * j);
    }
    es.vt = std::move(sorted);
    return es;
}

EigenSystem hermitian_eigensystem(const DensityMatrix& rho) {
    return hermitian_eigensystem(rho.m.data(), rho.dim());
}

DensityMatrix psd_sqrt(const DensityMatrix& rho) {
    int n = rho.dim();
    EigenSystem es = hermitian_eigensystem(rho.m.data(), n);

    std::vector<double> root(es.values.size());
    for (std::size_t j = 0; j < root.size(); ++j) {
        double v = es.values[j];
        if (v < kPsdFloor) throw std::invalid_argument("matrix is not positive semidefinite");
        root[j] = v > 0.0 ? std::sqrt(v) : 0.0;
    }

    DensityMatrix out;
    out.dims = rho.dims;
    out.m.assign(rho.m.size(), cx{0.0, 0.0});
    for (int j = 0; j < n; ++j) {
        if (root[j] == 0.0) continue;
        const cx* v = es.vec(j);
        for (int r = 0; r < n; ++r) {
            cx w = root[j] * v[r];
            for (int c = 0; c < n; ++c)
                out.m[static_cast<std::size_t>(r) * n + c] += w * std::conj(v[c]);
        }
    }
    return out;
}

}  // namespace qmono
