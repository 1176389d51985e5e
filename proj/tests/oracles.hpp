#pragma once

// Independent reference implementations used only by tests. These deliberately
// avoid the library's stride machinery: indices are decomposed into digit
// vectors and recombined one digit at a time, so agreement with the library is
// evidence rather than tautology.

#include <complex>
#include <vector>

#include "qmono/tensor.hpp"

namespace oracles {

using qmono::cx;
using qmono::DensityMatrix;
using qmono::PureState;

inline std::vector<int> digits_of(int index, const std::vector<int>& dims) {
    std::vector<int> d(dims.size());
    for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
        d[k] = index % dims[k];
        index /= dims[k];
    }
    return d;
}

inline int index_of(const std::vector<int>& digits, const std::vector<int>& dims) {
    int idx = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + digits[k];
    return idx;
}

inline DensityMatrix partial_trace_ref(const DensityMatrix& rho, const std::vector<int>& keep) {
    const auto& dims = rho.dims;
    int n = static_cast<int>(dims.size());
    std::vector<bool> kept(n, false);
    for (int k : keep) kept[k] = true;
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
        if (!kept[i]) rest.push_back(i);

    std::vector<int> odims;
    for (int k : keep) odims.push_back(dims[k]);
    int od = 1;
    for (int d : odims) od *= d;

    DensityMatrix out;
    out.dims = odims;
    out.m.assign(static_cast<std::size_t>(od) * od, cx{0.0, 0.0});

    int full = rho.dim();
    for (int r = 0; r < full; ++r) {
        auto rd = digits_of(r, dims);
        for (int c = 0; c < full; ++c) {
            auto cd = digits_of(c, dims);
            bool diag_rest = true;
            for (int t : rest)
                if (rd[t] != cd[t]) { diag_rest = false; break; }
            if (!diag_rest) continue;
            std::vector<int> rk, ck;
            for (int k : keep) { rk.push_back(rd[k]); ck.push_back(cd[k]); }
            out.m[static_cast<std::size_t>(index_of(rk, odims)) * od + index_of(ck, odims)] +=
                rho.at(r, c);
        }
    }
    return out;
}

inline void matmul_ref(std::vector<cx>& c, const std::vector<cx>& a, const std::vector<cx>& b,
                       int m, int k, int n) {
    c.assign(static_cast<std::size_t>(m) * n, cx{0.0, 0.0});
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            cx acc{0.0, 0.0};
            for (int l = 0; l < k; ++l) acc += a[i * k + l] * b[l * n + j];
            c[static_cast<std::size_t>(i) * n + j] = acc;
        }
}

inline double max_abs_diff(const std::vector<cx>& a, const std::vector<cx>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

// 2|ad - bc| for a normalized two-qubit vector
inline double pure_two_qubit_concurrence_ref(const std::vector<cx>& v) {
    return 2.0 * std::abs(v[0] * v[3] - v[1] * v[2]);
}

}  // namespace oracles
