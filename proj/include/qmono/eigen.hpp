#pragma once

#include "qmono/tensor.hpp"

// Cyclic complex Jacobi eigensolver for Hermitian matrices. Dimensions here
// stay at or below 2^10, where Jacobi is robust and dependency-free.

namespace qmono {

struct EigenSystem {
    int n = 0;
    std::vector<double> values;  // descending
    std::vector<cx> vt;          // row j = eigenvector j (row-major n x n)

    const cx* vec(int j) const { return vt.data() + static_cast<std::size_t>(j) * n; }
};

// off-diagonal Frobenius norm <= 1e-12 * max(1, ||m||_F), at most 100 sweeps
EigenSystem hermitian_eigensystem(const cx* m, int n);
EigenSystem hermitian_eigensystem(const DensityMatrix& rho);

// V sqrt(diag) V^dagger with the PSD clamp policy from tensor.hpp
DensityMatrix psd_sqrt(const DensityMatrix& rho);

}  // namespace qmono
