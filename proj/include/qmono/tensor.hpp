#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

// Dense multipartite state types. Subsystem order is big-endian: subsystem 0
// is the leftmost ket label, so |i0 i1 ... ik> sits at linear index
// i0*d1*...*dk + i1*d2*...*dk + ... + ik.

namespace qmono {

using cx = std::complex<double>;

constexpr double kNormTol = 1e-12;      // unit-norm / trace-one slack
constexpr double kHermTol = 1e-12;      // max |m - m^dagger| entry
constexpr double kPsdFloor = -1e-10;    // eigenvalues below this are an error,
                                        // in [kPsdFloor, 0) they clamp to 0

struct PureState {
    std::vector<cx> amp;     // row-major amplitudes
    std::vector<int> dims;   // one entry per subsystem

    int parties() const { return static_cast<int>(dims.size()); }
    int dim() const { return static_cast<int>(amp.size()); }
};

struct DensityMatrix {
    std::vector<cx> m;       // dim x dim row-major
    std::vector<int> dims;

    int parties() const { return static_cast<int>(dims.size()); }
    int dim() const;
    cx at(int r, int c) const { return m[static_cast<std::size_t>(r) * dim() + c]; }
    cx& at(int r, int c) { return m[static_cast<std::size_t>(r) * dim() + c]; }
};

// Ordered bipartition of subsystem indices. keep is the side the reduced
// state keeps (output dims follow keep's order); rest is the complement.
struct PartitionSpec {
    std::vector<int> keep;
    std::vector<int> rest;

    // keep plus ascending complement among n subsystems
    static PartitionSpec cut(std::vector<int> keep, int nparties);
};

PureState make_pure(std::vector<cx> amp, std::vector<int> dims);
void check_pure(const PureState& psi);
void check_density(const DensityMatrix& rho);   // hermiticity + trace, not PSD
bool is_diagonal_dims(const std::vector<int>& dims, int d);

DensityMatrix density_from_pure(const PureState& psi);
DensityMatrix partial_trace(const DensityMatrix& rho, const PartitionSpec& part);
// same contraction taken straight from amplitudes, avoids the full outer product
DensityMatrix reduced_from_pure(const PureState& psi, const std::vector<int>& keep);

double purity(const DensityMatrix& rho);         // Tr rho^2 via Frobenius norm
double linear_entropy(const DensityMatrix& rho); // 1 - Tr rho^2, clamped at 0

std::vector<int> complement(const std::vector<int>& subset, int nparties);
int subset_dim(const std::vector<int>& dims, const std::vector<int>& subset);

}  // namespace qmono
