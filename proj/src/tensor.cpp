#include "qmono/tensor.hpp"

#include <algorithm>
#include <cmath>

#include "qmono/eigen.hpp"
#include "qmono/kernels.hpp"

namespace qmono {

namespace {

int product(const std::vector<int>& dims) {
    int p = 1;
    for (int d : dims) {
        if (d < 2) throw std::invalid_argument("subsystem dimension must be >= 2");
        p *= d;
    }
    return p;
}

// stride of subsystem k under big-endian layout
std::vector<long> strides_of(const std::vector<int>& dims) {
    std::vector<long> s(dims.size(), 1);
    for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k) s[k] = s[k + 1] * dims[k + 1];
    return s;
}

}  // namespace

int DensityMatrix::dim() const {
    return static_cast<int>(m.empty() ? 0 : std::lround(std::sqrt(double(m.size()))));
}

PartitionSpec PartitionSpec::cut(std::vector<int> keep, int nparties) {
    if (keep.empty()) throw std::invalid_argument("keep side of a partition cannot be empty");
    std::vector<bool> seen(nparties, false);
    for (int k : keep) {
        if (k < 0 || k >= nparties) throw std::invalid_argument("partition index out of range");
        if (seen[k]) throw std::invalid_argument("partition index repeated");
        seen[k] = true;
    }
    PartitionSpec p;
    p.keep = std::move(keep);
    for (int i = 0; i < nparties; ++i)
        if (!seen[i]) p.rest.push_back(i);
    return p;
}

PureState make_pure(std::vector<cx> amp, std::vector<int> dims) {
    int d = product(dims);
    if (static_cast<int>(amp.size()) != d)
        throw std::invalid_argument("amplitude count does not match dims");
    PureState psi{std::move(amp), std::move(dims)};
    check_pure(psi);
    return psi;
}

void check_pure(const PureState& psi) {
    if (psi.dim() != product(psi.dims))
        throw std::invalid_argument("amplitude count does not match dims");
    double n2 = kern::active().norm2(psi.amp.data(), psi.amp.size());
    if (std::abs(n2 - 1.0) > kNormTol)
        throw std::invalid_argument("pure state is not normalized");
}

void check_density(const DensityMatrix& rho) {
    int d = rho.dim();
    if (static_cast<std::size_t>(d) * d != rho.m.size() || d != product(rho.dims))
        throw std::invalid_argument("density matrix shape does not match dims");
    double tr = 0.0;
    double herm = 0.0;
    for (int r = 0; r < d; ++r) {
        tr += rho.at(r, r).real();
        herm = std::max(herm, std::abs(rho.at(r, r).imag()));
        for (int c = r + 1; c < d; ++c)
            herm = std::max(herm, std::abs(rho.at(r, c) - std::conj(rho.at(c, r))));
    }
    if (herm > kHermTol) throw std::invalid_argument("density matrix is not hermitian");
    if (std::abs(tr - 1.0) > kNormTol) throw std::invalid_argument("density matrix trace is not 1");
}

DensityMatrix density_from_pure(const PureState& psi) {
    check_pure(psi);
    int d = psi.dim();
    DensityMatrix rho;
    rho.dims = psi.dims;
    rho.m.resize(static_cast<std::size_t>(d) * d);
    for (int r = 0; r < d; ++r) {
        cx a = psi.amp[r];
        for (int c = 0; c < d; ++c) rho.m[static_cast<std::size_t>(r) * d + c] = a * std::conj(psi.amp[c]);
    }
    return rho;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const PartitionSpec& part) {
    const auto& dims = rho.dims;
    auto strides = strides_of(dims);
    int n = static_cast<int>(dims.size());
    if (part.keep.size() + part.rest.size() != dims.size())
        throw std::invalid_argument("partition does not cover all subsystems");
    std::vector<bool> seen(n, false);
    for (int k : part.keep) {
        if (k < 0 || k >= n || seen[k]) throw std::invalid_argument("bad keep index");
        seen[k] = true;
    }
    for (int r : part.rest) {
        if (r < 0 || r >= n || seen[r]) throw std::invalid_argument("bad rest index");
        seen[r] = true;
    }

    std::vector<int> kdims, rdims;
    std::vector<long> kstr, rstr;
    for (int k : part.keep) { kdims.push_back(dims[k]); kstr.push_back(strides[k]); }
    for (int r : part.rest) { rdims.push_back(dims[r]); rstr.push_back(strides[r]); }

    long dk = 1;
    for (int d : kdims) dk *= d;
    long dr = 1;
    for (int d : rdims) dr *= d;

    // linear offsets of every keep-side and rest-side digit combination
    auto offsets = [](const std::vector<int>& ds, const std::vector<long>& st, long total) {
        std::vector<long> off(total, 0);
        for (long x = 0; x < total; ++x) {
            long rem = x;
            for (int k = static_cast<int>(ds.size()) - 1; k >= 0; --k) {
                off[x] += (rem % ds[k]) * st[k];
                rem /= ds[k];
            }
        }
        return off;
    };
    std::vector<long> koff = offsets(kdims, kstr, dk);
    std::vector<long> roff = offsets(rdims, rstr, dr);

    DensityMatrix out;
    out.dims = kdims;
    out.m.assign(static_cast<std::size_t>(dk) * dk, cx{0.0, 0.0});
    int d = rho.dim();
    for (long a = 0; a < dk; ++a)
        for (long b = 0; b < dk; ++b) {
            cx acc{0.0, 0.0};
            for (long r = 0; r < dr; ++r)
                acc += rho.m[static_cast<std::size_t>(koff[a] + roff[r]) * d + koff[b] + roff[r]];
            out.m[static_cast<std::size_t>(a) * dk + b] = acc;
        }
    return out;
}

DensityMatrix reduced_from_pure(const PureState& psi, const std::vector<int>& keep) {
    const auto& dims = psi.dims;
    auto strides = strides_of(dims);
    int n = static_cast<int>(dims.size());
    PartitionSpec part = PartitionSpec::cut(keep, n);

    std::vector<int> kdims, rdims;
    std::vector<long> kstr, rstr;
    for (int k : part.keep) { kdims.push_back(dims[k]); kstr.push_back(strides[k]); }
    for (int r : part.rest) { rdims.push_back(dims[r]); rstr.push_back(strides[r]); }
    long dk = 1;
    for (int d : kdims) dk *= d;
    long dr = 1;
    for (int d : rdims) dr *= d;

    auto offsets = [](const std::vector<int>& ds, const std::vector<long>& st, long total) {
        std::vector<long> off(total, 0);
        for (long x = 0; x < total; ++x) {
            long rem = x;
            for (int k = static_cast<int>(ds.size()) - 1; k >= 0; --k) {
                off[x] += (rem % ds[k]) * st[k];
                rem /= ds[k];
            }
        }
        return off;
    };
    std::vector<long> koff = offsets(kdims, kstr, dk);
    std::vector<long> roff = offsets(rdims, rstr, dr);

    // rho[a,b] = sum_r psi[a ⊕ r] conj(psi[b ⊕ r])
    std::vector<cx> rows(static_cast<std::size_t>(dk) * dr);
    for (long a = 0; a < dk; ++a)
        for (long r = 0; r < dr; ++r)
            rows[static_cast<std::size_t>(a) * dr + r] = psi.amp[koff[a] + roff[r]];

    DensityMatrix out;
    out.dims = kdims;
    out.m.resize(static_cast<std::size_t>(dk) * dk);
    const auto& ops = kern::active();
    for (long a = 0; a < dk; ++a)
        for (long b = 0; b < dk; ++b)
            out.m[static_cast<std::size_t>(a) * dk + b] = std::conj(
                ops.dotc(rows.data() + static_cast<std::size_t>(a) * dr,
                         rows.data() + static_cast<std::size_t>(b) * dr, dr));
    return out;
}

double purity(const DensityMatrix& rho) {
    // hermitian rho: Tr rho^2 = sum |rho_ij|^2
    return kern::active().norm2(rho.m.data(), rho.m.size());
}

double linear_entropy(const DensityMatrix& rho) {
    return std::max(0.0, 1.0 - purity(rho));
}

std::vector<int> complement(const std::vector<int>& subset, int nparties) {
    std::vector<bool> in(nparties, false);
    for (int s : subset) in[s] = true;
    std::vector<int> out;
    for (int i = 0; i < nparties; ++i)
        if (!in[i]) out.push_back(i);
    return out;
}

int subset_dim(const std::vector<int>& dims, const std::vector<int>& subset) {
    int p = 1;
    for (int s : subset) p *= dims[s];
    return p;
}

bool is_diagonal_dims(const std::vector<int>& dims, int d) {
    int p = 1;
    for (int x : dims) p *= x;
    return p == d;
}

}  // namespace qmono
