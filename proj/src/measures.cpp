#include "qmono/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qmono/eigen.hpp"
#include "qmono/kernels.hpp"
#include "qmono/rng.hpp"

namespace qmono {

namespace {

constexpr double kPureWeightFloor = 1e-14;  // ensemble members below this carry no weight
constexpr double kRankFloor = 1e-12;
constexpr double kPurityOne = 1.0 - 1e-12;
constexpr double kPi = 3.141592653589793238462643383279502884;

void require_cut(const DensityMatrix& rho, const PartitionSpec& part) {
    if (part.keep.size() + part.rest.size() != rho.dims.size())
        throw std::invalid_argument("cut does not cover the state's subsystems");
}

double log2_clamped(double p) { return p > 0.0 ? std::log2(p) : 0.0; }

double shannon_bits(const std::vector<double>& probs) {
    double h = 0.0;
    for (double p : probs)
        if (p > 0.0) h -= p * log2_clamped(p);
    return h;
}

double binary_entropy(double x) {
    x = std::clamp(x, 0.0, 1.0);
    return -x * log2_clamped(x) - (1.0 - x) * log2_clamped(1.0 - x);
}

// lambda_i: descending singular values of A_kl = w_k^T (sy x sy) w_l over a
// factorization rho = sum_k w_k w_k^dagger. The Hermitian embedding
// [[0, A], [A^dagger, 0]] has eigenvalues +-sigma_i, so no square root of a
// near-zero product eigenvalue ever amplifies solver noise.
std::array<double, 4> wootters_lambdas(const DensityMatrix& rho) {
    if (rho.dims != std::vector<int>{2, 2})
        throw std::invalid_argument("closed form needs a two-qubit state");

    static const double sgn[4] = {-1.0, 1.0, 1.0, -1.0};
    EigenSystem es = hermitian_eigensystem(rho);
    std::array<std::array<cx, 4>, 4> w{};
    for (int k = 0; k < 4; ++k) {
        const double root = std::sqrt(std::max(0.0, es.values[k]));
        const cx* v = es.vec(k);
        for (int i = 0; i < 4; ++i) w[k][i] = root * v[i];
    }

    std::vector<cx> embed(64, cx{0.0, 0.0});
    for (int k = 0; k < 4; ++k)
        for (int l = k; l < 4; ++l) {
            cx a{0.0, 0.0};
            for (int i = 0; i < 4; ++i) a += sgn[i] * w[k][i] * w[l][3 - i];
            embed[8 * k + (4 + l)] = a;
            embed[8 * (4 + l) + k] = std::conj(a);
            embed[8 * l + (4 + k)] = a;  // A is symmetric
            embed[8 * (4 + k) + l] = std::conj(a);
        }

    EigenSystem sv = hermitian_eigensystem(embed.data(), 8);
    std::array<double, 4> lam{};
    for (int i = 0; i < 4; ++i) lam[i] = std::max(0.0, sv.values[i]);
    return lam;
}

}  // namespace

const char* status_name(Status s) { return s == Status::Exact ? "exact" : "estimate"; }

double concurrence_pure(const PureState& psi, const PartitionSpec& part) {
    // 2 sqrt(sum of squared 2x2 minors) of the coefficient matrix across the
    // cut. Equal to sqrt(2 (1 - purity)) but free of the cancellation that
    // formula hits near zero, where the roof sampler would harvest the noise.
    const int n = psi.parties();
    std::vector<int> strides(static_cast<std::size_t>(n), 1);
    for (int p = n - 2; p >= 0; --p) strides[p] = strides[p + 1] * psi.dims[p + 1];
    const int dk = subset_dim(psi.dims, part.keep);
    const int dr = subset_dim(psi.dims, part.rest);
    std::vector<cx> coef(static_cast<std::size_t>(dk) * dr);
    for (int g = 0; g < psi.dim(); ++g) {
        int a = 0, b = 0;
        for (int p : part.keep) a = a * psi.dims[p] + (g / strides[p]) % psi.dims[p];
        for (int p : part.rest) b = b * psi.dims[p] + (g / strides[p]) % psi.dims[p];
        coef[static_cast<std::size_t>(a) * dr + b] = psi.amp[g];
    }
    double sum = 0.0;
    for (int i = 0; i < dk; ++i)
        for (int j = i + 1; j < dk; ++j) {
            const cx* ri = coef.data() + static_cast<std::size_t>(i) * dr;
            const cx* rj = coef.data() + static_cast<std::size_t>(j) * dr;
            for (int a = 0; a < dr; ++a)
                for (int b = a + 1; b < dr; ++b) sum += std::norm(ri[a] * rj[b] - ri[b] * rj[a]);
        }
    return 2.0 * std::sqrt(sum);
}

double concurrence_two_qubit(const DensityMatrix& rho) {
    auto lam = wootters_lambdas(rho);
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double concurrence_assistance_two_qubit(const DensityMatrix& rho) {
    auto lam = wootters_lambdas(rho);
    return lam[0] + lam[1] + lam[2] + lam[3];
}

double eof_pure(const PureState& psi, const PartitionSpec& part) {
    DensityMatrix red = reduced_from_pure(psi, part.keep);
    EigenSystem es = hermitian_eigensystem(red);
    std::vector<double> probs;
    probs.reserve(es.values.size());
    for (double v : es.values) probs.push_back(std::max(0.0, v));
    return shannon_bits(probs);
}

double eof_two_qubit(const DensityMatrix& rho) {
    double c = concurrence_two_qubit(rho);
    return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

MeasureValue eof(const PureState& psi, const PartitionSpec& part) {
    return {eof_pure(psi, part), Status::Exact, "pure entropy"};
}

MeasureValue eof(const DensityMatrix& rho) {
    if (rho.dims != std::vector<int>{2, 2})
        throw std::invalid_argument("mixed eof closed form needs a two-qubit state");
    return {eof_two_qubit(rho), Status::Exact, "two-qubit closed form"};
}

const MeasureDescriptor& concurrence_measure() {
    static const MeasureDescriptor d{"concurrence", 2.0, concurrence_pure, concurrence_two_qubit};
    return d;
}

const MeasureDescriptor& eof_measure() {
    static const MeasureDescriptor d{"eof", std::sqrt(2.0), eof_pure, eof_two_qubit};
    return d;
}

const MeasureDescriptor& measure_by_name(const std::string& name) {
    if (name == "concurrence") return concurrence_measure();
    if (name == "eof") return eof_measure();
    throw std::invalid_argument("unknown measure: " + name);
}

namespace {

// orthonormal columns from a complex Gaussian draw; Gram-Schmidt with positive
// diagonal keeps the distribution Haar
std::vector<cx> haar_isometry(int m, int r, Rng& rng) {
    std::vector<cx> u(static_cast<std::size_t>(m) * r);
    for (int k = 0; k < r; ++k) {
        for (;;) {
            for (int i = 0; i < m; ++i)
                u[static_cast<std::size_t>(i) * r + k] = cx{rng.gaussian(), rng.gaussian()};
            for (int l = 0; l < k; ++l) {
                cx ip{0.0, 0.0};
                for (int i = 0; i < m; ++i)
                    ip += std::conj(u[static_cast<std::size_t>(i) * r + l]) *
                          u[static_cast<std::size_t>(i) * r + k];
                for (int i = 0; i < m; ++i)
                    u[static_cast<std::size_t>(i) * r + k] -=
                        ip * u[static_cast<std::size_t>(i) * r + l];
            }
            double nrm = 0.0;
            for (int i = 0; i < m; ++i) nrm += std::norm(u[static_cast<std::size_t>(i) * r + k]);
            if (nrm > 1e-24) {
                double inv = 1.0 / std::sqrt(nrm);
                for (int i = 0; i < m; ++i) u[static_cast<std::size_t>(i) * r + k] *= inv;
                break;
            }
        }
    }
    return u;
}

struct Candidate {
    bool set = false;
    double key = 0.0;
    std::vector<cx> phis;
};

}  // namespace

MeasureValue convex_roof_oracle(const DensityMatrix& rho, const PartitionSpec& part,
                                RoofDirection direction, const OracleConfig& cfg,
                                const std::function<double(const PureState&, const PartitionSpec&)>& pure_fn) {
    if (cfg.trials < 1) throw std::invalid_argument("oracle needs at least one trial");
    require_cut(rho, part);

    const int dim = rho.dim();
    const std::size_t d = static_cast<std::size_t>(dim);
    EigenSystem es = hermitian_eigensystem(rho);

    int r = 0;
    while (r < dim && es.values[r] > kRankFloor) ++r;
    if (r == 0) throw std::invalid_argument("state has no weight above the rank floor");
    if (r > 8) throw std::invalid_argument("state rank exceeds the sampler limit of 8");

    PureState scratch;
    scratch.dims = rho.dims;
    scratch.amp.resize(d);

    auto load_normalized = [&](const cx* row) -> double {
        const double p = kern::active().norm2(row, d);
        if (p < kPureWeightFloor) return 0.0;
        const double inv = 1.0 / std::sqrt(p);
        for (std::size_t k = 0; k < d; ++k) scratch.amp[k] = row[k] * inv;
        return p;
    };
    auto member_value = [&](const cx* row) -> double {
        const double p = load_normalized(row);
        if (p == 0.0) return 0.0;
        return p * pure_fn(scratch, part);
    };

    if (r == 1) {
        load_normalized(es.vec(0));
        return {pure_fn(scratch, part), Status::Exact, "rank-1 projector"};
    }

    // rows k = sqrt(w_k) v_k; any ensemble of the state is an isometry image
    std::vector<cx> subvecs(static_cast<std::size_t>(r) * d);
    for (int k = 0; k < r; ++k) {
        const double w = std::sqrt(es.values[k]);
        const cx* v = es.vec(k);
        for (std::size_t c = 0; c < d; ++c) subvecs[static_cast<std::size_t>(k) * d + c] = w * v[c];
    }

    const int m = r + 2;
    const double sign = direction == RoofDirection::Min ? 1.0 : -1.0;
    Rng rng(cfg.seed);
    const auto& ops = kern::active();

    const int nglob = std::max(8, cfg.trials / 4);
    Candidate c1, c2;
    std::vector<cx> phis(static_cast<std::size_t>(m) * d);
    for (int t = 0; t < nglob; ++t) {
        if (t == 0) {
            // eigen-ensemble start: identity embedding plus two empty members
            std::fill(phis.begin(), phis.end(), cx{0.0, 0.0});
            std::copy(subvecs.begin(), subvecs.end(), phis.begin());
        } else {
            std::vector<cx> u = haar_isometry(m, r, rng);
            std::fill(phis.begin(), phis.end(), cx{0.0, 0.0});
            for (int i = 0; i < m; ++i)
                for (int k = 0; k < r; ++k)
                    ops.axpy(phis.data() + static_cast<std::size_t>(i) * d,
                             u[static_cast<std::size_t>(i) * r + k],
                             subvecs.data() + static_cast<std::size_t>(k) * d, d);
        }
        double val = 0.0;
        for (int i = 0; i < m; ++i) val += member_value(phis.data() + static_cast<std::size_t>(i) * d);
        const double key = sign * val;
        if (!c1.set || key < c1.key) {
            c2 = std::move(c1);
            c1 = {true, key, phis};
        } else if (!c2.set || key < c2.key) {
            c2 = {true, key, phis};
        }
    }

    const int per = std::max(0, (cfg.trials - nglob) / 2);
    std::vector<cx> rowa(d), rowb(d);
    std::vector<double> contrib(static_cast<std::size_t>(m));

    double best = 0.0;
    bool best_set = false;
    for (Candidate* cand : {&c1, &c2}) {
        if (!cand->set) continue;
        std::vector<cx>& ph = cand->phis;
        double cur = 0.0;
        for (int i = 0; i < m; ++i) {
            contrib[static_cast<std::size_t>(i)] =
                member_value(ph.data() + static_cast<std::size_t>(i) * d);
            cur += contrib[static_cast<std::size_t>(i)];
        }

        // random pair rotations with a decaying angle scale
        double sigma = 0.6;
        const double decay = std::pow(0.01 / 0.6, 1.0 / std::max(per, 1));
        for (int t = 0; t < per; ++t) {
            int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
            int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(m - 1)));
            if (j >= i) ++j;
            const double th = rng.gaussian() * sigma;
            const double phase = rng.uniform() * 2.0 * kPi;
            const cx s = -std::sin(th) * std::polar(1.0, phase);
            std::copy_n(ph.data() + static_cast<std::size_t>(i) * d, d, rowa.data());
            std::copy_n(ph.data() + static_cast<std::size_t>(j) * d, d, rowb.data());
            ops.rot(rowa.data(), rowb.data(), d, std::cos(th), s);
            const double ci = member_value(rowa.data());
            const double cj = member_value(rowb.data());
            const double nval =
                cur - contrib[static_cast<std::size_t>(i)] - contrib[static_cast<std::size_t>(j)] + ci + cj;
            if (sign * nval < sign * cur) {
                std::copy_n(rowa.data(), d, ph.data() + static_cast<std::size_t>(i) * d);
                std::copy_n(rowb.data(), d, ph.data() + static_cast<std::size_t>(j) * d);
                contrib[static_cast<std::size_t>(i)] = ci;
                contrib[static_cast<std::size_t>(j)] = cj;
                cur = nval;
            }
            sigma *= decay;
        }

        // deterministic pair sweeps over a shrinking rotation grid
        static const double kMag[5] = {0.03, 0.1, 0.25, 0.55, 1.0};
        static const double kPhase[4] = {0.0, kPi / 2.0, kPi, 3.0 * kPi / 2.0};
        std::vector<cx> besta(d), bestb(d);
        double scale = 1.0;
        for (int sweep = 0; sweep < 60; ++sweep) {
            bool improved = false;
            for (int i = 0; i < m; ++i) {
                for (int j = i + 1; j < m; ++j) {
                    double bestd = 0.0, bestci = 0.0, bestcj = 0.0;
                    bool found = false;
                    for (double mag : kMag) {
                        for (double sgn : {1.0, -1.0}) {
                            const double th = sgn * mag * scale;
                            for (double phase : kPhase) {
                                const cx s = -std::sin(th) * std::polar(1.0, phase);
                                std::copy_n(ph.data() + static_cast<std::size_t>(i) * d, d, rowa.data());
                                std::copy_n(ph.data() + static_cast<std::size_t>(j) * d, d, rowb.data());
                                ops.rot(rowa.data(), rowb.data(), d, std::cos(th), s);
                                const double ci = member_value(rowa.data());
                                const double cj = member_value(rowb.data());
                                const double delta =
                                    sign * ((ci + cj) - (contrib[static_cast<std::size_t>(i)] +
                                                         contrib[static_cast<std::size_t>(j)]));
                                if (delta < bestd - 1e-15) {
                                    bestd = delta;
                                    bestci = ci;
                                    bestcj = cj;
                                    besta = rowa;
                                    bestb = rowb;
                                    found = true;
                                }
                            }
                        }
                    }
                    if (found) {
                        std::copy_n(besta.data(), d, ph.data() + static_cast<std::size_t>(i) * d);
                        std::copy_n(bestb.data(), d, ph.data() + static_cast<std::size_t>(j) * d);
                        cur += (bestci + bestcj) - (contrib[static_cast<std::size_t>(i)] +
                                                    contrib[static_cast<std::size_t>(j)]);
                        contrib[static_cast<std::size_t>(i)] = bestci;
                        contrib[static_cast<std::size_t>(j)] = bestcj;
                        improved = true;
                    }
                }
            }
            if (!improved) {
                scale *= 0.3;
                if (scale < 1e-5) break;
            }
        }

        // resum from the ensemble itself; the incremental updates drift
        cur = 0.0;
        for (int i = 0; i < m; ++i)
            cur += member_value(ph.data() + static_cast<std::size_t>(i) * d);

        if (!best_set || sign * cur < sign * best) {
            best = cur;
            best_set = true;
        }
    }

    return {best, Status::Estimate, "roof sampler"};
}

MeasureValue convex_roof_oracle(const DensityMatrix& rho, const PartitionSpec& part,
                                RoofDirection direction, const OracleConfig& cfg) {
    return convex_roof_oracle(rho, part, direction, cfg, concurrence_pure);
}

MeasureValue measure_eval(const MeasureDescriptor& q, const PureState& psi,
                          const PartitionSpec& part, const OracleConfig&) {
    if (part.keep.empty() || part.rest.empty()) return {0.0, Status::Exact, "trivial cut"};
    return {q.pure_evaluator(psi, part), Status::Exact, "pure cut"};
}

MeasureValue measure_eval(const MeasureDescriptor& q, const DensityMatrix& rho,
                          const PartitionSpec& part, const OracleConfig& cfg) {
    require_cut(rho, part);
    if (part.keep.empty() || part.rest.empty()) return {0.0, Status::Exact, "trivial cut"};

    auto as_pure = [](const DensityMatrix& m) {
        EigenSystem es = hermitian_eigensystem(m);
        PureState psi;
        psi.dims = m.dims;
        psi.amp.assign(es.vec(0), es.vec(0) + m.dim());
        double nrm = 0.0;
        for (const cx& a : psi.amp) nrm += std::norm(a);
        const double inv = 1.0 / std::sqrt(nrm);
        for (cx& a : psi.amp) a *= inv;
        return psi;
    };

    if (linear_entropy(rho) <= 1e-12)
        return {q.pure_evaluator(as_pure(rho), part), Status::Exact, "pure projection"};

    // peel off pure single-party factors: they carry nothing across the cut
    DensityMatrix cur = rho;
    std::vector<int> ids(rho.dims.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    std::vector<int> keep_ids = part.keep, rest_ids = part.rest;

    bool changed = true;
    while (changed && cur.dims.size() > 1) {
        changed = false;
        for (std::size_t p = 0; p < cur.dims.size(); ++p) {
            DensityMatrix marginal = partial_trace(
                cur, PartitionSpec::cut({static_cast<int>(p)}, static_cast<int>(cur.dims.size())));
            if (purity(marginal) < kPurityOne) continue;

            const int dropped = ids[p];
            std::vector<int> others;
            for (std::size_t k = 0; k < cur.dims.size(); ++k)
                if (k != p) others.push_back(static_cast<int>(k));
            cur = partial_trace(cur, PartitionSpec::cut(others, static_cast<int>(cur.dims.size())));
            ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(p));
            std::erase(keep_ids, dropped);
            std::erase(rest_ids, dropped);
            if (keep_ids.empty() || rest_ids.empty())
                return {0.0, Status::Exact, "uncorrelated factor"};
            changed = true;
            break;
        }
    }

    auto positions = [&](const std::vector<int>& wanted) {
        std::vector<int> pos;
        for (int id : wanted)
            for (std::size_t k = 0; k < ids.size(); ++k)
                if (ids[k] == id) pos.push_back(static_cast<int>(k));
        return pos;
    };
    PartitionSpec reduced;
    reduced.keep = positions(keep_ids);
    reduced.rest = positions(rest_ids);

    if (cur.dims == std::vector<int>{2, 2})
        return {q.mixed_two_qubit_evaluator(cur), Status::Exact, "two-qubit closed form"};

    return convex_roof_oracle(cur, reduced, RoofDirection::Min, cfg, q.pure_evaluator);
}

double concurrence_max_for_cut(const std::vector<int>& dims, const PartitionSpec& part) {
    const std::size_t da = subset_dim(dims, part.keep);
    const std::size_t db = subset_dim(dims, part.rest);
    const double dmin = static_cast<double>(std::min(da, db));
    return std::sqrt(2.0 * (dmin - 1.0) / dmin);
}

}  // namespace qmono
