#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "qmono/tensor.hpp"

namespace qmono {

enum class Status { Exact, Estimate };

const char* status_name(Status s);

struct MeasureValue {
    double value = 0.0;
    Status status = Status::Exact;
    std::string method;
};

struct MeasureDescriptor {
    std::string name;   // "concurrence" | "eof"
    double beta;        // exponent at which the monogamy relation is native
    std::function<double(const PureState&, const PartitionSpec&)> pure_evaluator;
    std::function<double(const DensityMatrix&)> mixed_two_qubit_evaluator;
};

const MeasureDescriptor& concurrence_measure();
const MeasureDescriptor& eof_measure();
const MeasureDescriptor& measure_by_name(const std::string& name);

// sqrt(2 * linear_entropy of the keep-side marginal)
double concurrence_pure(const PureState& psi, const PartitionSpec& part);
// Wootters: max(0, l1 - l2 - l3 - l4), l = sqrt eigenvalues of sqrt(rho) rho~ sqrt(rho)
double concurrence_two_qubit(const DensityMatrix& rho);
// l1 + l2 + l3 + l4 over the same spectrum
double concurrence_assistance_two_qubit(const DensityMatrix& rho);

double eof_pure(const PureState& psi, const PartitionSpec& part);
double eof_two_qubit(const DensityMatrix& rho);
MeasureValue eof(const PureState& psi, const PartitionSpec& part);
MeasureValue eof(const DensityMatrix& rho);   // dims must be [2,2]

enum class RoofDirection { Min, Max };

struct OracleConfig {
    int trials = 2000;
    std::uint64_t seed = 0;
};

// Convex-roof sampler. Decompositions of a rank-r state come from m x r
// isometries on the eigendecomposition (m = r + 2); `trials` random samples
// (Haar scatter plus pair-rotation annealing) are followed by a deterministic
// pair-rotation polish of the best candidates. Every candidate is a valid
// decomposition, so Min stays an upper bound of the roof and Max a lower
// bound of the assisted value. Rank-1 input short-circuits to the pure value.
MeasureValue convex_roof_oracle(const DensityMatrix& rho, const PartitionSpec& part,
                                RoofDirection direction, const OracleConfig& cfg);
// same sampler for an arbitrary pure-state functional
MeasureValue convex_roof_oracle(const DensityMatrix& rho, const PartitionSpec& part,
                                RoofDirection direction, const OracleConfig& cfg,
                                const std::function<double(const PureState&, const PartitionSpec&)>& pure_fn);

// Routing: pure input -> pure evaluator; density input -> pure projection if
// the state is numerically pure, then pure product factors are dropped from
// either side of the cut (they carry no correlation across it), then the
// two-qubit closed form; only genuinely mixed non-2x2 cuts go to the sampler.
MeasureValue measure_eval(const MeasureDescriptor& q, const PureState& psi,
                          const PartitionSpec& part, const OracleConfig& cfg);
MeasureValue measure_eval(const MeasureDescriptor& q, const DensityMatrix& rho,
                          const PartitionSpec& part, const OracleConfig& cfg);

double concurrence_max_for_cut(const std::vector<int>& dims, const PartitionSpec& part);

}  // namespace qmono
