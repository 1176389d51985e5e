#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmono/measures.hpp"

namespace qmono {

constexpr double kBoundTol = 1e-9;       // gap >= -kBoundTol counts as satisfied
constexpr double kSaturationTol = 1e-7;  // |gap| <= this counts as saturated

struct ExponentParams {
    double alpha;
    double beta;
};
ExponentParams exponent_params(double alpha, double beta);  // enforces alpha >= beta

enum class ResidualPolicy { Max, Mean };

struct ResidualEntry {
    std::vector<int> parties;   // B-side party indices, ascending
    double value;               // raw, may be negative
    Status status;
    bool selected = false;      // arg-max under Max policy
};

struct ResidualLevel {
    int size;                   // number of B-parties in each entry
    double value;               // selected (Max) or averaged (Mean) residual
    Status status;
    std::vector<ResidualEntry> entries;
};

struct ResidualTable {
    ResidualPolicy policy;
    int focus = 0;
    std::vector<ResidualLevel> levels;  // ascending by size
    double total() const;
    Status status() const;
    bool has_negative() const;
};

struct BoundResult {
    std::string id;         // score, theorem1, theorem2, theorem3, corollary1,
                            // lemma, theorem4, theorem5, ca_upper, theorem6, corollary2
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;       // lhs - rhs, or rhs - lhs for the upper bound ca_upper
    bool satisfied = false;
    bool saturated = false;
    bool premise_ok = true;
    Status status = Status::Exact;
    std::string note;       // free-form detail (swaps, split index, skip reason)
};

// Memoizing evaluation context for one (state, measure) pair. All bound and
// residual evaluators pull base (unpowered) measure values from here, so every
// alpha on a grid shares the same sampled values and reports stay
// deterministic under any evaluation order.
class EngineContext {
  public:
    EngineContext(PureState psi, std::string label, const MeasureDescriptor& q,
                  std::uint64_t master_seed, int oracle_trials);

    int parties() const { return psi_.parties(); }
    const PureState& state() const { return psi_; }
    const std::string& label() const { return label_; }
    const MeasureDescriptor& measure() const { return q_; }
    const std::vector<std::string>& party_names() const { return names_; }
    void set_party_names(std::vector<std::string> names);

    // measure value across focus | subset (marginal over focus + subset)
    const MeasureValue& cut(int focus, const std::vector<int>& subset);
    const MeasureValue& pair(int a, int b) { return cut(a, {b}); }
    // two-qubit assisted concurrence of the (a, b) marginal
    const MeasureValue& coa_pair(int a, int b);
    // 2 * linear entropy of the marginal on `subset` (pure global state)
    double two_tangle(const std::vector<int>& subset);

    DensityMatrix marginal(const std::vector<int>& keep) const;
    bool all_qubits() const;

  private:
    PureState psi_;
    std::string label_;
    const MeasureDescriptor& q_;
    std::vector<std::string> names_;
    std::uint64_t master_seed_;
    int trials_;
    std::map<std::string, MeasureValue> cache_;
    std::map<std::string, double> tangle_cache_;
};

// ---- bound evaluators ------------------------------------------------------

// delta = Q^a(A|B1..Bn-1) - sum Q^a(ABi); id "score"
BoundResult monogamy_score(EngineContext& ctx, const ExponentParams& p);
BoundResult bound_theorem1(EngineContext& ctx, const ExponentParams& p);

// signed Q^a(A|BC) - Q^a(AB) - Q^a(AC) on the (focus, b, c) marginal
ResidualEntry residual_tripartite(EngineContext& ctx, const ExponentParams& p, int b, int c,
                                  int focus = 0);

// Max: levels of arg-max leave-one-out subsets, pool shrinking down to pairs.
// Mean: order-prefix levels averaged over leave-one-out subsets.
// `weights` scales the subtracted pairwise terms per party (hatted recursion).
ResidualTable residual_table(EngineContext& ctx, const ExponentParams& p, ResidualPolicy policy,
                             int focus = 0, const std::vector<int>& pool = {},
                             const std::map<int, double>& weights = {});

// theorem2 (N == 4, Max), theorem3 (N >= 5, Max) or corollary1 (Mean)
BoundResult bound_with_residuals(EngineContext& ctx, const ExponentParams& p,
                                 ResidualPolicy policy);

// Q^a(A|BC) >= Q^a(AB) + (a/b) Q^a(AC) with Q(AB) >= Q(AC), swap recorded
BoundResult bound_lemma(EngineContext& ctx, const ExponentParams& p);

// weighted pairwise bound: coefficients (a/b)^(i-1) for i <= m, (a/b)^m above;
// premise flags record the ordering hypotheses on both blocks
BoundResult bound_theorem4(EngineContext& ctx, const ExponentParams& p, int m);
// theorem4 plus hatted residual levels (same recursion, weighted subtraction)
BoundResult bound_theorem5(EngineContext& ctx, const ExponentParams& p, int m);
std::map<int, double> theorem4_weights(int nparties, const ExponentParams& p, int m);

// C^2(A|B1..Bn-1) <= sum Ca^2(ABi), qubits, alpha = 2; gap = rhs - lhs
BoundResult bound_ca_upper(EngineContext& ctx);

struct Theorem6Result {
    BoundResult bound;
    double branch_a = 0.0;
    double branch_b = 0.0;
    double base_rhs = 0.0;   // max branch without residual terms
    ResidualTable residuals_a;
    ResidualTable residuals_b;
};
// 2 T(rho_AB) >= max branch over relabeled parties (C0 := other focus)
Theorem6Result bound_theorem6(EngineContext& ctx);

struct Corollary2Result {
    BoundResult bound;
    double j_a = 0.0;
    double j_b = 0.0;
    double j_c1 = 0.0;
};
Corollary2Result bound_corollary2(EngineContext& ctx);  // N >= 6

// ---- report ----------------------------------------------------------------

struct ReportConfig {
    std::vector<double> alphas;
    std::uint64_t seed = 1;
    int trials = 2000;
    int split_m = 1;          // theorem4/5 split index; <= 0 scans all valid ones
};

struct AlphaSection {
    double alpha;
    std::vector<BoundResult> bounds;
    std::vector<ResidualTable> residuals;
};

struct MonogamyReport {
    std::string state_label;
    std::string measure;
    std::vector<AlphaSection> sections;
    std::vector<std::string> party_names;
};

MonogamyReport full_report(EngineContext& ctx, const ReportConfig& cfg);

std::vector<double> alpha_grid(double start, double stop, double step);

}  // namespace qmono
