#include "qmono/monogamy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qmono/catalog.hpp"
#include "qmono/rng.hpp"

namespace qmono {

namespace {

// descent candidates closer than this count as tied and fall back to the
// lexicographically smaller subset, so fp jitter cannot flip the chain on
// symmetric states
constexpr double kChainTieTol = 1e-12;

double powa(double v, double a) { return std::pow(v, a); }

Status worse(Status a, Status b) {
    return (a == Status::Estimate || b == Status::Estimate) ? Status::Estimate : Status::Exact;
}

std::string join_ints(const std::vector<int>& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out.push_back(sep);
        out += std::to_string(v[i]);
    }
    return out;
}

void finish_lower_bound(BoundResult& b) {
    b.gap = b.lhs - b.rhs;
    b.satisfied = b.gap >= -kBoundTol;
    b.saturated = std::abs(b.gap) <= kSaturationTol;
}

std::vector<int> remote_parties(int nparties) {
    std::vector<int> all;
    for (int i = 1; i < nparties; ++i) all.push_back(i);
    return all;
}

}  // namespace

ExponentParams exponent_params(double alpha, double beta) {
    if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
    if (alpha < beta - 1e-12) throw std::invalid_argument("alpha must be at least beta");
    return {alpha, beta};
}

double ResidualTable::total() const {
    double t = 0.0;
    for (const ResidualLevel& l : levels) t += l.value;
    return t;
}

Status ResidualTable::status() const {
    for (const ResidualLevel& l : levels)
        for (const ResidualEntry& e : l.entries)
            if (e.status == Status::Estimate) return Status::Estimate;
    return Status::Exact;
}

bool ResidualTable::has_negative() const {
    for (const ResidualLevel& l : levels)
        for (const ResidualEntry& e : l.entries)
            if (e.value < -kBoundTol) return true;
    return false;
}

// ---- EngineContext ----------------------------------------------------------

EngineContext::EngineContext(PureState psi, std::string label, const MeasureDescriptor& q,
                             std::uint64_t master_seed, int oracle_trials)
    : psi_(std::move(psi)),
      label_(std::move(label)),
      q_(q),
      master_seed_(master_seed),
      trials_(oracle_trials) {
    check_pure(psi_);
    names_ = default_party_names(parties());
}

void EngineContext::set_party_names(std::vector<std::string> names) {
    if (static_cast<int>(names.size()) != parties())
        throw std::invalid_argument("one party name per subsystem required");
    names_ = std::move(names);
}

const MeasureValue& EngineContext::cut(int focus, const std::vector<int>& subset) {
    const int n = parties();
    if (focus < 0 || focus >= n) throw std::invalid_argument("focus party out of range");
    if (subset.empty()) throw std::invalid_argument("cut needs at least one remote party");
    std::vector<int> sub = subset;
    std::sort(sub.begin(), sub.end());
    if (std::adjacent_find(sub.begin(), sub.end()) != sub.end())
        throw std::invalid_argument("repeated party in cut");
    for (int b : sub)
        if (b < 0 || b >= n || b == focus) throw std::invalid_argument("bad remote party in cut");

    const std::string key = "C|" + std::to_string(focus) + "|" + join_ints(sub, ',');
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    OracleConfig cfg{trials_, mix_seed(master_seed_, label_ + "|" + key + "|min")};
    MeasureValue v;
    if (static_cast<int>(sub.size()) + 1 == n) {
        v = measure_eval(q_, psi_, PartitionSpec::cut({focus}, n), cfg);
    } else {
        std::vector<int> keep = sub;
        keep.insert(std::lower_bound(keep.begin(), keep.end(), focus), focus);
        DensityMatrix marg = reduced_from_pure(psi_, keep);
        PartitionSpec part;
        for (std::size_t k = 0; k < keep.size(); ++k)
            (keep[k] == focus ? part.keep : part.rest).push_back(static_cast<int>(k));
        v = measure_eval(q_, marg, part, cfg);
    }
    return cache_.emplace(key, std::move(v)).first->second;
}

const MeasureValue& EngineContext::coa_pair(int a, int b) {
    const int n = parties();
    if (a == b || a < 0 || b < 0 || a >= n || b >= n)
        throw std::invalid_argument("assisted pair needs two distinct parties");
    const int lo = std::min(a, b), hi = std::max(a, b);
    const std::string key = "Ca|" + std::to_string(lo) + "," + std::to_string(hi);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    DensityMatrix marg = reduced_from_pure(psi_, {lo, hi});
    MeasureValue v{concurrence_assistance_two_qubit(marg), Status::Exact, "two-qubit coa"};
    return cache_.emplace(key, std::move(v)).first->second;
}

double EngineContext::two_tangle(const std::vector<int>& subset) {
    std::vector<int> sub = subset;
    std::sort(sub.begin(), sub.end());
    const std::string key = join_ints(sub, ',');
    auto it = tangle_cache_.find(key);
    if (it != tangle_cache_.end()) return it->second;
    const double v = 2.0 * linear_entropy(reduced_from_pure(psi_, sub));
    return tangle_cache_.emplace(key, v).first->second;
}

DensityMatrix EngineContext::marginal(const std::vector<int>& keep) const {
    return reduced_from_pure(psi_, keep);
}

bool EngineContext::all_qubits() const {
    for (int d : psi_.dims)
        if (d != 2) return false;
    return true;
}

// ---- score / theorem 1 ------------------------------------------------------

namespace {

BoundResult pairwise_sum_bound(EngineContext& ctx, const ExponentParams& p, const char* id) {
    const int n = ctx.parties();
    if (n < 3) throw std::invalid_argument("monogamy bounds need at least 3 parties");
    BoundResult b;
    b.id = id;
    const MeasureValue& whole = ctx.cut(0, remote_parties(n));
    b.lhs = powa(whole.value, p.alpha);
    b.status = whole.status;
    for (int i = 1; i < n; ++i) {
        const MeasureValue& mv = ctx.pair(0, i);
        b.rhs += powa(mv.value, p.alpha);
        b.status = worse(b.status, mv.status);
    }
    finish_lower_bound(b);
    return b;
}

}  // namespace

BoundResult monogamy_score(EngineContext& ctx, const ExponentParams& p) {
    return pairwise_sum_bound(ctx, p, "score");
}

BoundResult bound_theorem1(EngineContext& ctx, const ExponentParams& p) {
    return pairwise_sum_bound(ctx, p, "theorem1");
}

// ---- residual recursions ----------------------------------------------------

ResidualEntry residual_tripartite(EngineContext& ctx, const ExponentParams& p, int b, int c,
                                  int focus) {
    const MeasureValue& whole = ctx.cut(focus, {b, c});
    const MeasureValue& ab = ctx.pair(focus, b);
    const MeasureValue& ac = ctx.pair(focus, c);
    ResidualEntry e;
    e.parties = {std::min(b, c), std::max(b, c)};
    e.value = powa(whole.value, p.alpha) - powa(ab.value, p.alpha) - powa(ac.value, p.alpha);
    e.status = worse(whole.status, worse(ab.status, ac.status));
    return e;
}

namespace {

double party_weight(const std::map<int, double>& weights, int b) {
    auto it = weights.find(b);
    return it == weights.end() ? 1.0 : it->second;
}

// Max policy: composite residuals follow the arg-max descent. The composite of
// a subset subtracts weighted pairs plus its own internal chain, so the top
// chain plus pairs plus the full-pool composite reassembles the whole cut.
struct MaxRecursion {
    EngineContext& ctx;
    const ExponentParams& p;
    int focus;
    const std::map<int, double>& weights;
    std::map<std::string, std::pair<double, Status>> memo;

    double value(const std::vector<int>& s, Status& st);
    std::vector<ResidualLevel> chain(const std::vector<int>& pool, Status& st);
};

double MaxRecursion::value(const std::vector<int>& s, Status& st) {
    const std::string key = join_ints(s, ',');
    auto it = memo.find(key);
    if (it != memo.end()) {
        st = worse(st, it->second.second);
        return it->second.first;
    }
    Status local = Status::Exact;
    const MeasureValue& whole = ctx.cut(focus, s);
    local = worse(local, whole.status);
    double v = powa(whole.value, p.alpha);
    for (int b : s) {
        const MeasureValue& mv = ctx.pair(focus, b);
        v -= party_weight(weights, b) * powa(mv.value, p.alpha);
        local = worse(local, mv.status);
    }
    if (s.size() >= 3) {
        for (const ResidualLevel& l : chain(s, local)) v -= l.value;
    }
    memo.emplace(key, std::make_pair(v, local));
    st = worse(st, local);
    return v;
}

std::vector<ResidualLevel> MaxRecursion::chain(const std::vector<int>& pool, Status& st) {
    std::vector<ResidualLevel> levels;
    std::vector<int> cur = pool;
    while (cur.size() >= 3) {
        ResidualLevel level;
        level.size = static_cast<int>(cur.size()) - 1;
        for (std::size_t l = 0; l < cur.size(); ++l) {
            std::vector<int> s;
            for (std::size_t k = 0; k < cur.size(); ++k)
                if (k != l) s.push_back(cur[k]);
            ResidualEntry e;
            e.parties = s;
            Status est = Status::Exact;
            e.value = value(s, est);
            e.status = est;
            level.entries.push_back(std::move(e));
        }
        std::size_t best = 0;
        for (std::size_t k = 1; k < level.entries.size(); ++k) {
            const ResidualEntry& e = level.entries[k];
            const ResidualEntry& champ = level.entries[best];
            const double margin = e.value - champ.value;
            if (margin > kChainTieTol || (margin > -kChainTieTol && e.parties < champ.parties))
                best = k;
        }
        level.entries[best].selected = true;
        level.value = level.entries[best].value;
        level.status = Status::Exact;
        for (const ResidualEntry& e : level.entries) level.status = worse(level.status, e.status);
        st = worse(st, level.status);
        cur = level.entries[best].parties;
        levels.push_back(std::move(level));
    }
    return levels;
}

// Mean policy: composites live on ordered lists; every level subtracts the
// averaged leave-one-out composites of each prefix.
struct MeanRecursion {
    EngineContext& ctx;
    const ExponentParams& p;
    int focus;
    const std::map<int, double>& weights;
    std::map<std::string, std::pair<double, Status>> memo;

    double value(const std::vector<int>& lst, Status& st);
};

double MeanRecursion::value(const std::vector<int>& lst, Status& st) {
    const std::string key = join_ints(lst, ',');
    auto it = memo.find(key);
    if (it != memo.end()) {
        st = worse(st, it->second.second);
        return it->second.first;
    }
    Status local = Status::Exact;
    const MeasureValue& whole = ctx.cut(focus, lst);
    local = worse(local, whole.status);
    double v = powa(whole.value, p.alpha);
    for (int b : lst) {
        const MeasureValue& mv = ctx.pair(focus, b);
        v -= party_weight(weights, b) * powa(mv.value, p.alpha);
        local = worse(local, mv.status);
    }
    for (std::size_t k = 3; k <= lst.size(); ++k) {
        double acc = 0.0;
        for (std::size_t l = 0; l < k; ++l) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < k; ++i)
                if (i != l) sub.push_back(lst[i]);
            acc += value(sub, local);
        }
        v -= acc / static_cast<double>(k);
    }
    memo.emplace(key, std::make_pair(v, local));
    st = worse(st, local);
    return v;
}

}  // namespace

ResidualTable residual_table(EngineContext& ctx, const ExponentParams& p, ResidualPolicy policy,
                             int focus, const std::vector<int>& pool,
                             const std::map<int, double>& weights) {
    std::vector<int> parties = pool;
    if (parties.empty()) {
        for (int i = 0; i < ctx.parties(); ++i)
            if (i != focus) parties.push_back(i);
    }
    std::sort(parties.begin(), parties.end());
    if (parties.size() < 3)
        throw std::invalid_argument("residual recursion needs at least 3 remote parties");

    ResidualTable t;
    t.policy = policy;
    t.focus = focus;
    Status st = Status::Exact;
    if (policy == ResidualPolicy::Max) {
        MaxRecursion rec{ctx, p, focus, weights, {}};
        t.levels = rec.chain(parties, st);
        std::reverse(t.levels.begin(), t.levels.end());  // ascending by size
    } else {
        MeanRecursion rec{ctx, p, focus, weights, {}};
        for (std::size_t k = 3; k <= parties.size(); ++k) {
            ResidualLevel level;
            level.size = static_cast<int>(k) - 1;
            level.status = Status::Exact;
            double acc = 0.0;
            for (std::size_t l = 0; l < k; ++l) {
                std::vector<int> sub;
                for (std::size_t i = 0; i < k; ++i)
                    if (i != l) sub.push_back(parties[i]);
                ResidualEntry e;
                e.parties = sub;
                Status est = Status::Exact;
                e.value = rec.value(sub, est);
                e.status = est;
                acc += e.value;
                level.status = worse(level.status, e.status);
                level.entries.push_back(std::move(e));
            }
            level.value = acc / static_cast<double>(k);
            level.entries.shrink_to_fit();
            t.levels.push_back(std::move(level));
        }
    }
    return t;
}

BoundResult bound_with_residuals(EngineContext& ctx, const ExponentParams& p,
                                 ResidualPolicy policy) {
    const int n = ctx.parties();
    if (n < 4) throw std::invalid_argument("residual bounds need at least 4 parties");
    ResidualTable t = residual_table(ctx, p, policy);

    BoundResult b;
    b.id = policy == ResidualPolicy::Max ? (n == 4 ? "theorem2" : "theorem3") : "corollary1";
    const MeasureValue& whole = ctx.cut(0, remote_parties(n));
    b.lhs = powa(whole.value, p.alpha);
    b.status = whole.status;
    for (int i = 1; i < n; ++i) {
        const MeasureValue& mv = ctx.pair(0, i);
        b.rhs += powa(mv.value, p.alpha);
        b.status = worse(b.status, mv.status);
    }
    b.rhs += t.total();
    b.status = worse(b.status, t.status());
    if (t.has_negative()) b.note = "negative residual entries present";
    finish_lower_bound(b);
    return b;
}

// ---- lemma ------------------------------------------------------------------

BoundResult bound_lemma(EngineContext& ctx, const ExponentParams& p) {
    if (ctx.parties() != 3) throw std::invalid_argument("the two-coefficient bound is tripartite");
    int b = 1, c = 2;
    bool swapped = false;
    if (ctx.pair(0, b).value < ctx.pair(0, c).value) {
        std::swap(b, c);
        swapped = true;
    }
    const MeasureValue& whole = ctx.cut(0, {1, 2});
    const MeasureValue& qb = ctx.pair(0, b);
    const MeasureValue& qc = ctx.pair(0, c);

    BoundResult r;
    r.id = "lemma";
    r.lhs = powa(whole.value, p.alpha);
    r.rhs = powa(qb.value, p.alpha) + (p.alpha / p.beta) * powa(qc.value, p.alpha);
    r.status = worse(whole.status, worse(qb.status, qc.status));
    if (swapped) r.note = "remote parties swapped so the larger pair term leads";
    finish_lower_bound(r);
    return r;
}

// ---- weighted pairwise bounds -----------------------------------------------

std::map<int, double> theorem4_weights(int nparties, const ExponentParams& p, int m) {
    if (nparties < 4) throw std::invalid_argument("weighted bounds need at least 4 parties");
    if (m < 1 || m > nparties - 3) throw std::invalid_argument("split index out of range");
    const double ratio = p.alpha / p.beta;
    std::map<int, double> w;
    for (int i = 1; i < nparties; ++i) w[i] = std::pow(ratio, std::min(i - 1, m));
    return w;
}

BoundResult bound_theorem4(EngineContext& ctx, const ExponentParams& p, int m) {
    const int n = ctx.parties();
    const std::map<int, double> w = theorem4_weights(n, p, m);

    BoundResult b;
    b.id = "theorem4";
    const MeasureValue& whole = ctx.cut(0, remote_parties(n));
    b.lhs = powa(whole.value, p.alpha);
    b.status = whole.status;
    for (int i = 1; i < n; ++i) {
        const MeasureValue& mv = ctx.pair(0, i);
        b.rhs += w.at(i) * powa(mv.value, p.alpha);
        b.status = worse(b.status, mv.status);
    }

    // ordering hypotheses on the unpowered values; the tail-cut values may be
    // sampled, which affects only this flag, not the bound itself
    std::vector<int> failed;
    for (int i = 1; i <= n - 2; ++i) {
        std::vector<int> tail;
        for (int j = i + 1; j < n; ++j) tail.push_back(j);
        const double qi = ctx.pair(0, i).value;
        const double qtail = ctx.cut(0, tail).value;
        const bool ok = i <= m ? qi + kBoundTol >= qtail : qtail + kBoundTol >= qi;
        if (!ok) failed.push_back(i);
    }
    b.premise_ok = failed.empty();
    b.note = "m=" + std::to_string(m);
    if (!failed.empty()) b.note += "; ordering fails at i=" + join_ints(failed, ',');
    finish_lower_bound(b);
    return b;
}

BoundResult bound_theorem5(EngineContext& ctx, const ExponentParams& p, int m) {
    BoundResult b = bound_theorem4(ctx, p, m);
    const std::map<int, double> w = theorem4_weights(ctx.parties(), p, m);
    ResidualTable t = residual_table(ctx, p, ResidualPolicy::Max, 0, {}, w);
    b.id = "theorem5";
    b.rhs += t.total();
    b.status = worse(b.status, t.status());
    if (t.has_negative()) b.note += "; negative residual entries present";
    finish_lower_bound(b);
    return b;
}

// ---- assisted-concurrence family (alpha fixed at 2, qubits) ------------------

namespace {

void require_concurrence_qubits(const EngineContext& ctx, const char* what) {
    if (ctx.measure().name != "concurrence")
        throw std::invalid_argument(std::string(what) + " is specific to concurrence");
    if (!ctx.all_qubits())
        throw std::invalid_argument(std::string(what) + " needs an all-qubit state");
}

// one side of the two-focus comparison: pairs of the focus minus assisted
// pairs of the partner plus the focus's residual chain over {partner, rest}
double theorem6_branch(EngineContext& ctx, int focus, int partner, ResidualTable& table,
                       double& base, Status& st) {
    const int n = ctx.parties();
    const ExponentParams p2 = exponent_params(2.0, ctx.measure().beta);

    std::vector<int> pool{partner};
    for (int i = 2; i < n; ++i) pool.push_back(i);
    double pairsum = 0.0;
    for (int x : pool) {
        const MeasureValue& mv = ctx.pair(focus, x);
        pairsum += powa(mv.value, 2.0);
        st = worse(st, mv.status);
    }
    double coasum = 0.0;
    std::vector<int> partner_pool{focus};
    for (int i = 2; i < n; ++i) partner_pool.push_back(i);
    for (int x : partner_pool) coasum += powa(ctx.coa_pair(partner, x).value, 2.0);

    table = residual_table(ctx, p2, ResidualPolicy::Max, focus, pool, {});
    st = worse(st, table.status());
    base = pairsum - coasum;
    return base + table.total();
}

}  // namespace

BoundResult bound_ca_upper(EngineContext& ctx) {
    require_concurrence_qubits(ctx, "the assisted upper bound");
    const int n = ctx.parties();
    if (n < 2) throw std::invalid_argument("needs at least 2 parties");

    BoundResult b;
    b.id = "ca_upper";
    const MeasureValue& whole = ctx.cut(0, remote_parties(n));
    b.lhs = powa(whole.value, 2.0);
    b.status = whole.status;
    for (int i = 1; i < n; ++i) b.rhs += powa(ctx.coa_pair(0, i).value, 2.0);
    b.gap = b.rhs - b.lhs;  // upper bound: rhs dominates
    b.satisfied = b.gap >= -kBoundTol;
    b.saturated = std::abs(b.gap) <= kSaturationTol;
    return b;
}

Theorem6Result bound_theorem6(EngineContext& ctx) {
    require_concurrence_qubits(ctx, "the two-focus bound");
    if (ctx.parties() < 4) throw std::invalid_argument("needs at least 4 parties");

    Theorem6Result r;
    Status st = Status::Exact;
    double base_a = 0.0, base_b = 0.0;
    r.branch_a = theorem6_branch(ctx, 0, 1, r.residuals_a, base_a, st);
    r.branch_b = theorem6_branch(ctx, 1, 0, r.residuals_b, base_b, st);
    r.base_rhs = std::max(base_a, base_b);

    r.bound.id = "theorem6";
    r.bound.lhs = ctx.two_tangle({0, 1});
    r.bound.rhs = std::max(r.branch_a, r.branch_b);
    r.bound.status = st;
    r.bound.note = r.branch_a >= r.branch_b ? "branch A selected (C0:=B)" : "branch B selected (C0:=A)";
    finish_lower_bound(r.bound);
    return r;
}

Corollary2Result bound_corollary2(EngineContext& ctx) {
    require_concurrence_qubits(ctx, "the three-focus bound");
    const int n = ctx.parties();
    if (n < 6) throw std::invalid_argument("needs at least 6 parties");

    Corollary2Result r;
    Status st = Status::Exact;
    ResidualTable ta, tb;
    double base_a = 0.0, base_b = 0.0;
    r.j_a = theorem6_branch(ctx, 0, 1, ta, base_a, st);
    r.j_b = theorem6_branch(ctx, 1, 0, tb, base_b, st);
    for (int x = 0; x < n; ++x)
        if (x != 2) r.j_c1 += powa(ctx.coa_pair(2, x).value, 2.0);

    r.bound.id = "corollary2";
    r.bound.lhs = ctx.two_tangle({0, 1, 2});
    r.bound.rhs = std::max(r.j_a, r.j_b) - r.j_c1;
    r.bound.status = st;
    r.bound.note = r.j_a >= r.j_b ? "branch A selected (C0:=B)" : "branch B selected (C0:=A)";
    finish_lower_bound(r.bound);
    return r;
}

// ---- report -----------------------------------------------------------------

MonogamyReport full_report(EngineContext& ctx, const ReportConfig& cfg) {
    MonogamyReport rep;
    rep.state_label = ctx.label();
    rep.measure = ctx.measure().name;
    rep.party_names = ctx.party_names();

    const int n = ctx.parties();
    const bool conc = ctx.measure().name == "concurrence";
    const bool qubits = ctx.all_qubits();

    for (double alpha : cfg.alphas) {
        AlphaSection sec;
        sec.alpha = alpha;
        const ExponentParams p = exponent_params(alpha, ctx.measure().beta);

        auto skip = [&sec](const char* id, const std::string& why) {
            BoundResult b;
            b.id = id;
            b.note = "skipped: " + why;
            b.satisfied = true;
            sec.bounds.push_back(std::move(b));
        };
        auto fixed_alpha = [](BoundResult b) {
            b.note += b.note.empty() ? "alpha fixed at 2" : "; alpha fixed at 2";
            return b;
        };

        if (n >= 3) {
            sec.bounds.push_back(monogamy_score(ctx, p));
            sec.bounds.push_back(bound_theorem1(ctx, p));
        } else {
            skip("score", "needs at least 3 parties");
            skip("theorem1", "needs at least 3 parties");
        }

        if (n >= 4) {
            sec.bounds.push_back(bound_with_residuals(ctx, p, ResidualPolicy::Max));
            sec.bounds.push_back(bound_with_residuals(ctx, p, ResidualPolicy::Mean));
        } else {
            skip("theorem2", "needs at least 4 parties");
            skip("corollary1", "needs at least 4 parties");
        }

        if (n == 3)
            sec.bounds.push_back(bound_lemma(ctx, p));
        else
            skip("lemma", "tripartite states only");

        if (n >= 4) {
            const int mlo = cfg.split_m > 0 ? cfg.split_m : 1;
            const int mhi = cfg.split_m > 0 ? cfg.split_m : n - 3;
            if (mlo > n - 3) {
                skip("theorem4", "split index out of range");
                skip("theorem5", "split index out of range");
            } else {
                for (int m = mlo; m <= mhi; ++m) {
                    sec.bounds.push_back(bound_theorem4(ctx, p, m));
                    sec.bounds.push_back(bound_theorem5(ctx, p, m));
                }
            }
        } else {
            skip("theorem4", "needs at least 4 parties");
            skip("theorem5", "needs at least 4 parties");
        }

        const std::string why_ca =
            !conc ? "defined for concurrence only" : "needs an all-qubit state";
        if (conc && qubits)
            sec.bounds.push_back(fixed_alpha(bound_ca_upper(ctx)));
        else
            skip("ca_upper", why_ca);
        if (conc && qubits && n >= 4)
            sec.bounds.push_back(fixed_alpha(bound_theorem6(ctx).bound));
        else
            skip("theorem6", conc && qubits ? "needs at least 4 parties" : why_ca);
        if (conc && qubits && n >= 6)
            sec.bounds.push_back(fixed_alpha(bound_corollary2(ctx).bound));
        else
            skip("corollary2", conc && qubits ? "needs at least 6 parties" : why_ca);

        if (n >= 4) {
            sec.residuals.push_back(residual_table(ctx, p, ResidualPolicy::Max));
            sec.residuals.push_back(residual_table(ctx, p, ResidualPolicy::Mean));
        }

        rep.sections.push_back(std::move(sec));
    }
    return rep;
}

std::vector<double> alpha_grid(double start, double stop, double step) {
    if (step <= 0.0) throw std::invalid_argument("alpha step must be positive");
    if (stop < start - 1e-12) throw std::invalid_argument("alpha range is empty");
    std::vector<double> grid;
    for (int k = 0;; ++k) {
        const double a = start + static_cast<double>(k) * step;
        if (a > stop + 1e-9) break;
        grid.push_back(a);
    }
    return grid;
}

}  // namespace qmono
