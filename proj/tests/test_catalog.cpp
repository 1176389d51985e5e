#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "qmono/catalog.hpp"
#include "qmono/eigen.hpp"
#include "qmono/monogamy.hpp"
#include "qmono/tensor.hpp"

using namespace qmono;

namespace {

// greedy longest-match decomposition of a concatenated party-name string
std::vector<int> parse_parties(const std::string& s, const std::vector<std::string>& names) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        int best = -1;
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < names.size(); ++i)
            if (s.compare(pos, names[i].size(), names[i]) == 0 && names[i].size() > best_len) {
                best = static_cast<int>(i);
                best_len = names[i].size();
            }
        REQUIRE(best >= 0);
        out.push_back(best);
        pos += best_len;
    }
    return out;
}

MeasureValue eval_quantity(EngineContext& ctx, const std::string& quantity) {
    const std::vector<std::string>& names = ctx.party_names();
    const std::size_t open = quantity.find('(');
    REQUIRE(open != std::string::npos);
    REQUIRE(quantity.back() == ')');
    const std::string kind = quantity.substr(0, open);
    const std::string inner = quantity.substr(open + 1, quantity.size() - open - 2);

    const std::size_t bar = inner.find('|');
    if (bar != std::string::npos) {
        REQUIRE(kind == "C");
        const std::vector<int> focus = parse_parties(inner.substr(0, bar), names);
        REQUIRE(focus.size() == 1);
        return ctx.cut(focus[0], parse_parties(inner.substr(bar + 1), names));
    }
    const std::vector<int> pair = parse_parties(inner, names);
    REQUIRE(pair.size() == 2);
    if (kind == "Ca") return ctx.coa_pair(pair[0], pair[1]);
    REQUIRE(kind == "C");
    return ctx.pair(pair[0], pair[1]);
}

}  // namespace

TEST_CASE("every catalog golden value replays through the engine") {
    for (const CatalogEntry& entry : catalog()) {
        CAPTURE(entry.label);
        REQUIRE(static_cast<int>(entry.party_names.size()) == entry.state.parties());
        REQUIRE(!entry.expected.empty());
        EngineContext ctx(entry.state, entry.label, concurrence_measure(), 1, 2000);
        ctx.set_party_names(entry.party_names);
        for (const ExpectedValue& e : entry.expected) {
            CAPTURE(e.quantity);
            const MeasureValue got = eval_quantity(ctx, e.quantity);
            const double tol = e.exact ? 1e-9 : 5e-3;
            CHECK(std::abs(got.value - e.value) < tol);
            if (e.exact) CHECK(got.status == Status::Exact);
        }
    }
}

TEST_CASE("catalog labels are unique and resolvable") {
    for (const CatalogEntry& entry : catalog()) {
        auto found = catalog_lookup(entry.label);
        REQUIRE(found.has_value());
        CHECK(found->state.dim() == entry.state.dim());
    }
    CHECK(!catalog_lookup("no_such_state").has_value());
}

TEST_CASE("baseline state amplitudes") {
    PureState w4 = w_state(4);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(w4.amp[1 << k] - cx{0.5, 0.0}) < 1e-15);
    CHECK(std::abs(w4.amp[0]) == 0.0);
    CHECK(std::abs(w4.amp[5]) == 0.0);

    PureState ghz = ghz_state(3);
    CHECK(std::abs(ghz.amp[0].real() - std::sqrt(0.5)) < 1e-15);
    CHECK(std::abs(ghz.amp[7].real() - std::sqrt(0.5)) < 1e-15);

    PureState fs = fs_state();
    const double third = 1.0 / std::sqrt(3.0);
    CHECK(std::abs(fs.amp[0].real() - third) < 1e-15);
    CHECK(std::abs(fs.amp[2].real() - third) < 1e-15);
    CHECK(std::abs(fs.amp[11].real() - third) < 1e-15);

    CHECK_THROWS_AS(w_state(2), std::invalid_argument);
    CHECK_THROWS_AS(ghz_state(1), std::invalid_argument);
}

TEST_CASE("pair marginals of the w6 state keep the one-excitation mixture") {
    DensityMatrix rho = reduced_from_pure(w_state(6), {0, 1});
    CHECK(std::abs(rho.at(0, 0) - cx{2.0 / 3.0, 0.0}) < 1e-12);
    CHECK(std::abs(rho.at(1, 1) - cx{1.0 / 6.0, 0.0}) < 1e-12);
    CHECK(std::abs(rho.at(2, 2) - cx{1.0 / 6.0, 0.0}) < 1e-12);
    CHECK(std::abs(rho.at(1, 2) - cx{1.0 / 6.0, 0.0}) < 1e-12);
    CHECK(std::abs(rho.at(3, 3)) < 1e-12);
    CHECK(std::abs(rho.at(0, 3)) < 1e-12);
}

TEST_CASE("haar sampling is seed-deterministic and normalized") {
    PureState a = haar_random_pure({2, 2, 2}, 42);
    PureState b = haar_random_pure({2, 2, 2}, 42);
    PureState c = haar_random_pure({2, 2, 2}, 43);
    REQUIRE(a.dim() == b.dim());
    double norm = 0.0, diff = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
        CHECK(a.amp[i] == b.amp[i]);
        norm += std::norm(a.amp[i]);
        diff = std::max(diff, std::abs(a.amp[i] - c.amp[i]));
    }
    CHECK(std::abs(norm - 1.0) < 1e-12);
    CHECK(diff > 1e-3);
}

TEST_CASE("haar two-qubit marginal purity matches the known moment") {
    // E[tr rho_A^2] over Haar pure states on 2x2 is (dA + dB)/(dA dB + 1) = 4/5
    double acc = 0.0;
    const int n = 5000;
    for (int k = 0; k < n; ++k)
        acc += purity(reduced_from_pure(haar_random_pure({2, 2}, 7000 + k), {0}));
    CHECK(std::abs(acc / n - 0.8) < 0.02);
}

TEST_CASE("random_mixed hits the requested rank") {
    for (int rank = 1; rank <= 4; ++rank) {
        DensityMatrix rho = random_mixed({2, 2}, rank, 90 + rank);
        check_density(rho);
        EigenSystem es = hermitian_eigensystem(rho);
        int support = 0;
        for (double v : es.values) {
            CHECK(v > -1e-12);
            if (v > 1e-9) ++support;
        }
        CHECK(support == rank);
    }
    CHECK(std::abs(purity(random_mixed({2, 2}, 1, 5)) - 1.0) < 1e-10);
    CHECK_THROWS_AS(random_mixed({2, 2}, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_mixed({2, 2}, 5, 1), std::invalid_argument);
}

TEST_CASE("default party names") {
    const std::vector<std::string> names = default_party_names(4);
    REQUIRE(names.size() == 4);
    CHECK(names[0] == "A");
    CHECK(names[1] == "B1");
    CHECK(names[3] == "B3");
}
