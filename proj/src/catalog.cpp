#include "qmono/catalog.hpp"

#include <cmath>
#include <stdexcept>

#include "qmono/rng.hpp"

namespace qmono {

PureState w_state(int n) {
    if (n < 3) throw std::invalid_argument("w_state needs at least 3 qubits");
    std::vector<int> dims(static_cast<std::size_t>(n), 2);
    std::vector<cx> amp(std::size_t{1} << n, cx{0.0, 0.0});
    double a = 1.0 / std::sqrt(static_cast<double>(n));
    for (int k = 0; k < n; ++k) amp[std::size_t{1} << (n - 1 - k)] = cx{a, 0.0};
    return make_pure(std::move(amp), dims);
}

PureState ghz_state(int n) {
    if (n < 2) throw std::invalid_argument("ghz_state needs at least 2 qubits");
    std::vector<int> dims(static_cast<std::size_t>(n), 2);
    std::vector<cx> amp(std::size_t{1} << n, cx{0.0, 0.0});
    double a = 1.0 / std::sqrt(2.0);
    amp.front() = cx{a, 0.0};
    amp.back() = cx{a, 0.0};
    return make_pure(std::move(amp), dims);
}

PureState fs_state() {
    std::vector<cx> amp(16, cx{0.0, 0.0});
    double a = 1.0 / std::sqrt(3.0);
    amp[0] = cx{a, 0.0};   // |0000>
    amp[2] = cx{a, 0.0};   // |0010>
    amp[11] = cx{a, 0.0};  // |1011>
    return make_pure(std::move(amp), {2, 2, 2, 2});
}

PureState haar_random_pure(const std::vector<int>& dims, std::uint64_t seed) {
    std::size_t total = 1;
    for (int d : dims) {
        if (d < 2) throw std::invalid_argument("subsystem dimensions must be at least 2");
        total *= static_cast<std::size_t>(d);
    }
    if (total > 1024) throw std::invalid_argument("total dimension exceeds the 2^10 limit");

    Rng rng(seed);
    std::vector<cx> amp(total);
    double sum = 0.0;
    for (cx& a : amp) {
        a = cx{rng.gaussian(), rng.gaussian()};
        sum += std::norm(a);
    }
    double inv = 1.0 / std::sqrt(sum);
    for (cx& a : amp) a *= inv;
    return make_pure(std::move(amp), dims);
}

DensityMatrix random_mixed(const std::vector<int>& dims, int rank, std::uint64_t seed) {
    std::size_t total = 1;
    for (int d : dims) total *= static_cast<std::size_t>(d);
    if (rank < 1 || static_cast<std::size_t>(rank) > total)
        throw std::invalid_argument("rank must lie in [1, total dimension]");
    if (rank == 1) return density_from_pure(haar_random_pure(dims, seed));

    std::vector<int> ext = dims;
    ext.push_back(rank);
    PureState purification = haar_random_pure(ext, seed);
    std::vector<int> keep(dims.size());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = static_cast<int>(i);
    return reduced_from_pure(purification, keep);
}

std::vector<std::string> default_party_names(int nparties) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(nparties));
    names.emplace_back("A");
    for (int i = 1; i < nparties; ++i) names.push_back("B" + std::to_string(i));
    return names;
}

namespace {

const double kS2 = std::sqrt(2.0);
const double kS3 = std::sqrt(3.0);
const double kS5 = std::sqrt(5.0);

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;

    out.push_back({"bell",
                   {"A", "B1"},
                   ghz_state(2),
                   {{"C(A|B1)", 1.0, true}, {"C(AB1)", 1.0, true}, {"Ca(AB1)", 1.0, true}}});

    out.push_back({"w3",
                   {"A", "B1", "B2"},
                   w_state(3),
                   {{"C(A|B1B2)", 2.0 * kS2 / 3.0, true},
                    {"C(AB1)", 2.0 / 3.0, true},
                    {"C(AB2)", 2.0 / 3.0, true},
                    {"Ca(AB1)", 2.0 / 3.0, true}}});

    out.push_back({"w4",
                   {"A", "B1", "B2", "B3"},
                   w_state(4),
                   {{"C(A|B1B2B3)", kS3 / 2.0, true},
                    {"C(AB1)", 0.5, true},
                    {"C(AB2)", 0.5, true},
                    {"C(AB3)", 0.5, true},
                    {"Ca(AB1)", 0.5, true},
                    {"C(A|B1B2)", kS2 / 2.0, false},
                    {"C(A|B1B3)", kS2 / 2.0, false},
                    {"C(A|B2B3)", kS2 / 2.0, false}}});

    out.push_back({"w5",
                   {"A", "B1", "B2", "B3", "B4"},
                   w_state(5),
                   {{"C(A|B1B2B3B4)", 0.8, true}, {"C(AB1)", 0.4, true}}});

    out.push_back({"w6",
                   {"A", "B1", "B2", "B3", "B4", "B5"},
                   w_state(6),
                   {{"C(A|B1B2B3B4B5)", kS5 / 3.0, true},
                    {"C(AB1)", 1.0 / 3.0, true},
                    {"Ca(AB1)", 1.0 / 3.0, true}}});

    out.push_back({"ghz3",
                   {"A", "B", "C"},
                   ghz_state(3),
                   {{"C(A|BC)", 1.0, true},
                    {"C(AB)", 0.0, true},
                    {"C(AC)", 0.0, true},
                    {"Ca(AB)", 1.0, true}}});

    out.push_back({"ghz4",
                   {"A", "B", "C", "D"},
                   ghz_state(4),
                   {{"C(A|BCD)", 1.0, true}, {"C(AB)", 0.0, true}, {"Ca(AB)", 1.0, true}}});

    out.push_back({"fs",
                   {"A", "B", "C", "D"},
                   fs_state(),
                   {{"C(A|BCD)", 2.0 * kS2 / 3.0, true},
                    {"C(A|CD)", 2.0 * kS2 / 3.0, true},
                    {"C(A|BD)", 2.0 / 3.0, true},
                    {"C(AB)", 0.0, true},
                    {"C(AC)", 0.0, true},
                    {"C(AD)", 2.0 / 3.0, true},
                    {"Ca(AC)", 2.0 / 3.0, true},
                    {"Ca(AD)", 2.0 * kS2 / 3.0, true}}});

    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

std::optional<CatalogEntry> catalog_lookup(const std::string& label) {
    for (const CatalogEntry& e : catalog()) {
        if (e.label == label) return e;
    }
    return std::nullopt;
}

}  // namespace qmono
