#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmono/tensor.hpp"

namespace qmono {

PureState w_state(int n);                 // n >= 3 qubits, single-excitation sector
PureState ghz_state(int n);               // n >= 2 qubits
PureState fs_state();                     // (|0000> + |0010> + |1011>)/sqrt(3)
PureState haar_random_pure(const std::vector<int>& dims, std::uint64_t seed);
// tracing half of a Haar pure state on dim * rank
DensityMatrix random_mixed(const std::vector<int>& dims, int rank, std::uint64_t seed);

struct ExpectedValue {
    std::string quantity;
    double value;
    bool exact;          // false: reproducible only through the roof sampler
};

struct CatalogEntry {
    std::string label;
    std::vector<std::string> party_names;
    PureState state;
    std::vector<ExpectedValue> expected;
};

const std::vector<CatalogEntry>& catalog();
std::optional<CatalogEntry> catalog_lookup(const std::string& label);

// party labels for states loaded from files: A, B1, B2, ...
std::vector<std::string> default_party_names(int nparties);

}  // namespace qmono
