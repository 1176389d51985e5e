#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qmono/monogamy.hpp"

// Subcommand implementations behind the qmono binary, kept linkable so tests
// drive them directly.

namespace qmono::cli {

struct CommonOpts {
    std::string state = "w4";            // catalog label or file path
    std::string measure = "concurrence";
    std::string alpha;                   // "start:stop:step", empty = beta..5 step 0.05
    std::uint64_t seed = 1;
    int trials = 2000;
    int split_m = 1;
    std::string out;                     // empty = stdout
    std::string format = "csv";          // csv | json
};

struct LoadedState {
    PureState psi;
    std::string label;
    std::vector<std::string> party_names;
};

LoadedState load_state(const std::string& spec);
std::vector<double> parse_alpha_grid(const std::string& text, double beta);

int cmd_compute(const CommonOpts& opts, std::ostream& out);
int cmd_verify(const CommonOpts& opts, const std::string& random_spec, int count,
               std::ostream& out, std::ostream& diag);
int cmd_figure(int figure_id, const CommonOpts& opts, std::ostream& out);
int cmd_oracle(const CommonOpts& opts, int count, std::ostream& out);

int run_cli(int argc, const char* const* argv);

}  // namespace qmono::cli
