#include "qmono/stateio.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qmono {

namespace {

[[noreturn]] void fail(const std::string& origin, std::size_t line, const std::string& what) {
    throw std::runtime_error(origin + ":" + std::to_string(line) + ": " + what);
}

// next significant line; blank lines and '#' comments are skipped
bool next_line(std::istream& in, std::string& out, std::size_t& lineno) {
    std::string raw;
    while (std::getline(in, raw)) {
        ++lineno;
        std::size_t start = raw.find_first_not_of(" \t\r");
        if (start == std::string::npos || raw[start] == '#') continue;
        out = raw;
        return true;
    }
    return false;
}

}  // namespace

PureState read_state(std::istream& in, const std::string& origin) {
    std::size_t lineno = 0;
    std::string line;
    if (!next_line(in, line, lineno)) fail(origin, lineno, "missing 'dims:' header");

    std::istringstream head(line);
    std::string tag;
    head >> tag;
    if (tag != "dims:") fail(origin, lineno, "expected 'dims:' header, got '" + tag + "'");

    std::vector<int> dims;
    std::size_t total = 1;
    int d = 0;
    while (head >> d) {
        if (d < 2) fail(origin, lineno, "subsystem dimensions must be at least 2");
        dims.push_back(d);
        total *= static_cast<std::size_t>(d);
        if (total > 1024) fail(origin, lineno, "total dimension exceeds the 2^10 limit");
    }
    if (!head.eof()) fail(origin, lineno, "malformed dimension list");
    if (dims.empty()) fail(origin, lineno, "dimension list is empty");

    std::vector<cx> amp(total);
    for (std::size_t i = 0; i < total; ++i) {
        if (!next_line(in, line, lineno))
            fail(origin, lineno, "expected " + std::to_string(total) + " amplitudes, got " +
                                     std::to_string(i));
        std::istringstream row(line);
        double re = 0.0, im = 0.0;
        if (!(row >> re >> im)) fail(origin, lineno, "expected 're im' amplitude pair");
        std::string extra;
        if (row >> extra) fail(origin, lineno, "unexpected trailing token '" + extra + "'");
        amp[i] = cx{re, im};
    }
    if (next_line(in, line, lineno)) fail(origin, lineno, "trailing data after last amplitude");

    double sum = 0.0;
    for (const cx& a : amp) sum += std::norm(a);
    if (std::abs(sum - 1.0) > kFileNormTol)
        fail(origin, lineno,
             "state norm deviates from 1 by more than " + std::to_string(kFileNormTol));
    double inv = 1.0 / std::sqrt(sum);
    for (cx& a : amp) a *= inv;

    return make_pure(std::move(amp), dims);
}

PureState read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open state file: " + path);
    return read_state(in, path);
}

void write_state(std::ostream& out, const PureState& psi) {
    out << "dims:";
    for (int d : psi.dims) out << ' ' << d;
    out << '\n';
    char buf[64];
    for (const cx& a : psi.amp) {
        std::snprintf(buf, sizeof(buf), "%.17g %.17g\n", a.real(), a.imag());
        out << buf;
    }
}

void write_state_file(const std::string& path, const PureState& psi) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    write_state(out, psi);
    if (!out) throw std::runtime_error("failed writing state file: " + path);
}

}  // namespace qmono
