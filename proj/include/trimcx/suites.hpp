#pragma once

#include "trimcx/inverse_system.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace trimcx {

/// Integer range `lo..hi` (or a single value) whose ends may refer to s:
/// `3..5`, `1..s+1`, `s-1`.
class IntRange {
public:
    IntRange() = default;
    /// Throws InputError on malformed text.
    static IntRange parse(const std::string& text);
    std::vector<int> values(int s = 0) const;

private:
    struct End {
        bool uses_s = false;
        int offset = 0;
        int at(int s) const { return (uses_s ? s : 0) + offset; }
    };
    End lo_, hi_;
};

/// Seed of the trial-th instance with parameters (s, ell).
std::uint64_t instance_seed(std::uint64_t base, int s, int ell, int trial);

struct SuiteOptions {
    std::string s = "3..5";
    std::string ell = "1..s+1";
    int trials = 1;
    std::uint64_t seed = 1;
};

struct SuiteReport {
    std::string name;
    std::vector<std::string> lines;
    int passed = 0;
    int failed = 0;

    bool ok() const { return failed == 0 && passed > 0; }
    void record(bool ok, const std::string& line);
};

const std::vector<std::string>& suite_names();

/// Runs a named suite. Throws InputError for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

} // namespace trimcx
