#pragma once

/**
 * @file report.hpp
 * @brief Outcome of a verification run, with reproducible failure witnesses.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace landen {

/// How a check exercises an identity.
struct CheckMode {
    enum class Kind { symbolic, sampled };
    Kind kind = Kind::symbolic;
    std::size_t trials = 0;
    std::uint64_t seed = 0;

    static CheckMode symbolic() { return {}; }
    static CheckMode sampled(std::size_t trials, std::uint64_t seed) { return {Kind::sampled, trials, seed}; }
    bool is_symbolic() const noexcept { return kind == Kind::symbolic; }
    std::string name() const { return is_symbolic() ? "symbolic" : "sampled"; }
};

struct CheckReport {
    std::string identity;
    std::string grid;
    std::string mode;
    std::size_t trials = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;  // informational lines that never fail the check

    bool passed() const noexcept { return failures.empty(); }
    void fail(std::string witness) { failures.push_back(std::move(witness)); }
    void note(std::string line) { notes.push_back(std::move(line)); }

    void absorb(const CheckReport& other) {
        trials += other.trials;
        for (const auto& f : other.failures) failures.push_back(other.grid.empty() ? f : other.grid + ": " + f);
        for (const auto& n : other.notes) notes.push_back(other.grid.empty() ? n : other.grid + ": " + n);
    }
};

}  // namespace landen
