#ifndef LRAUZY_VERIFY_HPP
#define LRAUZY_VERIFY_HPP

#include "lrauzy/words.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace lrauzy {

/// The verification suites. Graph-structure checks run per (k, ℓ); the
/// location check runs per k. Location and witness checks are defined for
/// the Fibonacci word only; the structural laws are asserted for
/// Fibonacci-family words and reported informationally for anything else.
enum class Check {
    counts,
    degrees,
    closed_form,
    complement_iso,
    psi,
    connectivity,
    locations,
    witnesses,
};

const std::vector<Check>& all_checks();
std::string check_name(Check c);
std::optional<Check> parse_check(const std::string& name);

/// Parsed `--word` value: fibonacci | fibonacci-c | thue-morse |
/// periodic:<x> | literal:<w>.
struct WordSpec {
    WordSource source = WordSource::fibonacci;
    Word param; // period or literal body
};

WordSpec parse_word_source(const std::string& desc);
std::string word_spec_name(const WordSpec& spec);

/// Prefix length that exposes all factors up to max_factor_len for this
/// source (policy length for Fibonacci, recurrence-based margins otherwise).
std::size_t recommended_prefix(const WordSpec& spec, std::size_t max_factor_len);

/// Materializes a prefix of length ≥ min_len. For literals the word itself
/// is returned; it must be at least min_len long.
WordPrefix realize(const WordSpec& spec, std::size_t min_len);

struct VerifyOptions {
    std::string word = "fibonacci";
    std::size_t k_max = 30;
    std::vector<Check> checks;            // empty = all
    std::size_t location_window = 10000;  // scan prefix for the location check
    std::uint64_t search_bound_factor = 10; // witness bound = factor · (k−ℓ)
    std::size_t max_prefix = 0;           // 0 = unlimited
};

struct VerifyOutcome {
    std::size_t lines = 0;
    std::size_t failures = 0;
    bool pass() const { return failures == 0; }
};

/// Runs the selected suites for 2 ≤ k ≤ k_max, 1 ≤ ℓ ≤ k−1 and writes one
/// JSON line per check instance plus a final summary line, in deterministic
/// (k, ℓ, check) order. Failures become report entries, never exceptions.
VerifyOutcome run_verify(const VerifyOptions& options, std::ostream& out);

} // namespace lrauzy

#endif
