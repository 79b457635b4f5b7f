#ifndef LRAUZY_LOCATIONS_HPP
#define LRAUZY_LOCATIONS_HPP

#include "lrauzy/words.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lrauzy {

/// Closed form for the occurrence positions of one length-k factor of the
/// infinite Fibonacci word: { t_coeff·t + beatty_coeff·⌊(t+1)τ⌋ + offset : t ≥ 0 }.
/// The generated sequence is strictly increasing in t.
struct LocationForm {
    std::uint64_t t_coeff;
    std::uint64_t beatty_coeff;
    std::uint64_t offset;

    Pos position(std::uint64_t t) const;
};

/// Position of the first occurrence of the j-th length-k factor of the
/// Fibonacci word (factors ordered by first occurrence, j is 1-based):
/// j for 1 ≤ j ≤ F_n, else j + F_{n+1} − (k+1), with F_n ≤ k < F_{n+1}.
/// Requires k ≥ 2 and 1 ≤ j ≤ k+1.
Pos first_occurrence(std::size_t j, std::size_t k);

/// The location form of the j-th length-k factor. Piecewise in j:
///   (F_{n−1}, F_{n−2}, j)                 for 1 ≤ j ≤ F_{n+1}−k−1
///   (F_n,     F_{n−1}, j)                 for F_{n+1}−k ≤ j ≤ F_n
///   (F_{n+1}, F_n,     j+F_{n+1}−(k+1))   for F_n+1 ≤ j ≤ k+1
LocationForm location_form(std::size_t j, std::size_t k);

/// Evaluates the location form for t = 0..t_max.
std::vector<Pos> locations(std::size_t j, std::size_t k, std::uint64_t t_max);

/// All form positions that fit a scan window: p + k − 1 ≤ prefix_len.
std::vector<Pos> locations_within(std::size_t j, std::size_t k,
                                  std::size_t prefix_len);

/// v_j: the j-th length-k factor of the Fibonacci word, 1-based.
Word fibonacci_factor(std::size_t j, std::size_t k);

/// Certifies that the j-th length-k factor occurs at a position of the form
/// 1 + m(k−ℓ), i.e. on the stepping path that starts at position 1.
struct Witness {
    std::size_t j = 0;
    std::uint64_t m = 0;
    std::uint64_t t = 0;
    Pos position = 0;
    Word factor;
    bool verified = false;
};

/// Default bound on t when searching for a witness: 10·(k−ℓ).
std::uint64_t default_search_bound(std::size_t k, std::size_t ell);

/// Smallest t ≤ search_bound whose form position is ≡ 1 (mod k−ℓ); the
/// returned position is re-checked against the word itself. Returns nullopt
/// when no such t exists within the bound.
std::optional<Witness> reach_witness(std::size_t k, std::size_t ell,
                                     std::size_t j,
                                     std::uint64_t search_bound);

} // namespace lrauzy

#endif
