#ifndef LRAUZY_FIBNUM_HPP
#define LRAUZY_FIBNUM_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lrauzy {

/// Fibonacci numbers indexed so that F_0 = F_1 = 1, F_2 = 2, F_3 = 3, F_4 = 5.
/// This matches the length sequence of the finite Fibonacci words g_n.
/// F_92 is the largest value that fits in 64 bits under this indexing.
inline constexpr std::size_t kMaxFibIndex = 92;

/// F_n. Throws std::overflow_error for n > kMaxFibIndex.
std::uint64_t fibonacci_number(std::size_t n);

/// Floor square root, exact for the whole 128-bit range we use.
std::uint64_t isqrt(unsigned __int128 x);

/// ⌊n·τ⌋ with τ = (√5−1)/2, computed as ⌊(isqrt(5n²) − n)/2⌋.
/// No floating point is involved, so the value is exact for all
/// n ≤ 1.8e18 (where 5n² still fits in 128 bits).
std::uint64_t floor_tau(std::uint64_t n);

/// The unique n ≥ 2 with F_n ≤ k < F_{n+1}. When k is itself a Fibonacci
/// number the lower bracket is chosen. Requires k ≥ 2.
std::size_t fibonacci_bracket(std::uint64_t k);

/// Zeckendorf decomposition: strictly decreasing Fibonacci indices ≥ 1,
/// no two adjacent, whose values sum to n. Greedy, hence unique.
/// Requires n ≥ 1.
std::vector<std::size_t> zeckendorf(std::uint64_t n);

std::uint64_t gcd3(std::uint64_t a, std::uint64_t b, std::uint64_t c);

/// Whether a·x1 − b·x2 − c·x3 = d has integer solutions,
/// i.e. whether gcd(a,b,c) divides d. Requires a, b, c ≥ 1.
bool diophantine_solvable(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                          std::int64_t d);

} // namespace lrauzy

#endif
