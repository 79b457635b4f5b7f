#include "lrauzy/fibnum.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lrauzy {

namespace {

const std::vector<std::uint64_t>& fib_table() {
    static const std::vector<std::uint64_t> table = [] {
        std::vector<std::uint64_t> t(kMaxFibIndex + 1);
        t[0] = 1;
        t[1] = 1;
        for (std::size_t i = 2; i < t.size(); ++i)
            t[i] = t[i - 1] + t[i - 2];
        return t;
    }();
    return table;
}

} // namespace

std::uint64_t fibonacci_number(std::size_t n) {
    if (n > kMaxFibIndex)
        throw std::overflow_error("fibonacci_number: F_n exceeds 64 bits for n = " +
                                  std::to_string(n));
    return fib_table()[n];
}

std::uint64_t isqrt(unsigned __int128 x) {
    if (x == 0)
        return 0;
    // long double has a 64-bit mantissa on x86, so the seed is within a few
    // ulps of the true root; the correction loops make it exact.
    auto r = static_cast<std::uint64_t>(sqrtl(static_cast<long double>(x)));
    while (r > 0 && static_cast<unsigned __int128>(r) * r > x)
        --r;
    while (r < UINT64_MAX &&
           static_cast<unsigned __int128>(r + 1) * (r + 1) <= x)
        ++r;
    return r;
}

std::uint64_t floor_tau(std::uint64_t n) {
    unsigned __int128 nn = static_cast<unsigned __int128>(n) * n;
    return (isqrt(5 * nn) - n) / 2;
}

std::size_t fibonacci_bracket(std::uint64_t k) {
    if (k < 2)
        throw std::invalid_argument("fibonacci_bracket: k must be >= 2");
    const auto& t = fib_table();
    for (std::size_t n = 2; n + 1 < t.size(); ++n)
        if (t[n] <= k && k < t[n + 1])
            return n;
    throw std::overflow_error("fibonacci_bracket: k out of table range");
}

std::vector<std::size_t> zeckendorf(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("zeckendorf: n must be >= 1");
    const auto& t = fib_table();
    std::vector<std::size_t> indices;
    std::uint64_t rest = n;
    std::size_t i = t.size() - 1;
    while (rest > 0) {
        while (t[i] > rest)
            --i;
        indices.push_back(i);
        rest -= t[i];
        // skip the adjacent index; i >= 1 always holds because F_1 = 1
        i = (i >= 2) ? i - 2 : 0;
    }
    return indices;
}

std::uint64_t gcd3(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return std::gcd(std::gcd(a, b), c);
}

bool diophantine_solvable(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                          std::int64_t d) {
    if (a == 0 || b == 0 || c == 0)
        throw std::invalid_argument("diophantine_solvable: a, b, c must be >= 1");
    std::uint64_t g = gcd3(a, b, c);
    std::uint64_t ad = d < 0 ? static_cast<std::uint64_t>(-(d + 1)) + 1
                             : static_cast<std::uint64_t>(d);
    return ad % g == 0;
}

} // namespace lrauzy
