#include "lrauzy/locations.hpp"

#include "lrauzy/fibnum.hpp"

#include <stdexcept>
#include <string>

namespace lrauzy {

namespace {

void check_jk(std::size_t j, std::size_t k) {
    if (k < 2)
        throw std::invalid_argument("k must be >= 2");
    if (j < 1 || j > k + 1)
        throw std::invalid_argument("j must be in 1..k+1, got " +
                                    std::to_string(j));
}

} // namespace

Pos LocationForm::position(std::uint64_t t) const {
    return t_coeff * t + beatty_coeff * floor_tau(t + 1) + offset;
}

Pos first_occurrence(std::size_t j, std::size_t k) {
    check_jk(j, k);
    std::size_t n = fibonacci_bracket(k);
    std::uint64_t fn = fibonacci_number(n);
    std::uint64_t fn1 = fibonacci_number(n + 1);
    if (j <= fn)
        return j;
    return j + fn1 - (k + 1);
}

LocationForm location_form(std::size_t j, std::size_t k) {
    check_jk(j, k);
    std::size_t n = fibonacci_bracket(k);
    std::uint64_t fn2 = fibonacci_number(n - 2);
    std::uint64_t fn1 = fibonacci_number(n - 1);
    std::uint64_t fn = fibonacci_number(n);
    std::uint64_t fnp1 = fibonacci_number(n + 1);
    if (fnp1 >= k + 1 && j <= fnp1 - k - 1)
        return LocationForm{fn1, fn2, j};
    if (j <= fn)
        return LocationForm{fn, fn1, j};
    return LocationForm{fnp1, fn, j + fnp1 - (k + 1)};
}

std::vector<Pos> locations(std::size_t j, std::size_t k, std::uint64_t t_max) {
    LocationForm form = location_form(j, k);
    std::vector<Pos> out;
    out.reserve(t_max + 1);
    for (std::uint64_t t = 0; t <= t_max; ++t)
        out.push_back(form.position(t));
    return out;
}

std::vector<Pos> locations_within(std::size_t j, std::size_t k,
                                  std::size_t prefix_len) {
    LocationForm form = location_form(j, k);
    std::vector<Pos> out;
    if (prefix_len < k)
        return out;
    Pos limit = prefix_len - k + 1;
    for (std::uint64_t t = 0;; ++t) {
        Pos p = form.position(t);
        if (p > limit)
            break;
        out.push_back(p);
    }
    return out;
}

Word fibonacci_factor(std::size_t j, std::size_t k) {
    check_jk(j, k);
    Pos p = first_occurrence(j, k);
    WordPrefix w = fibonacci_prefix(p + k - 1);
    return w.window(p, k);
}

std::uint64_t default_search_bound(std::size_t k, std::size_t ell) {
    return 10 * static_cast<std::uint64_t>(k - ell);
}

std::optional<Witness> reach_witness(std::size_t k, std::size_t ell,
                                     std::size_t j,
                                     std::uint64_t search_bound) {
    if (ell < 1 || ell > k - 1)
        throw std::invalid_argument("reach_witness: ell must be in 1..k-1");
    check_jk(j, k);
    LocationForm form = location_form(j, k);
    std::uint64_t step = k - ell;
    for (std::uint64_t t = 0; t <= search_bound; ++t) {
        Pos p = form.position(t);
        if ((p - 1) % step != 0)
            continue;
        Witness w;
        w.j = j;
        w.m = (p - 1) / step;
        w.t = t;
        w.position = p;
        w.factor = fibonacci_factor(j, k);
        WordPrefix prefix = fibonacci_prefix(p + k - 1);
        w.verified = prefix.window(p, k) == w.factor;
        return w;
    }
    return std::nullopt;
}

} // namespace lrauzy
