#include "lrauzy/words.hpp"

#include "lrauzy/fibnum.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace lrauzy {

bool is_binary_word(const Word& w) {
    return std::all_of(w.begin(), w.end(),
                       [](char s) { return s == '0' || s == '1'; });
}

char complement_symbol(char s) {
    if (s == '0')
        return '1';
    if (s == '1')
        return '0';
    throw std::invalid_argument("complement_symbol: not a binary symbol");
}

Word complement_word(Word w) {
    for (char& s : w)
        s = complement_symbol(s);
    return w;
}

char WordPrefix::at(Pos i) const {
    if (i < 1 || i > symbols.size())
        throw std::out_of_range("WordPrefix::at: position out of range");
    return symbols[i - 1];
}

Word WordPrefix::window(Pos i, std::size_t k) const {
    if (i < 1 || k < 1 || i - 1 + k > symbols.size())
        throw std::out_of_range("WordPrefix::window: window out of range");
    return symbols.substr(i - 1, k);
}

std::string WordPrefix::descriptor() const {
    switch (source) {
    case WordSource::fibonacci:
        return "fibonacci";
    case WordSource::fibonacci_complement:
        return "fibonacci-c";
    case WordSource::thue_morse:
        return "thue-morse";
    case WordSource::periodic:
        return "periodic:" + period;
    case WordSource::literal:
        return "literal:" + symbols;
    }
    return "literal";
}

WordPrefix fibonacci_prefix(std::size_t min_len) {
    if (min_len < 1)
        throw std::invalid_argument("fibonacci_prefix: min_len must be >= 1");
    Word prev = "1"; // g_0
    Word cur = "0";  // g_1
    while (cur.size() < min_len) {
        Word next;
        next.reserve(cur.size() + prev.size());
        next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return WordPrefix{std::move(cur), WordSource::fibonacci, {}};
}

WordPrefix fibonacci_prefix_by_morphism(std::size_t min_len) {
    if (min_len < 1)
        throw std::invalid_argument(
            "fibonacci_prefix_by_morphism: min_len must be >= 1");
    Word w = "0";
    while (w.size() < min_len) {
        Word next;
        next.reserve(2 * w.size());
        for (char s : w) {
            if (s == '0')
                next += "01";
            else
                next += '0';
        }
        w = std::move(next);
    }
    return WordPrefix{std::move(w), WordSource::fibonacci, {}};
}

char fibonacci_letter(Pos n) {
    if (n < 1)
        throw std::invalid_argument("fibonacci_letter: n must be >= 1");
    return floor_tau(n + 1) - floor_tau(n) == 0 ? '1' : '0';
}

WordPrefix complement(const WordPrefix& w) {
    WordPrefix out;
    out.symbols = complement_word(w.symbols);
    switch (w.source) {
    case WordSource::fibonacci:
        out.source = WordSource::fibonacci_complement;
        break;
    case WordSource::fibonacci_complement:
        out.source = WordSource::fibonacci;
        break;
    case WordSource::periodic:
        out.source = WordSource::periodic;
        out.period = complement_word(w.period);
        break;
    default:
        out.source = WordSource::literal;
        break;
    }
    return out;
}

WordPrefix periodic_prefix(const Word& x, std::size_t min_len) {
    if (x.empty())
        throw std::invalid_argument("periodic_prefix: empty period");
    if (!is_binary_word(x))
        throw std::invalid_argument("periodic_prefix: period is not binary");
    Word w;
    while (w.size() < min_len)
        w += x;
    return WordPrefix{std::move(w), WordSource::periodic, x};
}

WordPrefix thue_morse_prefix(std::size_t min_len) {
    if (min_len < 1)
        throw std::invalid_argument("thue_morse_prefix: min_len must be >= 1");
    Word w = "0";
    while (w.size() < min_len) {
        Word next;
        next.reserve(2 * w.size());
        for (char s : w)
            next += (s == '0') ? "01" : "10";
        w = std::move(next);
    }
    return WordPrefix{std::move(w), WordSource::thue_morse, {}};
}

WordPrefix literal_word(Word w) {
    if (!is_binary_word(w))
        throw std::invalid_argument("literal_word: word is not binary");
    if (w.empty())
        throw std::invalid_argument("literal_word: empty word");
    return WordPrefix{std::move(w), WordSource::literal, {}};
}

std::size_t fibonacci_prefix_policy(std::size_t k) {
    std::size_t m = 1;
    while (fibonacci_number(m) <= k)
        ++m;
    return static_cast<std::size_t>(fibonacci_number(m + 1)) + k;
}

std::optional<std::size_t> FactorSet::index_of(const Word& u) const {
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (factors[i] == u)
            return i;
    return std::nullopt;
}

FactorSet factors(const WordPrefix& w, std::size_t k) {
    if (k < 1 || k > w.size())
        throw std::invalid_argument("factors: k out of range");
    FactorSet fs;
    fs.k = k;
    std::unordered_map<Word, std::size_t> seen;
    for (Pos p = 1; p + k - 1 <= w.size(); ++p) {
        Word u = w.window(p, k);
        if (seen.emplace(u, fs.factors.size()).second) {
            fs.factors.push_back(std::move(u));
            fs.first_occurrence.push_back(p);
        }
    }
    return fs;
}

OccurrenceList occurrences(const WordPrefix& w, const Word& u) {
    if (u.empty())
        throw std::invalid_argument("occurrences: empty factor");
    if (u.size() > w.size())
        throw std::invalid_argument("occurrences: factor longer than word");
    OccurrenceList out;
    out.factor = u;
    std::size_t from = 0;
    while (true) {
        std::size_t hit = w.symbols.find(u, from);
        if (hit == std::string::npos)
            break;
        out.positions.push_back(static_cast<Pos>(hit) + 1);
        from = hit + 1; // overlapping occurrences count
    }
    return out;
}

} // namespace lrauzy
