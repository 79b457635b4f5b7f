#ifndef LRAUZY_WORDS_HPP
#define LRAUZY_WORDS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lrauzy {

/// A finite binary word over the alphabet {0, 1}, stored as '0'/'1' chars.
using Word = std::string;

/// 1-based position inside a word.
using Pos = std::uint64_t;

bool is_binary_word(const Word& w);
char complement_symbol(char s);
Word complement_word(Word w);

enum class WordSource {
    fibonacci,
    fibonacci_complement,
    thue_morse,
    periodic,
    literal,
};

/// A finite prefix of an infinite word. Positions are 1-based: at(i) is the
/// i-th letter, window(i, k) is the length-k factor starting at position i.
struct WordPrefix {
    Word symbols;
    WordSource source = WordSource::literal;
    Word period; // nonempty iff source == periodic

    std::size_t size() const { return symbols.size(); }
    char at(Pos i) const;
    Word window(Pos i, std::size_t k) const;
    std::string descriptor() const;
    bool is_fibonacci_family() const {
        return source == WordSource::fibonacci ||
               source == WordSource::fibonacci_complement;
    }
};

/// The shortest finite Fibonacci word g_n (n ≥ 1) of length ≥ min_len,
/// built from the recurrence g_1 = "0", g_2 = "01", g_n = g_{n−1} g_{n−2}.
WordPrefix fibonacci_prefix(std::size_t min_len);

/// Same word family, generated by iterating the morphism 0→01, 1→0 on "0".
WordPrefix fibonacci_prefix_by_morphism(std::size_t min_len);

/// n-th letter of the infinite Fibonacci word: '1' iff ⌊(n+1)τ⌋ − ⌊nτ⌋ = 0.
/// Exact integer arithmetic throughout. Requires n ≥ 1.
char fibonacci_letter(Pos n);

/// Letterwise 0↔1 swap; an involution.
WordPrefix complement(const WordPrefix& w);

/// Prefix of the periodic word xxx… of length ≥ min_len, as a whole number
/// of repetitions of x. Requires nonempty x.
WordPrefix periodic_prefix(const Word& x, std::size_t min_len);

/// Prefix of the Thue–Morse word (morphism 0→01, 1→10, seed "0").
WordPrefix thue_morse_prefix(std::size_t min_len);

WordPrefix literal_word(Word w);

/// Prefix length of the Fibonacci word guaranteed to expose all of its
/// length-k factors: F_{m+1} + k where F_m is the least Fibonacci number > k.
std::size_t fibonacci_prefix_policy(std::size_t k);

/// The distinct length-k factors of a word, in first-occurrence order.
struct FactorSet {
    std::size_t k = 0;
    std::vector<Word> factors;
    std::vector<Pos> first_occurrence; // parallel to factors

    std::size_t size() const { return factors.size(); }
    std::optional<std::size_t> index_of(const Word& u) const;
};

/// All distinct length-k windows of w with their first positions.
/// Requires 1 ≤ k ≤ |w|.
FactorSet factors(const WordPrefix& w, std::size_t k);

struct OccurrenceList {
    Word factor;
    std::vector<Pos> positions; // strictly increasing, 1-based
};

/// Every position p with w[p; |u|] = u, overlaps included.
/// Requires |u| ≤ |w| and nonempty u.
OccurrenceList occurrences(const WordPrefix& w, const Word& u);

} // namespace lrauzy

#endif
