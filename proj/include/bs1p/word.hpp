#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bs1p {

// Group parameter p of BS(1,p) = <a, t | t a t^-1 = a^p>, p >= 2.
struct GroupParam {
    int p;
    explicit GroupParam(int p_) : p(p_) {
        if (p < 2) throw std::invalid_argument("GroupParam: p must be >= 2");
    }
};

enum class Letter : std::uint8_t { APos = 0, ANeg = 1, TPos = 2, TNeg = 3 };

constexpr Letter inverse(Letter x) {
    switch (x) {
        case Letter::APos: return Letter::ANeg;
        case Letter::ANeg: return Letter::APos;
        case Letter::TPos: return Letter::TNeg;
        default: return Letter::TPos;
    }
}

constexpr bool is_t(Letter x) { return x == Letter::TPos || x == Letter::TNeg; }
constexpr bool is_a(Letter x) { return x == Letter::APos || x == Letter::ANeg; }

// +1 for a/t, -1 for their inverses.
constexpr int sign_of(Letter x) {
    return (x == Letter::APos || x == Letter::TPos) ? 1 : -1;
}

constexpr char letter_char(Letter x) {
    switch (x) {
        case Letter::APos: return 'a';
        case Letter::ANeg: return 'A';
        case Letter::TPos: return 't';
        default: return 'T';
    }
}

using Word = std::vector<Letter>;

// Classification by the sign pattern of maximal t-letter blocks.
// E = no t-letters at all; OTHER = four or more alternations.
enum class WordForm { E, P, N, PN, NP, NPN, PNP, OTHER };

std::string form_name(WordForm f);

class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Surface syntax: letters a,A,t,T; optional <letter>^<signed integer>;
// whitespace ignored. No reduction is performed.
Word parse_word(const std::string& text);

// One character per letter; parse_word(format_word(w)) == w.
std::string format_word(const Word& w);

// Reversed sequence with every letter inverted.
Word invert_word(const Word& w);

// Single left-to-right pass with a retractable output stack.
Word free_reduce(const Word& w);

long long t_exponent_sum(const Word& w);

WordForm classify_form(const Word& w);

}  // namespace bs1p
