#include "bs1p/word.hpp"

#include <cctype>

namespace bs1p {

std::string form_name(WordForm f) {
    switch (f) {
        case WordForm::E: return "E";
        case WordForm::P: return "P";
        case WordForm::N: return "N";
        case WordForm::PN: return "PN";
        case WordForm::NP: return "NP";
        case WordForm::NPN: return "NPN";
        case WordForm::PNP: return "PNP";
        default: return "OTHER";
    }
}

namespace {

// Guards against pathological exponents allocating absurd amounts of memory.
constexpr long long kMaxExponent = 1LL << 24;

Letter letter_from_char(char c) {
    switch (c) {
        case 'a': return Letter::APos;
        case 'A': return Letter::ANeg;
        case 't': return Letter::TPos;
        case 'T': return Letter::TNeg;
        default: throw ParseError(std::string("unexpected character '") + c + "'");
    }
}

}  // namespace

Word parse_word(const std::string& text) {
    Word out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Letter base = letter_from_char(c);
        ++i;
        long long count = 1;
        if (i < n && text[i] == '^') {
            ++i;
            bool neg = false;
            if (i < n && (text[i] == '-' || text[i] == '+')) {
                neg = text[i] == '-';
                ++i;
            }
            if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("malformed exponent");
            long long v = 0;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > kMaxExponent) throw ParseError("exponent too large");
                ++i;
            }
            count = neg ? -v : v;
        }
        Letter eff = count >= 0 ? base : inverse(base);
        long long reps = count >= 0 ? count : -count;
        for (long long r = 0; r < reps; ++r) out.push_back(eff);
    }
    return out;
}

std::string format_word(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Letter x : w) s.push_back(letter_char(x));
    return s;
}

Word invert_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
    return out;
}

Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Letter x : w) {
        if (!out.empty() && out.back() == inverse(x))
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

long long t_exponent_sum(const Word& w) {
    long long s = 0;
    for (Letter x : w)
        if (is_t(x)) s += sign_of(x);
    return s;
}

WordForm classify_form(const Word& w) {
    // Collect the sign sequence of maximal t-blocks.
    int blocks[4];
    int nblocks = 0;
    int prev = 0;
    for (Letter x : w) {
        if (!is_t(x)) continue;
        int s = sign_of(x);
        if (s != prev) {
            if (nblocks == 4) return WordForm::OTHER;
            blocks[nblocks++] = s;
            prev = s;
        }
    }
    if (nblocks == 0) return WordForm::E;
    if (nblocks == 1) return blocks[0] > 0 ? WordForm::P : WordForm::N;
    if (nblocks == 2) return blocks[0] > 0 ? WordForm::PN : WordForm::NP;
    if (nblocks == 3) return blocks[0] > 0 ? WordForm::PNP : WordForm::NPN;
    return WordForm::OTHER;
}

}  // namespace bs1p
