#pragma once

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "bs1p/word.hpp"

namespace bs1p {

using BigInt = boost::multiprecision::cpp_int;

// Exact element of BS(1,p) as the affine map x -> p^k * x + m with
// m = num / p^e, kept normalized so that e == 0 or p does not divide num.
// Composition (k1,m1)(k2,m2) = (k1+k2, p^k1 * m2 + m1), leftmost letter
// outermost under evaluate().
struct GroupElement {
    long long k = 0;
    BigInt num = 0;
    int e = 0;

    bool operator==(const GroupElement& o) const {
        return k == o.k && e == o.e && num == o.num;
    }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }

    bool is_identity() const { return k == 0 && num == 0; }
    std::string str() const;
};

struct GroupElementHash {
    std::size_t operator()(const GroupElement& x) const {
        std::size_t seed = 0;
        boost::hash_combine(seed, x.k);
        boost::hash_combine(seed, x.num);
        boost::hash_combine(seed, x.e);
        return seed;
    }
};

GroupElement identity_element();

// Right-multiply by a single generator letter.
GroupElement apply_letter(const GroupElement& x, Letter s, const GroupParam& g);

GroupElement compose(const GroupElement& x, const GroupElement& y, const GroupParam& g);

GroupElement inverse_element(const GroupElement& x, const GroupParam& g);

GroupElement evaluate(const Word& w, const GroupParam& g);

inline bool elements_equal(const GroupElement& x, const GroupElement& y) { return x == y; }

}  // namespace bs1p
