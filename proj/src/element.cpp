#include "bs1p/element.hpp"

#include <sstream>

namespace bs1p {

namespace {

BigInt pow_p(int p, long long e) {
    BigInt r = 1;
    BigInt base = p;
    long long n = e;
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

void normalize(GroupElement& x, int p) {
    if (x.num == 0) {
        x.e = 0;
        return;
    }
    while (x.e > 0 && x.num % p == 0) {
        x.num /= p;
        --x.e;
    }
}

}  // namespace

std::string GroupElement::str() const {
    std::ostringstream os;
    os << "(k=" << k << ", m=" << num.str();
    if (e > 0) os << "/p^" << e;
    os << ")";
    return os.str();
}

GroupElement identity_element() { return GroupElement{}; }

GroupElement apply_letter(const GroupElement& x, Letter s, const GroupParam& g) {
    GroupElement r = x;
    if (is_t(s)) {
        r.k += sign_of(s);
        return r;
    }
    // a^{+-1}: m становится m +- p^k, i.e. num/p^e +- p^k.
    long long shift = r.k + r.e;
    if (shift >= 0) {
        BigInt d = pow_p(g.p, shift);
        if (s == Letter::APos)
            r.num += d;
        else
            r.num -= d;
    } else {
        // Rescale to denominator p^{e - k} first.
        int e2 = static_cast<int>(-r.k);
        BigInt scale = pow_p(g.p, e2 - r.e);
        r.num *= scale;
        r.e = e2;
        if (s == Letter::APos)
            r.num += 1;
        else
            r.num -= 1;
    }
    normalize(r, g.p);
    return r;
}

GroupElement compose(const GroupElement& x, const GroupElement& y, const GroupParam& g) {
    // m = p^{x.k} * y.m + x.m
    GroupElement r;
    r.k = x.k + y.k;
    // p^{x.k} * y.num / p^{y.e}  ->  num_a / p^{ea}
    BigInt num_a = y.num;
    long long sh = x.k - y.e;
    int ea = 0;
    if (sh >= 0)
        num_a *= pow_p(g.p, sh);
    else
        ea = static_cast<int>(-sh);
    // Add x.num / p^{x.e} over the common denominator.
    int e = ea > x.e ? ea : x.e;
    r.num = num_a * pow_p(g.p, e - ea) + x.num * pow_p(g.p, e - x.e);
    r.e = e;
    normalize(r, g.p);
    return r;
}

GroupElement inverse_element(const GroupElement& x, const GroupParam& g) {
    // (k, m)^-1 = (-k, -m / p^k)
    GroupElement r;
    r.k = -x.k;
    long long sh = x.e + x.k;
    if (sh >= 0) {
        r.num = -x.num;
        r.e = static_cast<int>(sh);
    } else {
        r.num = -x.num * pow_p(g.p, -sh);
        r.e = 0;
    }
    normalize(r, g.p);
    return r;
}

GroupElement evaluate(const Word& w, const GroupParam& g) {
    GroupElement acc;
    for (Letter s : w) acc = apply_letter(acc, s, g);
    return acc;
}

}  // namespace bs1p
