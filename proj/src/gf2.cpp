#include "isirank/gf2.hpp"

#include <array>
#include <cassert>

namespace isirank::gf2 {

namespace {

// Verified primitive polynomial per degree; T=5 pinned to x^5+x^4+x^2+x+1.
constexpr std::array<std::uint64_t, 33> kDefaultPoly = {
    0,         0x3,       0x7,        0xB,        0x13,       0x37,
    0x43,      0x83,      0x11D,      0x211,      0x409,      0x805,
    0x1053,    0x201B,    0x402B,     0x8003,     0x1002D,    0x20009,
    0x40027,   0x80027,   0x100009,   0x200005,   0x400003,   0x800021,
    0x100001B, 0x2000009, 0x4000047,  0x8000027,  0x10000009, 0x20000005,
    0x40000053, 0x80000009, 0x1000000AF,
};

// Distinct prime factors of 2^T-1 for 1 <= T <= 32.
const std::vector<std::uint64_t>& mersenne_factors(unsigned t) {
    static const std::array<std::vector<std::uint64_t>, 33> table = {{
        {},
        {},
        {3},
        {7},
        {3, 5},
        {31},
        {3, 7},
        {127},
        {3, 5, 17},
        {7, 73},
        {3, 11, 31},
        {23, 89},
        {3, 5, 7, 13},
        {8191},
        {3, 43, 127},
        {7, 31, 151},
        {3, 5, 17, 257},
        {131071},
        {3, 7, 19, 73},
        {524287},
        {3, 5, 11, 31, 41},
        {7, 127, 337},
        {3, 23, 89, 683},
        {47, 178481},
        {3, 5, 7, 13, 17, 241},
        {31, 601, 1801},
        {3, 2731, 8191},
        {7, 73, 262657},
        {3, 5, 29, 43, 113, 127},
        {233, 1103, 2089},
        {3, 7, 11, 31, 151, 331},
        {2147483647},
        {3, 5, 17, 257, 65537},
    }};
    return table[t];
}

} // namespace

std::uint64_t Field::default_poly(unsigned degree) {
    if (degree < 1 || degree > 32)
        throw DegreeMismatch("no default polynomial for degree " + std::to_string(degree));
    return kDefaultPoly[degree];
}

Field Field::with_default_poly(unsigned degree) {
    return make(degree, default_poly(degree));
}

Field Field::make(unsigned degree, std::uint64_t prim_poly) {
    if (degree < 1 || degree > 32)
        throw DegreeMismatch("extension degree must be in [1,32], got " + std::to_string(degree));
    if (prim_poly >> degree != 1)
        throw DegreeMismatch("polynomial does not have degree " + std::to_string(degree));

    Field f;
    f.t_ = degree;
    f.poly_ = prim_poly;
    // alpha = x mod poly; for T=1 the residue of x under x+c is c
    f.alpha_ = degree == 1 ? static_cast<Elem>(prim_poly & 1) : Elem(0b10);

    const std::uint64_t ord = f.order();
    if (f.pow(f.alpha_, ord) != 1)
        throw PolynomialNotPrimitive("order of the root does not divide 2^T-1");
    for (std::uint64_t p : mersenne_factors(degree)) {
        if (f.pow(f.alpha_, ord / p) == 1)
            throw PolynomialNotPrimitive("root has order dividing (2^T-1)/" + std::to_string(p));
    }
    f.compute_dual_basis();
    return f;
}

Elem Field::mul(Elem a, Elem b) const {
    // carry-less multiply then reduce; products fit in 64 bits for T <= 32
    std::uint64_t acc = 0;
    std::uint64_t aa = a;
    std::uint32_t bb = b;
    while (bb) {
        if (bb & 1) acc ^= aa;
        aa <<= 1;
        bb >>= 1;
    }
    for (int bit = 2 * static_cast<int>(t_) - 2; bit >= static_cast<int>(t_); --bit) {
        if ((acc >> bit) & 1) acc ^= poly_ << (bit - t_);
    }
    return static_cast<Elem>(acc);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    Elem base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw Error("inverse of zero");
    return pow(a, order() - 1);
}

Elem Field::frob(Elem a, unsigned k) const {
    Elem r = a;
    for (unsigned i = 0; i < k; ++i) r = mul(r, r);
    return r;
}

int Field::trace(Elem x) const {
    Elem s = 0;
    Elem t = x;
    for (unsigned i = 0; i < t_; ++i) {
        s ^= t;
        t = mul(t, t);
    }
    assert(s <= 1); // the trace lands in the base field
    return static_cast<int>(s);
}

void Field::compute_dual_basis() {
    // Solve C * G = I over GF(2), G[i][j] = Tr(alpha^(i+j)); row i of C gives
    // the coordinates of theta_i.
    const unsigned n = t_;
    std::vector<std::uint64_t> aug(n); // low n bits: G row, high n bits: identity
    std::vector<Elem> apow(2 * n);
    apow[0] = 1;
    for (unsigned k = 1; k < 2 * n; ++k) apow[k] = mul(apow[k - 1], alpha_);
    for (unsigned i = 0; i < n; ++i) {
        std::uint64_t row = 0;
        for (unsigned j = 0; j < n; ++j)
            row |= static_cast<std::uint64_t>(trace(apow[i + j])) << j;
        aug[i] = row | (std::uint64_t{1} << (n + i));
    }
    unsigned r = 0;
    for (unsigned c = 0; c < n; ++c) {
        unsigned p = r;
        while (p < n && !((aug[p] >> c) & 1)) ++p;
        if (p == n)
            throw SingularGramMatrix("trace form is degenerate; context is not a valid field");
        std::swap(aug[r], aug[p]);
        for (unsigned i = 0; i < n; ++i)
            if (i != r && ((aug[i] >> c) & 1)) aug[i] ^= aug[r];
        ++r;
    }
    dual_.resize(n);
    for (unsigned i = 0; i < n; ++i) dual_[i] = static_cast<Elem>(aug[i] >> n);
}

} // namespace isirank::gf2
