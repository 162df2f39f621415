#pragma once

#include <cstdint>
#include <vector>

#include "isirank/errors.hpp"

namespace isirank::gf2 {

// Element of GF(2^T), bit i = coordinate of alpha^i in the polynomial basis.
using Elem = std::uint32_t;

/// Arithmetic context for GF(2^T), 1 <= T <= 32, defined by a primitive
/// polynomial with root alpha. Immutable after construction; all operations
/// are pure and safe to call concurrently.
class Field {
public:
    /// Builds a field from a degree-T polynomial (bit k = coefficient of x^k).
    /// Throws DegreeMismatch if the polynomial does not have degree T, and
    /// PolynomialNotPrimitive unless the order of x mod poly is exactly 2^T-1
    /// (which certifies both irreducibility and primitivity).
    static Field make(unsigned degree, std::uint64_t prim_poly);

    static Field with_default_poly(unsigned degree);

    /// Default primitive polynomial for a supported degree.
    /// The T=5 entry is x^5+x^4+x^2+x+1.
    static std::uint64_t default_poly(unsigned degree);

    unsigned degree() const { return t_; }
    std::uint64_t poly() const { return poly_; }
    std::uint64_t card() const { return std::uint64_t{1} << t_; }
    std::uint64_t order() const { return (std::uint64_t{1} << t_) - 1; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem alpha() const { return alpha_; }

    static Elem add(Elem a, Elem b) { return a ^ b; }
    Elem mul(Elem a, Elem b) const;
    Elem sqr(Elem a) const { return mul(a, a); }
    Elem pow(Elem a, std::uint64_t e) const;
    Elem pow_alpha(std::uint64_t e) const { return pow(alpha_, e); }
    Elem inv(Elem a) const;
    /// a^(2^k), the k-fold Frobenius.
    Elem frob(Elem a, unsigned k) const;

    /// Tr(x) = x + x^2 + ... + x^(2^(T-1)), valued in {0,1}.
    int trace(Elem x) const;

    /// Trace-dual basis theta_0..theta_{T-1}: Tr(theta_i alpha^j) = [i==j].
    const std::vector<Elem>& dual_basis() const { return dual_; }

    /// Coordinates of x in the basis {alpha^0..alpha^(T-1)}, packed with
    /// bit i = beta_i. Elements are stored by exactly these coordinates, so
    /// this is the identity reinterpretation; the dual-basis extraction
    /// beta_i = Tr(theta_i x) is kept as a checked invariant in the tests.
    std::uint32_t expand(Elem x) const { return x; }

    bool valid(Elem x) const { return t_ == 32 || (x >> t_) == 0; }

private:
    Field() = default;
    void compute_dual_basis();

    unsigned t_ = 0;
    std::uint64_t poly_ = 0;
    Elem alpha_ = 0;
    std::vector<Elem> dual_;
};

} // namespace isirank::gf2
