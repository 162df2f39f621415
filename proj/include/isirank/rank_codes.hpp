#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isirank/binmat.hpp"
#include "isirank/gf2.hpp"
#include "isirank/params.hpp"

namespace isirank {

/// f(x) = sum_l coeffs[l] * x^(2^l); additive in x.
struct LinPoly {
    std::vector<gf2::Elem> coeffs; // f_0..f_{R-1}

    bool is_zero() const {
        for (auto c : coeffs)
            if (c) return false;
        return true;
    }
};

gf2::Elem eval_linpoly(const gf2::Field& f, const LinPoly& p, gf2::Elem x);

/// Evaluations of f at the mode's points: c_f[j] = f(point_j).
std::vector<gf2::Elem> eval_vector(const gf2::Field& f, const LinPoly& p, const CodeParams& params);

/// The nu*M_t x R*T system whose right kernel is the coefficient-bit space of
/// S: row (i,j) encodes Tr(theta_(T-nu+i) f(point_j)) = 0, column l*T+t is the
/// bit of f_l at alpha^t.
BinMat build_constraint_system(const gf2::Field& f, const CodeParams& params);

/// Admissible polynomial set S, materialized as a kernel basis. Members are
/// indexed by kernel coordinates; index m is the XOR of basis rows selected
/// by the bits of m (ascending kernel-coordinate order).
class CodeSet {
public:
    CodeSet(const gf2::Field& f, const CodeParams& params);

    const CodeParams& params() const { return params_; }
    std::size_t kernel_dim() const { return basis_.rows(); }
    std::uint64_t size() const { return std::uint64_t{1} << kernel_dim(); }

    LinPoly poly_at(std::uint64_t index) const;
    const BinMat& kernel_basis() const { return basis_; }

private:
    CodeParams params_;
    BinMat basis_; // kernel_dim x (R*T)
};

/// Builds S and checks the enumeration budget. With exhaustive=true the whole
/// set must fit under `limit` or EnumerationTooLarge is thrown.
CodeSet enumerate_S(const gf2::Field& f, const CodeParams& params, std::uint64_t limit,
                    bool exhaustive = true);

/// M_t x T matrix C_f; row j is the basis expansion of f(point_j). In ISI
/// mode the last nu columns must come out zero (f in S), else NotZeroTailed.
BinMat codeword_matrix(const gf2::Field& f, const LinPoly& p, const CodeParams& params);

/// Toeplitz lift: stacks nu+1 copies of B, block r shifted right by r
/// columns. Requires the last nu columns of B to be zero.
BinMat theta_lift(const BinMat& b, unsigned nu);

struct RankReport {
    std::size_t min_rank = 0;
    std::uint64_t witness_index = 0; // kernel-coordinate index of a minimizer
    LinPoly witness;
    std::uint64_t scanned = 0;       // nonzero codewords examined
    std::uint64_t skipped = 0;       // not zero-tailed, hence not liftable (FLAT sets)
    bool exhaustive = true;          // false => statistical sample, not a proof
    std::size_t claimed = 0;
    bool ok() const { return scanned > 0 && min_rank >= claimed; }
};

/// Scans nonzero f in S and reports the minimum lifted rank against a claimed
/// bound (linearity reduces pairwise distance to nonzero-codeword rank).
/// Beyond `cap` codewords the scan samples uniformly and flags the report as
/// non-exhaustive.
RankReport verify_rank_distance(const gf2::Field& f, const CodeParams& params,
                                std::size_t claimed, unsigned threads = 1,
                                std::uint64_t cap = std::uint64_t{1} << 24,
                                std::uint64_t sample_seed = 0x5eed);

} // namespace isirank
