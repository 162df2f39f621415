#include "isirank/rank_codes.hpp"

#include <algorithm>
#include <thread>

#include "isirank/rng.hpp"

namespace isirank {

using gf2::Elem;
using gf2::Field;

Elem eval_linpoly(const Field& f, const LinPoly& p, Elem x) {
    Elem acc = 0;
    Elem xp = x; // x^(2^l)
    for (std::size_t l = 0; l < p.coeffs.size(); ++l) {
        acc ^= f.mul(p.coeffs[l], xp);
        xp = f.mul(xp, xp);
    }
    return acc;
}

std::vector<Elem> eval_vector(const Field& f, const LinPoly& p, const CodeParams& params) {
    std::vector<Elem> c(params.mt);
    for (unsigned j = 0; j < params.mt; ++j) c[j] = eval_linpoly(f, p, params.eval_point(f, j));
    return c;
}

BinMat build_constraint_system(const Field& f, const CodeParams& params) {
    params.validate();
    if (f.degree() != params.T) throw ParamsOutOfRange("field degree does not match T");

    const unsigned T = params.T;
    const unsigned nrows = params.mode == EvalMode::ISI ? params.nu * params.mt : 0;
    BinMat a(nrows, params.R * T);
    if (nrows == 0) return a;

    const auto& theta = f.dual_basis();
    std::vector<Elem> points(params.mt);
    for (unsigned j = 0; j < params.mt; ++j) points[j] = params.eval_point(f, j);

    for (unsigned i = 0; i < params.nu; ++i) {
        const Elem th = theta[T - params.nu + i];
        for (unsigned j = 0; j < params.mt; ++j) {
            const std::size_t row = static_cast<std::size_t>(i) * params.mt + j;
            Elem pw = points[j]; // point^(2^l)
            for (unsigned l = 0; l < params.R; ++l) {
                const Elem tp = f.mul(th, pw);
                for (unsigned t = 0; t < T; ++t) {
                    if (f.trace(f.mul(tp, f.pow_alpha(t))))
                        a.set(row, static_cast<std::size_t>(l) * T + t, 1);
                }
                pw = f.mul(pw, pw);
            }
        }
    }
    return a;
}

CodeSet::CodeSet(const Field& f, const CodeParams& params) : params_(params) {
    basis_ = build_constraint_system(f, params).right_kernel_basis();
    // Theorem bound: kernel dimension >= RT - nu*M_t
    const long bound = static_cast<long>(params.R) * params.T -
                       (params.mode == EvalMode::ISI
                            ? static_cast<long>(params.nu) * params.mt
                            : 0);
    if (static_cast<long>(basis_.rows()) < bound)
        throw Error("kernel dimension fell below RT - nu*M_t; construction is broken");
}

LinPoly CodeSet::poly_at(std::uint64_t index) const {
    if (index >= size()) throw IndexOutOfRange("codeword index out of range");
    const unsigned T = params_.T;
    std::vector<std::uint64_t> bits((params_.R * T + 63) / 64, 0);
    for (std::size_t k = 0; k < basis_.rows(); ++k) {
        if ((index >> k) & 1) {
            const std::uint64_t* row = basis_.row_words(k);
            for (std::size_t w = 0; w < basis_.words_per_row(); ++w) bits[w] ^= row[w];
        }
    }
    LinPoly p;
    p.coeffs.assign(params_.R, 0);
    for (unsigned l = 0; l < params_.R; ++l)
        for (unsigned t = 0; t < T; ++t) {
            const std::size_t b = static_cast<std::size_t>(l) * T + t;
            if ((bits[b / 64] >> (b % 64)) & 1) p.coeffs[l] |= Elem{1} << t;
        }
    return p;
}

CodeSet enumerate_S(const Field& f, const CodeParams& params, std::uint64_t limit,
                    bool exhaustive) {
    CodeSet s(f, params);
    if (exhaustive && (s.kernel_dim() >= 64 || s.size() > limit))
        throw EnumerationTooLarge("set of size 2^" + std::to_string(s.kernel_dim()) +
                                  " exceeds the enumeration limit");
    return s;
}

BinMat codeword_matrix(const Field& f, const LinPoly& p, const CodeParams& params) {
    const unsigned T = params.T;
    BinMat c(params.mt, T);
    for (unsigned j = 0; j < params.mt; ++j) {
        const std::uint32_t row = f.expand(eval_linpoly(f, p, params.eval_point(f, j)));
        for (unsigned t = 0; t < T; ++t)
            if ((row >> t) & 1) c.set(j, t, 1);
    }
    if (params.mode == EvalMode::ISI && !c.tail_is_zero(params.nu))
        throw NotZeroTailed("polynomial is not in S: codeword tail is nonzero");
    return c;
}

BinMat theta_lift(const BinMat& b, unsigned nu) {
    if (!b.tail_is_zero(nu)) throw TailNotZero("last nu columns must be zero before lifting");
    const std::size_t mt = b.rows();
    const std::size_t T = b.cols();
    BinMat u((nu + 1) * mt, T);
    for (unsigned r = 0; r <= nu; ++r)
        for (std::size_t i = 0; i < mt; ++i)
            for (std::size_t c = 0; c + r < T; ++c)
                if (b.get(i, c)) u.set(r * mt + i, c + r, 1);
    return u;
}

namespace {

struct ScanResult {
    std::size_t min_rank = SIZE_MAX;
    std::uint64_t min_index = 0;
    std::uint64_t scanned = 0;
    std::uint64_t skipped = 0;

    void absorb(const ScanResult& o) {
        scanned += o.scanned;
        skipped += o.skipped;
        if (o.min_rank < min_rank || (o.min_rank == min_rank && o.min_index < min_index)) {
            min_rank = o.min_rank;
            min_index = o.min_index;
        }
    }
};

ScanResult scan_range(const Field& f, const CodeSet& set, const CodeParams& params,
                      const std::vector<std::uint64_t>* sample, std::uint64_t begin,
                      std::uint64_t end) {
    ScanResult r;
    for (std::uint64_t i = begin; i < end; ++i) {
        const std::uint64_t idx = sample ? (*sample)[i] : i;
        const LinPoly p = set.poly_at(idx);
        if (p.is_zero()) continue;
        const BinMat c = codeword_matrix(f, p, params);
        if (!c.tail_is_zero(params.nu)) { // FLAT sets: only zero-tailed words lift
            ++r.skipped;
            continue;
        }
        const std::size_t rk = theta_lift(c, params.nu).rank();
        ++r.scanned;
        if (rk < r.min_rank || (rk == r.min_rank && idx < r.min_index)) {
            r.min_rank = rk;
            r.min_index = idx;
        }
    }
    return r;
}

} // namespace

RankReport verify_rank_distance(const Field& f, const CodeParams& params, std::size_t claimed,
                                unsigned threads, std::uint64_t cap,
                                std::uint64_t sample_seed) {
    const CodeSet set(f, params);
    RankReport rep;
    rep.claimed = claimed;

    std::vector<std::uint64_t> sample;
    std::uint64_t count;
    if (set.kernel_dim() >= 64 || set.size() - 1 > cap) {
        rep.exhaustive = false;
        SplitMix64 rng = derive_stream(sample_seed, set.kernel_dim(), cap);
        sample.reserve(cap);
        while (sample.size() < cap) {
            std::uint64_t idx =
                set.kernel_dim() >= 64 ? rng.next() : rng.below(set.size());
            if (idx != 0) sample.push_back(idx);
        }
        count = cap;
    } else {
        count = set.size() - 1; // scan indices 1..size-1
    }

    const std::vector<std::uint64_t>* sp = rep.exhaustive ? nullptr : &sample;
    const std::uint64_t base = rep.exhaustive ? 1 : 0;

    ScanResult total;
    if (threads <= 1 || count < 256) {
        total = scan_range(f, set, params, sp, base, base + count);
    } else {
        const unsigned nt = std::min<unsigned>(threads, 64);
        std::vector<ScanResult> parts(nt);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nt; ++t) {
            const std::uint64_t lo = base + count * t / nt;
            const std::uint64_t hi = base + count * (t + 1) / nt;
            pool.emplace_back([&, t, lo, hi] { parts[t] = scan_range(f, set, params, sp, lo, hi); });
        }
        for (auto& th : pool) th.join();
        for (const auto& p : parts) total.absorb(p);
    }

    rep.min_rank = total.min_rank == SIZE_MAX ? 0 : total.min_rank;
    rep.witness_index = total.min_index;
    rep.witness = set.poly_at(total.min_index);
    rep.scanned = total.scanned;
    rep.skipped = total.skipped;
    return rep;
}

} // namespace isirank
