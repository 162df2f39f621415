#pragma once

#include <cstdint>
#include <string>

#include "isirank/errors.hpp"
#include "isirank/gf2.hpp"

namespace isirank {

enum class EvalMode { ISI, FLAT };

std::string to_string(EvalMode m);
EvalMode eval_mode_from_string(const std::string& s);

/// Code construction parameters. mode selects the evaluation points of the
/// linearized polynomial: ISI uses xi^0..xi^(M_t-1) with
/// xi = alpha^((2^R-1)(nu+1)); FLAT uses alpha^0..alpha^(M_t-1).
struct CodeParams {
    unsigned mt = 2;  // transmit antennas
    unsigned mr = 1;  // receive antennas
    unsigned nu = 0;  // ISI memory
    unsigned T = 0;   // block length = extension degree
    unsigned R = 1;   // rate, symbols per transmission
    EvalMode mode = EvalMode::ISI;

    unsigned d() const { return mt - R + 1; }

    /// Block-code threshold R*nu + (M_t-1)(nu+1)(2^R-1).
    unsigned t_thr() const;

    /// Lifted-rank guarantee (M_t-R+1)(nu+1), valid once thresholds are met.
    unsigned guaranteed_lift_rank() const { return d() * (nu + 1); }

    /// Threshold at which the lifted-rank guarantee provably holds:
    /// (nu+1)M_t for R=1, max(t_thr, (nu+1)M_t+1) otherwise.
    unsigned rank_guarantee_threshold() const;
    bool rank_guarantee_applies() const { return T >= rank_guarantee_threshold(); }

    /// Throws ParamsOutOfRange on structurally invalid parameters.
    void validate() const;

    gf2::Elem xi(const gf2::Field& f) const;
    gf2::Elem eval_point(const gf2::Field& f, unsigned j) const;
};

} // namespace isirank
