#include "isirank/params.hpp"

namespace isirank {

std::string to_string(EvalMode m) { return m == EvalMode::ISI ? "isi" : "flat"; }

EvalMode eval_mode_from_string(const std::string& s) {
    if (s == "isi" || s == "ISI") return EvalMode::ISI;
    if (s == "flat" || s == "FLAT") return EvalMode::FLAT;
    throw ParseError("unknown eval mode: " + s);
}

unsigned CodeParams::t_thr() const {
    return R * nu + (mt - 1) * (nu + 1) * ((1u << R) - 1);
}

unsigned CodeParams::rank_guarantee_threshold() const {
    const unsigned full = (nu + 1) * mt;
    if (R == 1) return full;
    return std::max(t_thr(), full + 1);
}

void CodeParams::validate() const {
    if (mt < 1) throw ParamsOutOfRange("M_t must be positive");
    if (mr < 1) throw ParamsOutOfRange("M_r must be positive");
    if (T < 1 || T > 32) throw ParamsOutOfRange("T must be in [1,32]");
    if (R < 1 || R > mt) throw ParamsOutOfRange("R must be in [1, M_t]");
    if (mode == EvalMode::ISI && T < (nu + 1) * mt)
        throw ParamsOutOfRange("ISI construction needs T >= (nu+1)*M_t");
}

gf2::Elem CodeParams::xi(const gf2::Field& f) const {
    return f.pow_alpha(static_cast<std::uint64_t>((1u << R) - 1) * (nu + 1));
}

gf2::Elem CodeParams::eval_point(const gf2::Field& f, unsigned j) const {
    if (mode == EvalMode::ISI) return f.pow(xi(f), j);
    return f.pow_alpha(j);
}

} // namespace isirank
