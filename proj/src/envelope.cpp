#include "wallflow/envelope.hpp"

#include <cmath>
#include <limits>

#include "wallflow/errors.hpp"

namespace wallflow {

void WeightEnvelope::validate() const {
    if (!(alpha >= 0.0) || !(p >= 0.0) || !(q >= 0.0)) throw DomainError("envelope: negative parameter");
    if (n != 0 && n != 1) throw DomainError("envelope: n must be 0 or 1");
}

double WeightEnvelope::operator()(double k, double t) const {
    return std::pow(t, -p) * mu_weight(alpha, 1.0, k, t) + std::pow(t, -q) * mu_weight(alpha, 2.0, k, t);
}

namespace {

template <class Env>
NormResult sup_ratio(const ModeField& f, Env&& env) {
    NormResult r;
    const auto& g = *f.grid();
    const auto k = g.k();
    const auto t = g.t();
    constexpr double tiny = std::numeric_limits<double>::min() * 1e10;
    for (std::size_t ik = 0; ik < g.nk(); ++ik) {
        for (std::size_t it = 0; it < g.nt(); ++it) {
            const double e = env(k[ik], t[it]);
            if (!(e > tiny)) {
                ++r.excluded;
                continue;
            }
            const double ratio = std::abs(f(ik, it)) / e;
            if (ratio > r.value) {
                r.value = ratio;
                r.arg_k = ik;
                r.arg_t = it;
            }
        }
    }
    return r;
}

}  // namespace

NormResult weighted_norm(const ModeField& f, const WeightEnvelope& env) {
    env.validate();
    if (f.order() != env.n) throw DomainError("weighted_norm: field order differs from envelope order");
    return sup_ratio(f, env);
}

NormResult d1_norm(const ModeField& f, const std::array<WeightEnvelope, 3>& comps) {
    for (const auto& c : comps) {
        c.validate();
        if (c.n != f.order()) throw DomainError("d1_norm: field order differs from envelope order");
    }
    return sup_ratio(f, [&](double k, double t) { return comps[0](k, t) + comps[1](k, t) + comps[2](k, t); });
}

std::array<WeightEnvelope, 3> d1_components(double alpha, double p, double q) {
    return {WeightEnvelope{alpha, p, q, 1}, WeightEnvelope{alpha - 0.5, p + 0.5, q + 0.5, 1},
            WeightEnvelope{alpha - 1.0, p + 0.5, q + 1.0, 1}};
}

}  // namespace wallflow
