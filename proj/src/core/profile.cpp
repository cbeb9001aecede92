#include "core/profile.hpp"

#include <json.hpp>

#include "core/anf.hpp"
#include "core/sensitivity.hpp"
#include "core/walsh.hpp"

namespace bf {

FunctionProfile profile(const TruthTable& f) {
    FunctionProfile p;
    p.n = f.n();
    WalshSpectrum w = walsh_transform(f);
    p.pdeg = pdeg(w);
    p.adeg = algebraic_degree(f);
    p.resiliency_order = resiliency_order(w);
    p.nonlinearity = nonlinearity(w);
    p.balanced = w.coeffs[0] == 0;
    WitnessedValue s = sensitivity(f);
    p.sensitivity = s.value;
    if (s.value > 0) p.sensitivity_witness = s.witness;
    p.sensitivity_order = max_sensitivity_order(f).value;
    WitnessedValue dso = max_dual_sensitivity_order(f);
    p.dual_sensitivity_order = dso.value;
    if (dso.has_witness) p.dual_witness = dso.witness;
    return p;
}

std::string profile_json(const FunctionProfile& p) {
    nlohmann::json j;
    j["n"] = p.n;
    j["pdeg"] = p.pdeg;
    j["adeg"] = p.adeg;
    j["resiliency_order"] = p.resiliency_order;
    j["nonlinearity"] = p.nonlinearity;
    j["sensitivity"] = p.sensitivity;
    j["sensitivity_order"] = p.sensitivity_order;
    j["dual_sensitivity_order"] = p.dual_sensitivity_order;
    j["balanced"] = p.balanced;
    if (p.sensitivity_witness) j["sensitivity_witness"] = *p.sensitivity_witness;
    else j["sensitivity_witness"] = nullptr;
    if (p.dual_witness) j["dual_witness"] = *p.dual_witness;
    else j["dual_witness"] = nullptr;
    return j.dump();
}

}  // namespace bf
