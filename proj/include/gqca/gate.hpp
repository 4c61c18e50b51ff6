#pragma once

#include <complex>
#include <variant>

#include "gqca/errors.hpp"

namespace gqca {

using cxd = std::complex<double>;

// 2x2 complex matrix in the computational basis {|0>, |1>}.
// V|0> = u00|0> + u10|1>, V|1> = u01|0> + u11|1>.
struct Unitary2 {
    cxd u00, u01, u10, u11;

    Unitary2 dagger() const { return {std::conj(u00), std::conj(u10), std::conj(u01), std::conj(u11)}; }
    Unitary2 operator*(const Unitary2& o) const {
        return {u00 * o.u00 + u01 * o.u10, u00 * o.u01 + u01 * o.u11,
                u10 * o.u00 + u11 * o.u10, u10 * o.u01 + u11 * o.u11};
    }
};

// Deviation of V†V from the identity, in max-entry norm.
double unitarity_defect(const Unitary2& v);

// Local gate parametrized by a global phase, a mass and the lattice
// length: V = e^{i phi} [cos(m eps) sx + sin(m eps) sz].
struct MassFormParams {
    double phi = 0.0;
    double mass = 0.0;
    double eps = 1.0;
};

// Fully general local gate
//   V = [[ |a| e^{i alpha},          |b| e^{i beta} ],
//        [ -e^{i phi} |b| e^{-i beta}, e^{i phi} |a| e^{-i alpha} ]]
// with |b| = sqrt(1 - |a|^2).
struct GeneralFormParams {
    double mod_a = 1.0;
    double alpha = 0.0;
    double beta = 0.0;
    double phi = 0.0;
};

using GateParams = std::variant<MassFormParams, GeneralFormParams>;

Unitary2 build_local_gate(const GateParams& params);
Unitary2 mass_form_gate(const MassFormParams& p);
Unitary2 general_gate(double alpha, double beta, double mod_a, double phi);

// The constrained family 2(alpha+beta-phi) = 0 with alpha = phi - beta
// (+pi when s = -1). Any member leaves the signal dynamics invariant
// under the global bit flip.
GeneralFormParams color_blind_params(double beta, double mod_a, double phi, int s);

bool is_mass_form(const GateParams& p);
double gate_phi(const GateParams& p);

} // namespace gqca
