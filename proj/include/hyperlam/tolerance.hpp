#pragma once

namespace hyperlam {

// Central tolerance knobs. Exact-map identities (Mobius algebra, closed-form
// capacities) are checked against `exact_identity`; the looser knobs belong to
// the numerical pipelines they name.
struct Tolerances {
    double exact_identity = 1e-12;
    double capacity_exact = 1e-9;
    double modular_inversion = 1e-10;
    double fekete_relative = 0.05;
};

const Tolerances& default_tolerances();

}  // namespace hyperlam
