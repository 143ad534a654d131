#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lef/genera.hpp"

namespace lef {

/// A concrete foliated model: ring, tangent data, and bookkeeping.
struct SpaceModel {
    RingPtr ring;
    std::optional<EquivariantBundle> tangent_roots;
    std::optional<TotalClassBundle> tangent_class;
    std::optional<EquivariantBundle> W;  // twisting bundle when the builder provides one
    int dimension = 0;
    std::string name;
};

/// One normal summand N(theta) on which h acts by e^{i theta}.
struct NormalSummand {
    Angle theta;
    EquivariantBundle bundle;  // COMPLEX, dim = rank()
};

/// Fixed-point component V^h with its leafwise/normal decomposition,
/// restricted twisting bundle, and the currents available for pairing.
struct FixedComponentModel {
    SpaceModel space;
    EquivariantBundle leafwise;  // TF^h, REAL; rank 0 on strict transversals
    EquivariantBundle normal_minus1;  // N(-1), REAL half-roots
    int s1 = 0;                       // real dim of N(-1)
    std::vector<NormalSummand> normal;
    std::optional<EquivariantBundle> twist;
    std::vector<Current> currents;
    int multiplicity = 1;
    std::string name;
};

/// CP_q: ring Q[alpha]/alpha^{q+1}, deg alpha = 2, integral alpha^q = 1;
/// tangent total Pontryagin class (1 + alpha^2)^{q+1}.
SpaceModel build_cp(int q);

/// KP_{q-1} (qm1 = q-1 >= 1): ring Q[alpha]/alpha^q, deg alpha = 4;
/// total Pontryagin class (1 + 4 alpha)^{-1} (1 + alpha)^{2q}.
SpaceModel build_kp(int qm1);

/// T^{2k} with the twisting bundle W, ch(W) = prod (1 + eta_i beta_i).
SpaceModel build_torus_with_W(int k);

/// The two fixed tori of the universal example: strict transversals with
/// N(pi/2) of complex dim 1 (zero root), W restricted, and the dual currents
/// of all 2^k monomials of prod(1 + eta_i beta_i).
std::vector<FixedComponentModel> build_universal_example(int k);

/// Atiyah's Z: ring Q[d]/d^3 (deg 2, fiber direction), integral d^2 = s,
/// leafwise tangent of real rank 2 with half-root d (p1(TF) = d^2).
SpaceModel build_atiyah_Z(const Rational& s);

/// S^1 with one odd generator w and integral w = 1.
SpaceModel build_circle();

/// Tensor-product model with Koszul signs; integration is the product
/// functional and fiber/base tags are preserved.
SpaceModel product(const SpaceModel& A, const SpaceModel& B);

}  // namespace lef
