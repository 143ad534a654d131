#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lef/spaces.hpp"

namespace lef {

enum class ComplexKind { DE_RHAM, SIGNATURE, DOLBEAULT, SPIN };

/// The symbol class whose Lefschetz number is being computed: either one of
/// the classical elliptic complexes along the leaves, or an explicit
/// equivariant symbol character supplied as a ring element.
struct SymbolDatum {
    enum class Kind { CLASSICAL, EXPLICIT_SYMBOL };
    Kind kind = Kind::CLASSICAL;
    ComplexKind complex = ComplexKind::DE_RHAM;
    int dolbeault_j = 0;  // DOLBEAULT degree
    int spin_lift = +1;   // SPIN lift sign, +1 or -1
    RingElement numerator;  // EXPLICIT_SYMBOL: ch of i*[sigma](h)

    static SymbolDatum classical(ComplexKind c, int j = 0, int lift = +1);
    static SymbolDatum explicit_symbol(RingElement num);
    std::string complex_name() const;
};

struct IntegralityInfo {
    long kappa = 1;
    bool verdict = false;
};

struct LefschetzReport {
    std::string component;
    std::string complex_name;
    RingElement local_term;       // integrand before fiber integration
    RingElement haefliger_class;  // after fiber integration, in the transverse ring
    Cyclotomic value;
    int multiplicity = 1;
    std::optional<IntegralityInfo> integrality;
    struct Factors {
        std::string numerator, denominator, todd, fiber_integral, current;
    } factors;

    nlohmann::json to_json() const;
};

nlohmann::json cyclotomic_to_json(const Cyclotomic& c);

/// Strict-transversal numerator sum (-1)^i tr(h|E^i) over the listed normal
/// angles (theta, complex dim s(theta)), as an exact cyclotomic.
Cyclotomic local_index_character(ComplexKind complex,
                                 const std::vector<std::pair<Angle, int>>& thetas,
                                 int dolbeault_j = 0, int spin_lift = +1);

/// N^h (x) C as one complex bundle: lines (y_j, w), (-y_j, conj w) for every
/// normal summand plus the complexification of N(-1).
EquivariantBundle normal_complexified(const FixedComponentModel& c);

/// Strict-transversal corollary: multiplicity * pair(num / det(1-h|N) * ch(twist)(h), C).
LefschetzReport lefschetz_strict(const FixedComponentModel& c, const SymbolDatum& symbol,
                                 const Current& current);

/// Full cohomological formula: pair(fiber_integrate(num * lambda_{-1}ch^{-1} * Td(TF^h (x) C)), C).
LefschetzReport lefschetz_general(const FixedComponentModel& c, const SymbolDatum& symbol,
                                  const Current& current);

/// Assembled from ch/det * prod S^theta(N(theta)) * R(N(-1)) * Td(TF^h (x) C).
LefschetzReport lefschetz_basic3(const FixedComponentModel& c, const SymbolDatum& symbol,
                                 const Current& current);

enum class Route { STRICT, GENERAL, BASIC3 };

/// Sum over all components of a fixed-point set, pairing each component's
/// current of the given index.
Cyclotomic lefschetz_total(const std::vector<FixedComponentModel>& comps,
                           const SymbolDatum& symbol, size_t current_index,
                           Route route = Route::GENERAL);

struct RigidityReport {
    Cyclotomic value;
    bool obstructed = false;  // nonzero value forbids compact connected actions
    std::string verdict() const { return obstructed ? "OBSTRUCTED" : "INCONCLUSIVE"; }
};

/// <int_F A-hat(TF), C> on a model with a declared fiber/base split.
RigidityReport rigidity_obstruction(const SpaceModel& model, const Current& current);

/// The integrality characteristic number: the general integrand times
/// A-hat(nu^h) ch(E-hat|_{V^h}), integrated over V^h and summed over
/// components, with a Z[zeta_kappa] membership verdict.
LefschetzReport integrality_characteristic_number(
    const std::vector<FixedComponentModel>& comps, const SymbolDatum& symbol,
    const std::optional<EquivariantBundle>& ehat, long kappa);

/// <L(TF) ch(R_n), C>, or the spin variant <A-hat(TF) ch(R'_n), C>.
Cyclotomic bott_taubes_value(const FixedComponentModel& c, int n, const Current& current,
                             int q_order, bool spin_variant = false);

}  // namespace lef
