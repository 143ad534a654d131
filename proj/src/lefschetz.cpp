#include "lef/lefschetz.hpp"

#include <stdexcept>

namespace lef {

namespace {

std::vector<std::pair<Angle, int>> angle_dims(const FixedComponentModel& c) {
    std::vector<std::pair<Angle, int>> v;
    for (const auto& s : c.normal) v.push_back({s.theta, s.bundle.rank()});
    return v;
}

RingElement twist_factor(const FixedComponentModel& c) {
    if (!c.twist) return c.space.ring->one();
    return chern_character(*c.twist, true);
}

RingElement todd_leafwise(const FixedComponentModel& c) {
    int cap = c.space.ring->degree_cap();
    return genus_of_roots(named_series("todd", cap + 2), c.leafwise.complexified());
}

/// The geometric factor of the integrand: the de Rham ratio collapses to the
/// Euler class of TF^h; every other complex keeps Td(TF^h (x) C).
RingElement geometry_factor(const FixedComponentModel& c, const SymbolDatum& symbol) {
    if (symbol.kind == SymbolDatum::Kind::CLASSICAL &&
        symbol.complex == ComplexKind::DE_RHAM)
        return euler_class(c.leafwise);
    return todd_leafwise(c);
}

RingElement numerator_element(const FixedComponentModel& c, const SymbolDatum& symbol) {
    if (symbol.kind == SymbolDatum::Kind::EXPLICIT_SYMBOL) return symbol.numerator;
    Cyclotomic ch = local_index_character(symbol.complex, angle_dims(c),
                                          symbol.dolbeault_j, symbol.spin_lift);
    if (c.s1 > 0) {
        if (symbol.complex != ComplexKind::DE_RHAM)
            throw std::domain_error("N(-1) character only supported for de Rham");
        ch *= Cyclotomic(Rational(2).pow(c.s1));
    }
    return c.space.ring->scalar(ch);
}

LefschetzReport finish(const FixedComponentModel& c, const SymbolDatum& symbol,
                       const Current& current, RingElement integrand,
                       LefschetzReport::Factors factors) {
    LefschetzReport r;
    r.component = c.name;
    r.complex_name = symbol.complex_name();
    r.multiplicity = c.multiplicity;
    r.local_term = integrand;
    r.haefliger_class = fiber_integrate(integrand);
    r.value = Cyclotomic(c.multiplicity) * current.pair(r.haefliger_class);
    factors.fiber_integral =
        c.space.ring->has_split() ? "fiber_integrate" : "identity (strict transversal)";
    factors.current = current.name();
    r.factors = std::move(factors);
    return r;
}

}  // namespace

SymbolDatum SymbolDatum::classical(ComplexKind c, int j, int lift) {
    SymbolDatum s;
    s.kind = Kind::CLASSICAL;
    s.complex = c;
    s.dolbeault_j = j;
    s.spin_lift = lift;
    return s;
}

SymbolDatum SymbolDatum::explicit_symbol(RingElement num) {
    SymbolDatum s;
    s.kind = Kind::EXPLICIT_SYMBOL;
    s.numerator = std::move(num);
    return s;
}

std::string SymbolDatum::complex_name() const {
    if (kind == Kind::EXPLICIT_SYMBOL) return "explicit";
    switch (complex) {
        case ComplexKind::DE_RHAM: return "de Rham";
        case ComplexKind::SIGNATURE: return "signature";
        case ComplexKind::DOLBEAULT: return "Dolbeault(" + std::to_string(dolbeault_j) + ")";
        case ComplexKind::SPIN: return spin_lift > 0 ? "spin(+)" : "spin(-)";
    }
    return "?";
}

Cyclotomic local_index_character(ComplexKind complex,
                                 const std::vector<std::pair<Angle, int>>& thetas,
                                 int dolbeault_j, int spin_lift) {
    if (thetas.empty()) throw std::invalid_argument("empty normal angle list");
    Cyclotomic acc(1);
    for (const auto& [theta, s] : thetas) {
        if (theta.is_zero()) throw std::domain_error("not normal direction");
        Cyclotomic w = theta.weight();
        Cyclotomic factor(1);
        switch (complex) {
            case ComplexKind::DE_RHAM:
                factor = (Cyclotomic(1) - w) * (Cyclotomic(1) - w.conj());
                break;
            case ComplexKind::SIGNATURE:
                factor = w.conj() - w;
                break;
            case ComplexKind::DOLBEAULT:
                factor = w.pow(dolbeault_j) * (Cyclotomic(1) - w.conj());
                break;
            case ComplexKind::SPIN: {
                Cyclotomic v = theta.half_weight();
                factor = v - v.conj();
                break;
            }
        }
        acc *= factor.pow(s);
    }
    if (complex == ComplexKind::SPIN && spin_lift < 0) acc = -acc;
    return acc.canonical();
}

EquivariantBundle normal_complexified(const FixedComponentModel& c) {
    EquivariantBundle n;
    n.kind = BundleKind::COMPLEX;
    n.name = "N^h (x) C";
    n.ring = c.space.ring;
    for (const auto& s : c.normal)
        for (const auto& [y, w] : s.bundle.roots) {
            n.roots.push_back({y, w});
            n.roots.push_back({-y, w.conj()});
        }
    auto m1 = c.normal_minus1;
    m1.ring = m1.ring ? m1.ring : c.space.ring;
    for (const auto& r : m1.complexified().roots) n.roots.push_back(r);
    return n;
}

LefschetzReport lefschetz_strict(const FixedComponentModel& c, const SymbolDatum& symbol,
                                 const Current& current) {
    if (c.leafwise.rank() != 0)
        throw std::domain_error("component is not a strict transversal");
    Cyclotomic det = det_one_minus_h(angle_dims(c), c.s1);
    if (det.is_zero()) throw std::domain_error("trivial normal weight");
    RingElement integrand =
        det.inv() * (numerator_element(c, symbol) * twist_factor(c));
    return finish(c, symbol, current, std::move(integrand),
                  {"local index character", "det(1-h|N^h)", "1 (rank-0 TF^h)", "", ""});
}

LefschetzReport lefschetz_general(const FixedComponentModel& c, const SymbolDatum& symbol,
                                  const Current& current) {
    bool non_invertible = false;
    RingElement den = lambda_minus1_ch(normal_complexified(c), &non_invertible);
    if (non_invertible) throw std::domain_error("trivial normal weight");
    RingElement integrand = numerator_element(c, symbol) * den.inverse() *
                            geometry_factor(c, symbol) * twist_factor(c);
    return finish(c, symbol, current, std::move(integrand),
                  {"ch of the symbol at h", "ch(lambda_{-1}(N^h (x) C)(h))",
                   "Td(TF^h (x) C)", "", ""});
}

LefschetzReport lefschetz_basic3(const FixedComponentModel& c, const SymbolDatum& symbol,
                                 const Current& current) {
    Cyclotomic det = det_one_minus_h(angle_dims(c), c.s1);
    if (det.is_zero()) throw std::domain_error("trivial normal weight");
    RingElement classes = c.space.ring->one();
    for (const auto& s : c.normal) classes = classes * S_theta_class(s.bundle, s.theta);
    auto m1 = c.normal_minus1;
    m1.ring = m1.ring ? m1.ring : c.space.ring;
    classes = classes * R_class(m1);
    RingElement integrand = det.inv() * (numerator_element(c, symbol) * classes *
                                         geometry_factor(c, symbol) * twist_factor(c));
    return finish(c, symbol, current, std::move(integrand),
                  {"ch of the symbol at h", "det(1-h|N^h) with S/R corrections",
                   "Td(TF^h (x) C)", "", ""});
}

Cyclotomic lefschetz_total(const std::vector<FixedComponentModel>& comps,
                           const SymbolDatum& symbol, size_t current_index, Route route) {
    Cyclotomic total(0);
    for (const auto& c : comps) {
        if (current_index >= c.currents.size())
            throw std::out_of_range("current index out of range");
        const Current& cur = c.currents[current_index];
        switch (route) {
            case Route::STRICT: total += lefschetz_strict(c, symbol, cur).value; break;
            case Route::GENERAL: total += lefschetz_general(c, symbol, cur).value; break;
            case Route::BASIC3: total += lefschetz_basic3(c, symbol, cur).value; break;
        }
    }
    return total.canonical();
}

RigidityReport rigidity_obstruction(const SpaceModel& model, const Current& current) {
    if (!model.tangent_roots)
        throw std::invalid_argument("model has no leafwise tangent description");
    int cap = model.ring->degree_cap();
    RingElement ahat = genus_of_roots(named_series("ahat", cap + 2), *model.tangent_roots);
    RingElement fib = fiber_integrate(ahat);
    RigidityReport r;
    r.value = current.pair(fib).canonical();
    r.obstructed = !r.value.is_zero();
    return r;
}

LefschetzReport integrality_characteristic_number(
    const std::vector<FixedComponentModel>& comps, const SymbolDatum& symbol,
    const std::optional<EquivariantBundle>& ehat, long kappa) {
    LefschetzReport r;
    r.component = "total";
    r.complex_name = symbol.complex_name();
    Cyclotomic total(0);
    for (const auto& c : comps) {
        bool non_invertible = false;
        RingElement den = lambda_minus1_ch(normal_complexified(c), &non_invertible);
        if (non_invertible) throw std::domain_error("trivial normal weight");
        // A-hat(nu^h): the normal bundle's real form, half-roots from all summands
        EquivariantBundle nu{BundleKind::REAL, {}, false, "nu^h", c.space.ring};
        for (const auto& s : c.normal)
            for (const auto& [y, w] : s.bundle.roots) nu.roots.push_back({y, Cyclotomic(1)});
        for (const auto& [x, w] : c.normal_minus1.roots) nu.roots.push_back({x, Cyclotomic(1)});
        int cap = c.space.ring->degree_cap();
        RingElement anu = genus_of_roots(named_series("ahat", cap + 2), nu);
        RingElement integrand = numerator_element(c, symbol) * den.inverse() *
                                geometry_factor(c, symbol) * anu * twist_factor(c);
        if (ehat) integrand = integrand * chern_character(*ehat, true);
        total += Cyclotomic(c.multiplicity) * integrate(integrand);
    }
    r.value = total.canonical();
    r.integrality = IntegralityInfo{kappa, is_cyclotomic_integer(r.value, kappa)};
    r.factors = {"ch of the symbol at h", "ch(lambda_{-1}(N^h (x) C)(h))",
                 "Td(TF^h (x) C)", "integrate over V^h", "fundamental"};
    return r;
}

Cyclotomic bott_taubes_value(const FixedComponentModel& c, int n, const Current& current,
                             int q_order, bool spin_variant) {
    if (n > q_order) throw std::domain_error("coefficient index exceeds q-order");
    auto leaf = c.leafwise;
    leaf.ring = leaf.ring ? leaf.ring : c.space.ring;
    int cap = c.space.ring->degree_cap();
    RingElement genus =
        genus_of_roots(named_series(spin_variant ? "ahat" : "lgenus", cap + 2), leaf);
    RingElement chr = rigidity_R_coeff(leaf.complexified(), n, q_order);
    return (Cyclotomic(c.multiplicity) * current.pair(genus * chr)).canonical();
}

nlohmann::json cyclotomic_to_json(const Cyclotomic& c) {
    Cyclotomic k = c.canonical();
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& q : k.coeffs()) coeffs.push_back(q.str());
    return {{"conductor", k.conductor()}, {"coeffs", coeffs}};
}

nlohmann::json LefschetzReport::to_json() const {
    nlohmann::json j{{"component", component},
                     {"complex", complex_name},
                     {"value", cyclotomic_to_json(value)},
                     {"multiplicity", multiplicity},
                     {"factors",
                      {{"numerator", factors.numerator},
                       {"denominator", factors.denominator},
                       {"todd", factors.todd},
                       {"fiber_integral", factors.fiber_integral},
                       {"current", factors.current}}}};
    if (integrality)
        j["integrality"] = {{"kappa", integrality->kappa}, {"verdict", integrality->verdict}};
    else
        j["integrality"] = nullptr;
    return j;
}

}  // namespace lef
