// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lef/identities.hpp"
#include "lef/lefschetz.hpp"

using namespace lef;

namespace {

using clock_type = std::chrono::steady_clock;

int failures = 0;

void run(int id, const std::string& title, const std::function<std::string()>& body) {
    std::string detail;
    try {
        detail = body();
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    if (detail.empty()) {
        std::printf("pass  %2d  %s\n", id, title.c_str());
    } else {
        std::printf("FAIL  %2d  %s -- %s\n", id, title.c_str(), detail.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

std::string check(bool ok, const std::string& msg) { return ok ? "" : msg; }

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

Cyclotomic isqrt2() {
    Cyclotomic z8 = Cyclotomic::root_of_unity(8);
    return z8 + z8.pow(3);
}

std::mt19937 rng(472882049u);

/// Random strict-transversal fixture: angles 2*pi*a/m with m <= 12 in the
/// open upper half, normal dims 1..2, a random root-of-unity twist line.
FixedComponentModel random_fixture() {
    FixedComponentModel f;
    f.space = build_torus_with_W(1);
    auto R = f.space.ring;
    f.name = "fixture";
    f.leafwise = EquivariantBundle{BundleKind::REAL, {}, false, "TF^h", R};
    f.normal_minus1 = EquivariantBundle{BundleKind::REAL, {}, false, "N(-1)", R};
    f.s1 = 0;
    std::uniform_int_distribution<long> mm(3, 12);
    std::uniform_int_distribution<int> dim(1, 2), nsum(1, 2), cc(-2, 2);
    int k = nsum(rng);
    for (int i = 0; i < k; ++i) {
        long m = mm(rng);
        std::vector<long> as;
        for (long a = 1; 2 * a < m; ++a) as.push_back(a);
        Angle th{as[std::uniform_int_distribution<size_t>(0, as.size() - 1)(rng)], m};
        EquivariantBundle b{BundleKind::COMPLEX, {}, false, "N", R};
        int s = dim(rng);
        for (int j = 0; j < s; ++j) b.roots.push_back({R->zero(), th.weight()});
        f.normal.push_back({th, b});
    }
    long wm = mm(rng);
    Cyclotomic w =
        Cyclotomic::root_of_unity(wm, std::uniform_int_distribution<long>(0, wm - 1)(rng));
    RingElement c1 = Cyclotomic(cc(rng)) * (R->var("eta1") * R->var("beta1"));
    f.twist = EquivariantBundle{BundleKind::COMPLEX, {{c1, w}}, false, "L", R};
    f.currents.push_back(Current::dual(R, {0, 0}, "1"));
    f.currents.push_back(Current::dual(R, {1, 1}, "top"));
    return f;
}

/// A leaf with stably trivial tangent over an odd-dimensional fiber: the
/// A-hat class is 1, whose fiber integral has no top component.
SpaceModel trivial_leaf(int fiber_odd_vars, const std::string& name) {
    std::vector<GradedVariable> vars;
    for (int i = 0; i < fiber_odd_vars; ++i)
        vars.push_back({"e" + std::to_string(i + 1), 1, 2, true});
    vars.push_back({"w", 1, 2, false});
    auto R = GradedRing::create(vars, fiber_odd_vars + 1);
    Monomial top(vars.size(), 1);
    top.back() = 0;
    const_cast<GradedRing&>(*R).set_fiber_volume(top, Rational(1));
    SpaceModel m;
    m.ring = R;
    m.dimension = fiber_odd_vars + 1;
    m.name = name;
    m.tangent_roots =
        EquivariantBundle{BundleKind::REAL, {{R->zero(), Cyclotomic(1)}}, false, "TF", R};
    return m;
}

std::string criterion_1() {
    auto t0 = clock_type::now();
    const int q_max = 12;
    QSeries ahat = named_series("ahat", 2 * q_max + 4);
    QSeries binom = named_series("binomial", q_max + 2)
                        .compose(QSeries::monomial(Rational(1), 2, 2 * q_max + 4));
    for (int q = 1; q <= q_max; ++q) {
        SpaceModel cp = build_cp(q);
        Rational via_class =
            integrate(genus_of_total_class(ahat, *cp.tangent_class)).to_rational();
        Rational via_roots = integrate(genus_of_roots(ahat, *cp.tangent_roots)).to_rational();
        Rational via_residue = Rational(2).pow(-q) * binom.coefficient(q);
        if (via_class != via_roots || via_class != via_residue)
            return "routes disagree at q=" + std::to_string(q) + ": " + via_class.str() +
                   " vs " + via_roots.str() + " vs " + via_residue.str();
        if (via_class.is_zero() != (q % 2 == 1))
            return "parity fails at q=" + std::to_string(q) + ": " + via_class.str();
        if (q == 2 && via_class != Rational(-1, 8)) return "CP_2 gave " + via_class.str();
        if (q == 4 && via_class != Rational(3, 128)) return "CP_4 gave " + via_class.str();
    }
    double ms = ms_since(t0);
    return check(ms < 5000, "took " + std::to_string(ms) + " ms");
}

std::string criterion_2() {
    auto t0 = clock_type::now();
    IdentityResult r = verify_ahat_kp(6);
    if (!r.verdict) return r.witness;
    double ms = ms_since(t0);
    return check(ms < 5000, "took " + std::to_string(ms) + " ms");
}

std::string criterion_3() {
    auto t0 = clock_type::now();
    for (int n = 1; n <= 6; ++n) {
        IdentityResult r = verify_coth_cancellation(n);
        if (!r.verdict) return "n=" + std::to_string(n) + ": " + r.witness;
        double err = coth_numeric_max_error(n, 100, 1000u + n, true);
        if (!(err < 1e-9))
            return "numeric oracle at n=" + std::to_string(n) +
                   " max error " + std::to_string(err);
    }
    double ms = ms_since(t0);
    return check(ms < 60000, "took " + std::to_string(ms) + " ms");
}

std::string criterion_4() {
    IdentityResult r = verify_coth_bernoulli(19);
    if (!r.verdict) return r.witness;
    // recurrence Bernoulli numbers against the x/(e^x - 1) coefficients
    QSeries expm1_over_x(21);
    QSeries e = named_series("exp", 22);
    for (int d = 0; d <= 21; ++d)
        expm1_over_x = expm1_over_x + QSeries::monomial(e.coefficient(d + 1), d, 21);
    QSeries gen = expm1_over_x.inverse();
    for (int n = 0; n <= 19; ++n)
        if (gen.coefficient(n) != bernoulli(n) / factorial(n))
            return "b_" + std::to_string(n) + " disagrees with x/(e^x-1)";
    return "";
}

std::string criterion_5() {
    Cyclotomic i = Cyclotomic::i();
    for (int k = 1; k <= 3; ++k) {
        auto comps = build_universal_example(k);
        if (comps.size() != 2) return "expected two fixed tori";
        for (const auto& c : comps)
            if (det_one_minus_h({{c.normal[0].theta, c.normal[0].bundle.rank()}}, c.s1) !=
                Cyclotomic(2))
                return c.name + ": per-component denominator is not 2";
        for (size_t ci = 0; ci < comps[0].currents.size(); ++ci) {
            // P: the exact pairing of ch(W) = prod(1 + eta_i beta_i)
            auto R = comps[0].space.ring;
            RingElement prod = R->one();
            for (int t = 1; t <= k; ++t)
                prod = prod * (R->one() + R->var("eta" + std::to_string(t)) *
                                              R->var("beta" + std::to_string(t)));
            Cyclotomic P = comps[0].currents[ci].pair(prod);
            auto total = [&](const SymbolDatum& sym) {
                return lefschetz_total(comps, sym, ci);
            };
            std::string at = "k=" + std::to_string(k) + " current " +
                             comps[0].currents[ci].name();
            if (total(SymbolDatum::classical(ComplexKind::DE_RHAM)) != Cyclotomic(2) * P)
                return at + ": de Rham total is not 2P";
            if (total(SymbolDatum::classical(ComplexKind::SIGNATURE)) !=
                Cyclotomic(-2) * i * P)
                return at + ": signature total is not -2iP";
            for (int j = 0; j <= 1; ++j)
                if (total(SymbolDatum::classical(ComplexKind::DOLBEAULT, j)) !=
                    (i + Cyclotomic(1 - 2 * j)) * P)
                    return at + ": Dolbeault j=" + std::to_string(j) + " total is off";
            if (total(SymbolDatum::classical(ComplexKind::SPIN, 0, +1)) != isqrt2() * P)
                return at + ": spin(+) total is not i*sqrt(2)P";
            if (total(SymbolDatum::classical(ComplexKind::SPIN, 0, -1)) != -isqrt2() * P)
                return at + ": spin(-) total is not -i*sqrt(2)P";
        }
    }
    return "";
}

std::string criterion_6() {
    auto comps = build_universal_example(2);
    for (const auto& sym :
         {SymbolDatum::classical(ComplexKind::DE_RHAM),
          SymbolDatum::classical(ComplexKind::SIGNATURE),
          SymbolDatum::classical(ComplexKind::DOLBEAULT, 0),
          SymbolDatum::classical(ComplexKind::DOLBEAULT, 1),
          SymbolDatum::classical(ComplexKind::SPIN, 0, +1),
          SymbolDatum::classical(ComplexKind::SPIN, 0, -1)}) {
        LefschetzReport r = integrality_characteristic_number(comps, sym, std::nullopt, 8);
        if (!r.integrality || !r.integrality->verdict)
            return sym.complex_name() + ": value " + r.value.str() +
                   " failed kappa=8 integrality";
        if (is_cyclotomic_integer(r.value / Cyclotomic(3), 8))
            return sym.complex_name() + ": scaled value (x 1/3) still passes";
    }
    return "";
}

std::string criterion_7() {
    auto comps = build_universal_example(2);
    FixedComponentModel plain = comps[0];
    plain.twist.reset();
    SymbolDatum de_rham = SymbolDatum::classical(ComplexKind::DE_RHAM);
    for (const auto& cur : plain.currents) {
        Cyclotomic v = lefschetz_general(plain, de_rham, cur).value;
        if (cur.degree() > 0 && !v.is_zero())
            return "positive-degree current " + cur.name() + " gave " + v.str();
    }
    Current fund = Current::fundamental(plain.space.ring);
    if (!lefschetz_general(plain, de_rham, fund).value.is_zero())
        return "transverse fundamental class pairing is nonzero";
    Current mass = Current::point_mass(plain.space.ring, Rational(3, 2));
    Cyclotomic v = lefschetz_general(plain, de_rham, mass).value;
    if (v != Cyclotomic(Rational(3, 2)) * Cyclotomic(plain.multiplicity))
        return "degree-0 measure gave " + v.str();
    if (v.to_rational().sign() < 0) return "degree-0 value is negative";
    return "";
}

std::string criterion_8() {
    for (int trial = 0; trial < 50; ++trial) {
        FixedComponentModel f = random_fixture();
        for (const auto& sym :
             {SymbolDatum::classical(ComplexKind::DE_RHAM),
              SymbolDatum::classical(ComplexKind::SIGNATURE),
              SymbolDatum::classical(ComplexKind::DOLBEAULT, 1),
              SymbolDatum::classical(ComplexKind::SPIN, 0, -1)}) {
            for (const auto& cur : f.currents) {
                Cyclotomic a = lefschetz_strict(f, sym, cur).value;
                Cyclotomic b = lefschetz_general(f, sym, cur).value;
                Cyclotomic c = lefschetz_basic3(f, sym, cur).value;
                if (a != b || b != c)
                    return "trial " + std::to_string(trial) + " (" + sym.complex_name() +
                           ", " + cur.name() + "): " + a.str() + " / " + b.str() + " / " +
                           c.str();
            }
        }
    }
    return "";
}

std::string criterion_9() {
    for (const Rational& s : {Rational(1), Rational(-7, 3), Rational(2, 5), Rational(5)}) {
        SpaceModel z1 = product(build_atiyah_Z(s), build_circle());
        Current dvol = Current::basic_form(z1.ring->base_ring()->var("w"), "dvol");
        RigidityReport r = rigidity_obstruction(z1, dvol);
        if (r.value != Cyclotomic(-s / Rational(24)))
            return "s=" + s.str() + " gave " + r.value.str();
        if (r.verdict() != "OBSTRUCTED") return "s=" + s.str() + " not reported OBSTRUCTED";
    }
    for (const auto& [odd, name] : std::vector<std::pair<int, std::string>>{
             {3, "S^3 x S^1"}, {5, "S^5 x S^1"}, {2, "T^2 leaf"}, {4, "T^4 leaf"}}) {
        SpaceModel leaf = trivial_leaf(odd, name);
        Current dvol = Current::basic_form(leaf.ring->base_ring()->var("w"), "dvol");
        RigidityReport r = rigidity_obstruction(leaf, dvol);
        if (!r.value.is_zero() || r.verdict() != "INCONCLUSIVE")
            return name + " gave " + r.value.str() + " / " + r.verdict();
    }
    return "";
}

std::string criterion_10() {
    IdentityResult r = verify_sqrt_claim(30);
    return r.verdict ? "" : r.witness;
}

std::string criterion_11() {
    auto comps = build_universal_example(1);
    FixedComponentModel f = comps[0];
    Current c0 = Current::dual(f.space.ring, {0, 0}, "1");
    // R_0 is the trivial class: the value is the plain <L(TF), C> pairing
    QSeries lgenus = named_series("lgenus", f.space.ring->degree_cap() + 2);
    Cyclotomic l_pairing = c0.pair(genus_of_roots(lgenus, f.leafwise));
    if (bott_taubes_value(f, 0, c0, 4) != l_pairing)
        return "R_0 value differs from <L(TF), C>";
    // rank-2 trivial bundle, first order: Lambda_q x Sym_q expands to 4
    f.leafwise.roots.push_back({f.space.ring->zero(), Cyclotomic(1)});
    auto R = f.space.ring;
    EquivariantBundle triv2{BundleKind::COMPLEX,
                            {{R->zero(), Cyclotomic(1)}, {R->zero(), Cyclotomic(1)}},
                            false, "F", R};
    if (rigidity_R_coeff(triv2, 1, 3) != R->scalar(Cyclotomic(4)))
        return "R_1 class on the rank-2 trivial bundle is not 4";
    if (bott_taubes_value(f, 1, c0, 4) != Cyclotomic(4))
        return "R_1 value on the rank-2 trivial bundle is not 4";
    return "";
}

std::string criterion_12() {
    struct V {
        const char* name;
        std::function<IdentityResult(int)> call;
    };
    const V verifiers[] = {
        {"coth-cancellation", [](int m) { return verify_coth_cancellation(3, m); }},
        {"coth-bernoulli", [](int m) { return verify_coth_bernoulli(19, m); }},
        {"sqrt", [](int m) { return verify_sqrt_claim(12, m); }},
        {"ahat-cp", [](int m) { return verify_ahat_cp(6, m); }},
        {"ahat-kp", [](int m) { return verify_ahat_kp(5, m); }},
        {"ch-W", [](int m) { return verify_ch_W(3, m); }},
    };
    for (const auto& v : verifiers)
        for (int m = 0; m < 10; ++m) {
            IdentityResult r = v.call(m);
            if (r.verdict || r.witness.empty())
                return std::string(v.name) + " mutation " + std::to_string(m) +
                       " was not caught";
        }
    return "";
}

}  // namespace

int main() {
    run(1, "A-hat(CP_q), q=1..12: parity, -1/8 and 3/128, three routes, <5s", criterion_1);
    run(2, "A-hat(KP_{q-1}) = 0 for q=2..6, <5s", criterion_2);
    run(3, "coth cancellation exact for n=1..6 + 100-point numeric oracle", criterion_3);
    run(4, "coth Bernoulli expansion to z^19, recurrence vs x/(e^x-1)", criterion_4);
    run(5, "universal example k=1..3: totals 2P, -2iP, (i+1-2j)P, +-i sqrt2 P", criterion_5);
    run(6, "integrality at kappa=8 passes; x1/3 scaling fails", criterion_6);
    run(7, "de Rham degeneracy: positive degree 0, fundamental 0, measure >= 0", criterion_7);
    run(8, "route agreement on 50 randomized strict fixtures", criterion_8);
    run(9, "rigidity -s/24 OBSTRUCTED; trivial-leaf fiber A-hat 0", criterion_9);
    run(10, "sqrt(1+u^2): recurrence, signs, power-of-2 denominators, n<=30", criterion_10);
    run(11, "Bott-Taubes: R_0 = <L(TF),C>; rank-2 trivial R_1 = 4", criterion_11);
    run(12, "mutation robustness: 10 injected mutations per verifier", criterion_12);
    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all 12 criteria passed\n");
    return 0;
}
