#include "lef/spaces.hpp"

#include <stdexcept>

namespace lef {

namespace {

RingElement power(RingElement base, int e) {
    RingElement r = base.ring()->one();
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
}

/// Re-express an element of one factor in the product ring, padding the
/// monomials with zero exponents for the other factor's variables.
RingElement lift_element(const RingElement& a, const RingPtr& big, size_t offset,
                         size_t total) {
    RingElement r = big->zero();
    for (const auto& [m, c] : a.terms()) {
        Monomial bm(total, 0);
        for (size_t i = 0; i < m.size(); ++i) bm[offset + i] = m[i];
        r = r + big->monomial_element(bm, c);
    }
    return r;
}

EquivariantBundle lift_bundle(const EquivariantBundle& E, const RingPtr& big, size_t offset,
                              size_t total) {
    EquivariantBundle r = E;
    r.ring = big;
    for (auto& wr : r.roots) wr.root = lift_element(wr.root, big, offset, total);
    return r;
}

}  // namespace

SpaceModel build_cp(int q) {
    if (q < 1) throw std::invalid_argument("CP_q needs q >= 1");
    auto R = GradedRing::create({{"alpha", 2, q + 1, false}}, 2 * q);
    SpaceModel m;
    m.ring = R;
    m.dimension = 2 * q;
    m.name = "CP_" + std::to_string(q);
    // stable description T (+) C = L^{q+1}: q+1 half-roots alpha
    EquivariantBundle t{BundleKind::REAL, {}, false, "T" + m.name, R};
    for (int i = 0; i <= q; ++i) t.roots.push_back({R->var("alpha"), Cyclotomic(1)});
    m.tangent_roots = t;
    m.tangent_class = TotalClassBundle{
        BundleKind::REAL, power(R->one() + R->var("alpha", 2), q + 1), 2 * q, "p(" + m.name + ")"};
    return m;
}

SpaceModel build_kp(int qm1) {
    if (qm1 < 1) throw std::invalid_argument("KP_{q-1} needs q >= 2");
    const int q = qm1 + 1;
    auto R = GradedRing::create({{"alpha", 4, q, false}}, 4 * (q - 1));
    SpaceModel m;
    m.ring = R;
    m.dimension = 4 * (q - 1);
    m.name = "KP_" + std::to_string(qm1);
    RingElement a = R->var("alpha");
    RingElement p = (R->one() + Cyclotomic(4) * a).inverse() * power(R->one() + a, 2 * q);
    m.tangent_class =
        TotalClassBundle{BundleKind::REAL, p, 4 * (q - 1), "p(" + m.name + ")"};
    return m;
}

SpaceModel build_torus_with_W(int k) {
    if (k < 1) throw std::invalid_argument("torus model needs k >= 1");
    std::vector<GradedVariable> vars;
    for (int i = 1; i <= k; ++i) {
        vars.push_back({"eta" + std::to_string(i), 1, 2, false});
        vars.push_back({"beta" + std::to_string(i), 1, 2, false});
    }
    auto R = GradedRing::create(std::move(vars), 2 * k);
    SpaceModel m;
    m.ring = R;
    m.dimension = 2 * k;
    m.name = "T^" + std::to_string(2 * k);
    RingElement c1 = R->zero();
    for (int i = 1; i <= k; ++i)
        c1 = c1 + R->var("eta" + std::to_string(i)) * R->var("beta" + std::to_string(i));
    m.W = EquivariantBundle{BundleKind::COMPLEX, {{c1, Cyclotomic(1)}}, false, "W", R};
    return m;
}

std::vector<FixedComponentModel> build_universal_example(int k) {
    std::vector<FixedComponentModel> comps;
    for (int c = 0; c < 2; ++c) {
        FixedComponentModel f;
        f.space = build_torus_with_W(k);
        auto R = f.space.ring;
        f.name = "T" + std::to_string(c);
        f.leafwise = EquivariantBundle{BundleKind::REAL, {}, false, "TF^h", R};
        f.normal_minus1 = EquivariantBundle{BundleKind::REAL, {}, false, "N(-1)", R};
        f.s1 = 0;
        Angle quarter{1, 4};
        // TF restricted to the torus is a trivial R^2 bundle rotated by pi/2
        f.normal.push_back({quarter,
                            EquivariantBundle{BundleKind::COMPLEX,
                                              {{R->zero(), quarter.weight()}},
                                              false, "N(pi/2)", R}});
        f.twist = f.space.W;
        f.multiplicity = 1;
        // duals of all square-free eta/beta block monomials (2^k of them)
        for (unsigned s = 0; s < (1u << k); ++s) {
            Monomial m(2 * k, 0);
            std::string nm;
            for (int i = 0; i < k; ++i) {
                if (!(s & (1u << i))) continue;
                m[2 * i] = m[2 * i + 1] = 1;
                if (!nm.empty()) nm += "*";
                nm += "eta" + std::to_string(i + 1) + "*beta" + std::to_string(i + 1);
            }
            if (nm.empty()) nm = "1";
            f.currents.push_back(Current::dual(R, m, nm));
        }
        comps.push_back(std::move(f));
    }
    return comps;
}

SpaceModel build_atiyah_Z(const Rational& s) {
    if (s.is_zero()) throw std::invalid_argument("Atiyah class must be nonzero");
    auto R = GradedRing::create({{"d", 2, 3, true}}, 4);
    const_cast<GradedRing&>(*R).set_integration({{Monomial{2}, s}});
    const_cast<GradedRing&>(*R).set_fiber_volume(Monomial{2}, s);
    SpaceModel m;
    m.ring = R;
    m.dimension = 4;
    m.name = "Z";
    m.tangent_roots =
        EquivariantBundle{BundleKind::REAL, {{R->var("d"), Cyclotomic(1)}}, false, "TF", R};
    m.tangent_class =
        TotalClassBundle{BundleKind::REAL, R->one() + R->var("d", 2), 4, "p(Z)"};
    return m;
}

SpaceModel build_circle() {
    auto R = GradedRing::create({{"w", 1, 2, false}}, 1);
    SpaceModel m;
    m.ring = R;
    m.dimension = 1;
    m.name = "S^1";
    return m;
}

SpaceModel product(const SpaceModel& A, const SpaceModel& B) {
    std::vector<GradedVariable> vars = A.ring->variables();
    const auto& bvars = B.ring->variables();
    vars.insert(vars.end(), bvars.begin(), bvars.end());
    const size_t na = A.ring->variables().size(), nb = bvars.size();
    auto R = GradedRing::create(std::move(vars), A.ring->degree_cap() + B.ring->degree_cap());

    // product integration functional on concatenated top monomials
    if (!A.ring->integration().empty() && !B.ring->integration().empty()) {
        std::map<Monomial, Rational> integ;
        for (const auto& [ma, wa] : A.ring->integration())
            for (const auto& [mb, wb] : B.ring->integration()) {
                Monomial m = ma;
                m.insert(m.end(), mb.begin(), mb.end());
                integ[m] = wa * wb;
            }
        const_cast<GradedRing&>(*R).set_integration(std::move(integ));
    }
    if (A.ring->fiber_volume() || B.ring->fiber_volume()) {
        Monomial top(na + nb, 0);
        Rational w(1);
        if (A.ring->fiber_volume()) {
            const auto& [m, wt] = *A.ring->fiber_volume();
            for (size_t i = 0; i < m.size(); ++i) top[i] = m[i];
            w *= wt;
        }
        if (B.ring->fiber_volume()) {
            const auto& [m, wt] = *B.ring->fiber_volume();
            for (size_t i = 0; i < m.size(); ++i) top[na + i] = m[i];
            w *= wt;
        }
        const_cast<GradedRing&>(*R).set_fiber_volume(std::move(top), w);
    }

    SpaceModel m;
    m.ring = R;
    m.dimension = A.dimension + B.dimension;
    m.name = A.name + " x " + B.name;
    // tangent roots: lift and concatenate when kinds agree
    if (A.tangent_roots && B.tangent_roots &&
        A.tangent_roots->kind == B.tangent_roots->kind) {
        EquivariantBundle t = lift_bundle(*A.tangent_roots, R, 0, na + nb);
        EquivariantBundle tb = lift_bundle(*B.tangent_roots, R, na, na + nb);
        t.roots.insert(t.roots.end(), tb.roots.begin(), tb.roots.end());
        t.odd_trivial_summand = t.odd_trivial_summand != tb.odd_trivial_summand;
        m.tangent_roots = t;
    } else if (A.tangent_roots) {
        m.tangent_roots = lift_bundle(*A.tangent_roots, R, 0, na + nb);
    } else if (B.tangent_roots) {
        m.tangent_roots = lift_bundle(*B.tangent_roots, R, na, na + nb);
    }
    if (A.W) m.W = lift_bundle(*A.W, R, 0, na + nb);
    return m;
}

}  // namespace lef
