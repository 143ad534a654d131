#include "lef/genera.hpp"

#include <stdexcept>

namespace lef {

namespace {

QSeries exp_series(int cap) { return named_series("exp", cap + 1); }

/// log(1+v) = sum_{k>=1} (-1)^{k+1} v^k / k.
QSeries log_one_plus(int T) {
    QSeries l(T);
    for (int k = 1; k <= T; ++k)
        l = l + QSeries::monomial(Rational(k % 2 ? 1 : -1, k), k, T);
    return l;
}

RingElement exp_of(const RingElement& n) {
    return apply_series(exp_series(n.ring()->degree_cap()), n);
}

/// Even part of f re-indexed as a series in x^2: g with g(x^2) = f(x).
QSeries even_reindexed(const QSeries& f) {
    QSeries g(f.trunc() / 2);
    for (const auto& [d, c] : f.terms()) {
        if (d % 2 != 0) continue;
        if (d / 2 <= g.trunc()) g = g + QSeries::monomial(c, d / 2, g.trunc());
    }
    return g;
}

}  // namespace

RingPtr EquivariantBundle::resolve_ring() const {
    if (ring) return ring;
    for (const auto& r : roots)
        if (r.root.ring()) return r.root.ring();
    throw std::invalid_argument("bundle has no ambient ring");
}

EquivariantBundle EquivariantBundle::complexified() const {
    if (kind == BundleKind::COMPLEX) return *this;
    EquivariantBundle c;
    c.kind = BundleKind::COMPLEX;
    c.name = name.empty() ? name : name + " (x) C";
    c.ring = ring;
    auto R = resolve_ring();
    for (const auto& [x, w] : roots) {
        c.roots.push_back({x, w});
        c.roots.push_back({-x, w.conj()});
    }
    if (odd_trivial_summand) c.roots.push_back({R->zero(), Cyclotomic(1)});
    return c;
}

RingElement genus_of_roots(const QSeries& f, const EquivariantBundle& E) {
    if (f.has_principal_part() || f.coefficient(0) != Rational(1))
        throw std::domain_error("genus series must have constant term 1");
    auto R = E.resolve_ring();
    RingElement g = R->one();
    for (const auto& [root, w] : E.roots) {
        if (E.kind == BundleKind::REAL) {
            // even series paired over +-x: apply the x^2-reindexed even part
            RingElement x2 = root * root;
            g = g * apply_series(even_reindexed(f), x2);
        } else {
            g = g * apply_series(f, root);
        }
    }
    return g;  // trivial odd summand contributes f(0) = 1
}

RingElement genus_of_total_class(const QSeries& f, const TotalClassBundle& B) {
    if (f.has_principal_part() || f.coefficient(0) != Rational(1))
        throw std::domain_error("genus series must have constant term 1");
    const auto& R = B.total_class.ring();
    if (!R) throw std::invalid_argument("total class has no ring");
    const int cap = R->degree_cap();
    const int step = B.kind == BundleKind::REAL ? 4 : 2;
    if (B.total_class.constant_term() != Cyclotomic(1))
        throw std::domain_error("total class must have constant term 1");
    for (int d = 1; d <= cap; ++d)
        if (d % step != 0 && !B.total_class.graded_part(d).is_zero())
            throw std::domain_error("total class has components of the wrong degree");
    const int K = cap / step;
    // Newton's identities: p_k = e1 p_{k-1} - e2 p_{k-2} + ... + (-1)^{k-1} k e_k
    std::vector<RingElement> e(K + 1, R->zero()), p(K + 1, R->zero());
    for (int k = 1; k <= K; ++k) e[k] = B.total_class.graded_part(step * k);
    for (int k = 1; k <= K; ++k) {
        RingElement acc = Cyclotomic(Rational(k % 2 ? k : -k)) * e[k];
        for (int j = 1; j < k; ++j) {
            RingElement t = e[j] * p[k - j];
            acc = acc + (j % 2 ? t : -t);
        }
        p[k] = acc;
    }
    // genus = exp(sum_k (log f)_k p_k), with f read in x^2 for REAL input
    QSeries base = B.kind == BundleKind::REAL ? even_reindexed(f) : f;
    QSeries lf = log_one_plus(K).compose(base.truncated(K) - QSeries(Rational(1), K));
    RingElement n = R->zero();
    for (int k = 1; k <= K; ++k) {
        Rational c = lf.coefficient(k);
        if (!c.is_zero()) n = n + Cyclotomic(c) * p[k];
    }
    return exp_of(n);
}

RingElement chern_character(const EquivariantBundle& E, bool at_h) {
    if (E.kind != BundleKind::COMPLEX)
        throw std::domain_error("chern_character needs a complex bundle; complexify first");
    auto R = E.resolve_ring();
    RingElement s = R->zero();
    for (const auto& [root, w] : E.roots) {
        RingElement e = apply_series(exp_series(R->degree_cap()), root);
        s = s + (at_h ? w * e : e);
    }
    return s;
}

RingElement lambda_minus1_ch(const EquivariantBundle& E, bool* non_invertible) {
    if (E.kind != BundleKind::COMPLEX)
        throw std::domain_error("lambda_minus1_ch needs a complex bundle; complexify first");
    auto R = E.resolve_ring();
    RingElement prod = R->one();
    for (const auto& [root, w] : E.roots) {
        RingElement e = apply_series(exp_series(R->degree_cap()), root);
        prod = prod * (R->one() - w * e);
    }
    if (non_invertible) *non_invertible = prod.constant_term().is_zero();
    return prod;
}

Cyclotomic det_one_minus_h(const std::vector<std::pair<Angle, int>>& thetas, int s1) {
    if (s1 < 0) throw std::invalid_argument("negative dimension");
    Cyclotomic d = Cyclotomic(Rational(2).pow(s1));
    for (const auto& [theta, s] : thetas) {
        if (theta.is_zero()) throw std::domain_error("not normal direction");
        if (!theta.in_open_half())
            throw std::domain_error("angle must lie in (0, pi)");
        Cyclotomic w = theta.weight();
        Cyclotomic f = (Cyclotomic(1) - w) * (Cyclotomic(1) - w.conj());
        d *= f.pow(s);
    }
    return d;
}

RingElement S_theta_class(const EquivariantBundle& N, const Angle& theta) {
    if (theta.is_zero() || !theta.in_open_half())
        throw std::domain_error("angle must lie in (0, pi)");
    if (N.kind != BundleKind::COMPLEX)
        throw std::domain_error("S_theta_class needs a complex bundle");
    auto R = N.resolve_ring();
    Cyclotomic w = theta.weight();
    Cyclotomic det = (Cyclotomic(1) - w) * (Cyclotomic(1) - w.conj());
    Cyclotomic det_inv = det.inv();
    RingElement prod = R->one();
    for (const auto& [y, wr] : N.roots) {
        RingElement ey = apply_series(exp_series(R->degree_cap()), y);
        RingElement eyi = apply_series(exp_series(R->degree_cap()), -y);
        prod = prod * (det_inv * ((R->one() - w * ey) * (R->one() - w.conj() * eyi)));
    }
    return prod.inverse();
}

RingElement R_class(const EquivariantBundle& N) {
    if (N.kind != BundleKind::REAL)
        throw std::domain_error("R_class needs a real bundle");
    auto R = N.resolve_ring();
    Cyclotomic quarter(Rational(1, 4));
    RingElement prod = R->one();
    for (const auto& [x, w] : N.roots) {
        RingElement ex = apply_series(exp_series(R->degree_cap()), x);
        RingElement exi = apply_series(exp_series(R->degree_cap()), -x);
        prod = prod * (quarter * ((R->one() + ex) * (R->one() + exi)));
    }
    return prod.inverse();
}

RingElement euler_class(const EquivariantBundle& E) {
    if (E.kind != BundleKind::REAL)
        throw std::domain_error("euler_class needs an oriented real bundle");
    if (E.odd_trivial_summand) throw std::domain_error("odd rank has no Euler class");
    auto R = E.resolve_ring();
    RingElement e = R->one();
    for (const auto& [x, w] : E.roots) e = e * x;
    return e;
}

namespace {

/// Truncated product in ring[t]/t^{Q+1}.
std::vector<RingElement> tpoly_mul(const std::vector<RingElement>& a,
                                   const std::vector<RingElement>& b, const RingPtr& R) {
    const int Q = static_cast<int>(a.size()) - 1;
    std::vector<RingElement> r(Q + 1, R->zero());
    for (int i = 0; i <= Q; ++i)
        for (int j = 0; i + j <= Q; ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

}  // namespace

std::vector<RingElement> lambda_t_ch(const EquivariantBundle& E, int Q) {
    if (E.kind != BundleKind::COMPLEX)
        throw std::domain_error("lambda_t_ch needs a complex bundle");
    if (Q < 0) throw std::invalid_argument("negative truncation order");
    auto R = E.resolve_ring();
    std::vector<RingElement> acc(Q + 1, R->zero());
    acc[0] = R->one();
    for (const auto& [root, w] : E.roots) {
        std::vector<RingElement> f(Q + 1, R->zero());
        f[0] = R->one();
        if (Q >= 1) f[1] = w * apply_series(exp_series(R->degree_cap()), root);
        acc = tpoly_mul(acc, f, R);
    }
    return acc;
}

std::vector<RingElement> sym_t_ch(const EquivariantBundle& E, int Q) {
    if (E.kind != BundleKind::COMPLEX)
        throw std::domain_error("sym_t_ch needs a complex bundle");
    if (Q < 0) throw std::invalid_argument("negative truncation order");
    auto R = E.resolve_ring();
    std::vector<RingElement> acc(Q + 1, R->zero());
    acc[0] = R->one();
    for (const auto& [root, w] : E.roots) {
        std::vector<RingElement> f(Q + 1, R->zero());
        f[0] = R->one();
        RingElement we = w * apply_series(exp_series(R->degree_cap()), root);
        for (int i = 1; i <= Q; ++i) f[i] = f[i - 1] * we;
        acc = tpoly_mul(acc, f, R);
    }
    return acc;
}

RingElement rigidity_R_coeff(const EquivariantBundle& F, int n, int Q) {
    if (n > Q || n < 0) throw std::domain_error("coefficient index exceeds q-order");
    auto R = F.resolve_ring();
    auto L = lambda_t_ch(F, Q);
    auto S = sym_t_ch(F, Q);
    std::vector<RingElement> acc(Q + 1, R->zero());
    acc[0] = R->one();
    // factors with index j > Q contribute 1 mod q^{Q+1}
    for (int j = 1; j <= Q; ++j) {
        std::vector<RingElement> lj(Q + 1, R->zero()), sj(Q + 1, R->zero());
        for (int i = 0; i * j <= Q; ++i) {
            lj[i * j] = lj[i * j] + L[i];
            sj[i * j] = sj[i * j] + S[i];
        }
        acc = tpoly_mul(acc, lj, R);
        acc = tpoly_mul(acc, sj, R);
    }
    return acc[n];
}

}  // namespace lef
