#include "lef/gring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lef {

GradedRing::GradedRing(std::vector<GradedVariable> vars, int cap)
    : vars_(std::move(vars)), cap_(cap) {}

RingPtr GradedRing::create(std::vector<GradedVariable> vars, int degree_cap) {
    for (auto& v : vars) {
        if (v.degree <= 0) throw std::invalid_argument("variable degree must be positive");
        if (v.degree % 2 == 1) v.nilpotency = 2;  // odd variables square to zero
        if (v.degree > degree_cap)
            throw std::invalid_argument("degree cap below variable degree");
    }
    auto ring = RingPtr(new GradedRing(std::move(vars), degree_cap));
    // Default integration: coefficient of the product of all top variable
    // powers, normalized to 1. Unbounded variables take the largest power
    // admitted by the cap in the remaining budget; this default only makes
    // sense for rings whose variables all have bounded nilpotency.
    Monomial top(ring->vars_.size(), 0);
    bool bounded = true;
    int deg = 0;
    for (size_t i = 0; i < ring->vars_.size(); ++i) {
        if (ring->vars_[i].nilpotency == 0) { bounded = false; break; }
        top[i] = ring->vars_[i].nilpotency - 1;
        deg += top[i] * ring->vars_[i].degree;
    }
    if (bounded && deg <= degree_cap && !ring->vars_.empty())
        const_cast<GradedRing*>(ring.get())->integration_ = {{top, Rational(1)}};
    return ring;
}

int GradedRing::variable_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown ring variable: " + name);
}

int GradedRing::monomial_degree(const Monomial& m) const {
    int d = 0;
    for (size_t i = 0; i < m.size(); ++i) d += m[i] * vars_[i].degree;
    return d;
}

bool GradedRing::has_split() const {
    return std::any_of(vars_.begin(), vars_.end(),
                       [](const GradedVariable& v) { return v.fiber; });
}

void GradedRing::set_fiber_volume(Monomial top_fiber, Rational weight) {
    fiber_volume_ = {std::move(top_fiber), std::move(weight)};
}

RingPtr GradedRing::base_ring() const {
    if (base_cache_) return base_cache_;
    std::vector<GradedVariable> base_vars;
    std::vector<size_t> keep;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (!vars_[i].fiber) {
            base_vars.push_back(vars_[i]);
            keep.push_back(i);
        }
    auto base = GradedRing::create(std::move(base_vars), cap_);
    // Restrict integration entries that are supported on base variables only.
    std::map<Monomial, Rational> integ;
    for (const auto& [mono, w] : integration_) {
        Monomial bm(keep.size(), 0);
        bool base_only = true;
        for (size_t i = 0; i < mono.size(); ++i)
            if (mono[i] != 0 && vars_[i].fiber) { base_only = false; break; }
        if (!base_only) continue;
        for (size_t j = 0; j < keep.size(); ++j) bm[j] = mono[keep[j]];
        integ[bm] = w;
    }
    if (!integ.empty()) const_cast<GradedRing&>(*base).set_integration(std::move(integ));
    base_cache_ = base;
    return base;
}

RingElement GradedRing::zero() const { return RingElement(shared_from_this()); }

RingElement GradedRing::one() const { return scalar(Cyclotomic(1)); }

RingElement GradedRing::scalar(const Cyclotomic& c) const {
    RingElement e(shared_from_this());
    if (!c.is_zero()) e.terms_[Monomial(vars_.size(), 0)] = c;
    return e;
}

RingElement GradedRing::var(const std::string& name, int power) const {
    Monomial m(vars_.size(), 0);
    m[variable_index(name)] = power;
    return monomial_element(m, Cyclotomic(1));
}

RingElement GradedRing::monomial_element(const Monomial& m, const Cyclotomic& c) const {
    if (m.size() != vars_.size()) throw std::invalid_argument("monomial arity mismatch");
    RingElement e(shared_from_this());
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] < 0) throw std::invalid_argument("negative exponent");
        if (vars_[i].nilpotency > 0 && m[i] >= vars_[i].nilpotency) return e;
    }
    if (monomial_degree(m) > cap_) return e;
    if (!c.is_zero()) e.terms_[m] = c;
    return e;
}

Cyclotomic RingElement::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Cyclotomic(0) : it->second;
}

Cyclotomic RingElement::constant_term() const {
    if (!ring_) return Cyclotomic(0);
    return coefficient(Monomial(ring_->variables().size(), 0));
}

RingElement RingElement::graded_part(int degree) const {
    RingElement r(ring_);
    for (const auto& [m, c] : terms_)
        if (ring_->monomial_degree(m) == degree) r.terms_[m] = c;
    return r;
}

int RingElement::max_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, ring_->monomial_degree(m));
    return d;
}

bool RingElement::is_homogeneous(int* degree_out) const {
    if (terms_.empty()) return true;
    int d = ring_->monomial_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (ring_->monomial_degree(m) != d) return false;
    if (degree_out) *degree_out = d;
    return true;
}

void RingElement::add_term(const Monomial& m, const Cyclotomic& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RingElement RingElement::operator-() const {
    RingElement r(ring_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

RingElement operator+(const RingElement& a, const RingElement& b) {
    if (a.ring_ && b.ring_ && a.ring_ != b.ring_)
        throw std::invalid_argument("elements of different rings");
    RingElement r(a.ring_ ? a.ring_ : b.ring_);
    r.terms_ = a.terms_;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

namespace {

// Koszul sign for sorting monomial a (canonical) against monomial b
// (canonical) into one canonical monomial: each odd occurrence in b moves
// past every odd occurrence in a with a larger variable index.
int koszul_sign(const GradedRing& ring, const Monomial& a, const Monomial& b) {
    int swaps = 0;
    int odd_tail = 0;  // odd occurrences of a with index > v, scanned backwards
    for (long v = static_cast<long>(a.size()) - 1; v >= 0; --v) {
        const bool odd = ring.variables()[v].degree % 2 == 1;
        if (odd && b[v] == 1) swaps += odd_tail;
        if (odd && a[v] == 1) ++odd_tail;
    }
    return swaps % 2 == 0 ? 1 : -1;
}

}  // namespace

RingElement operator*(const RingElement& a, const RingElement& b) {
    if (a.ring_ != b.ring_) throw std::invalid_argument("cross-ring product");
    const auto& ring = *a.ring_;
    RingElement r(a.ring_);
    const size_t n = ring.variables().size();
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(n);
            bool dead = false;
            for (size_t i = 0; i < n; ++i) {
                m[i] = ma[i] + mb[i];
                const auto& v = ring.variables()[i];
                if (v.nilpotency > 0 && m[i] >= v.nilpotency) { dead = true; break; }
            }
            if (dead || ring.monomial_degree(m) > ring.degree_cap()) continue;
            Cyclotomic c = ca * cb;
            if (koszul_sign(ring, ma, mb) < 0) c = -c;
            r.add_term(m, c);
        }
    }
    return r;
}

RingElement operator*(const Cyclotomic& s, const RingElement& a) {
    RingElement r(a.ring());
    if (s.is_zero()) return r;
    for (const auto& [m, c] : a.terms()) {
        Cyclotomic p = s * c;
        if (!p.is_zero()) r += a.ring()->monomial_element(m, p);
    }
    return r;
}

bool operator==(const RingElement& a, const RingElement& b) {
    return (a - b).is_zero();
}

RingElement RingElement::inverse() const {
    Cyclotomic c0 = constant_term();
    if (c0.is_zero()) throw std::domain_error("ring element is not invertible");
    Cyclotomic c0i = c0.inv();
    RingElement n = c0i * *this - ring_->one();  // nilpotent remainder
    RingElement acc = ring_->one(), pw = ring_->one();
    int min_deg = ring_->degree_cap() + 1;
    for (const auto& [m, c] : n.terms_)
        min_deg = std::min(min_deg, ring_->monomial_degree(m));
    if (!n.is_zero()) {
        const int steps = ring_->degree_cap() / std::max(min_deg, 1);
        for (int k = 0; k < steps && !pw.is_zero(); ++k) {
            pw = pw * (-n);
            acc = acc + pw;
        }
    }
    return c0i * acc;
}

RingElement apply_series(const QSeries& f, const RingElement& x) {
    if (f.has_principal_part())
        throw std::domain_error("cannot substitute into a Laurent series");
    const auto& ring = x.ring();
    if (!ring) throw std::invalid_argument("element has no ring");
    int min_deg = ring->degree_cap() + 1;
    for (const auto& [m, c] : x.terms()) {
        int d = ring->monomial_degree(m);
        if (d == 0 || d % 2 == 1)
            throw std::domain_error("substitution requires positive even degree");
        min_deg = std::min(min_deg, d);
    }
    const int k_max = x.is_zero() ? 0 : ring->degree_cap() / min_deg;
    if (k_max > f.trunc()) throw std::domain_error("beyond truncation");
    RingElement r = ring->zero(), pw = ring->one();
    for (int k = 0; k <= k_max; ++k) {
        Rational c = f.coefficient(k);
        if (!c.is_zero()) r = r + Cyclotomic(c) * pw;
        pw = pw * x;
        if (pw.is_zero()) break;
    }
    return r;
}

Cyclotomic integrate(const RingElement& a) {
    if (!a.ring()) return Cyclotomic(0);
    Cyclotomic acc(0);
    for (const auto& [mono, w] : a.ring()->integration())
        acc += a.coefficient(mono) * Cyclotomic(w);
    return acc;
}

RingElement fiber_integrate(const RingElement& a) {
    const auto& ring = a.ring();
    if (!ring) throw std::invalid_argument("element has no ring");
    if (!ring->has_split()) return a;  // strict transversal: identity
    if (!ring->fiber_volume())
        throw std::domain_error("fiber/base split has no designated top fiber monomial");
    const auto& [top, weight] = *ring->fiber_volume();
    auto base = ring->base_ring();
    std::vector<size_t> keep;
    for (size_t i = 0; i < ring->variables().size(); ++i)
        if (!ring->variables()[i].fiber) keep.push_back(i);
    RingElement r = base->zero();
    for (const auto& [m, c] : a.terms()) {
        bool match = true;
        for (size_t i = 0; i < m.size(); ++i) {
            if (!ring->variables()[i].fiber) continue;
            if (m[i] != top[i]) { match = false; break; }
        }
        if (!match) continue;
        Monomial bm(keep.size());
        for (size_t j = 0; j < keep.size(); ++j) bm[j] = m[keep[j]];
        r = r + base->monomial_element(bm, c * Cyclotomic(weight));
    }
    return r;
}

std::string RingElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << " + ";
        out << "(" << c.str() << ")";
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            out << "*" << ring_->variables()[i].name;
            if (m[i] > 1) out << "^" << m[i];
        }
        first = false;
    }
    return out.str();
}

Current Current::dual(RingPtr ring, Monomial m, std::string name) {
    Current c;
    c.kind_ = Kind::Dual;
    c.ring_ = ring;
    c.degree_ = ring->monomial_degree(m);
    c.dual_monomial_ = std::move(m);
    c.name_ = name.empty() ? "dual" : std::move(name);
    return c;
}

Current Current::fundamental(RingPtr ring) {
    Current c;
    c.kind_ = Kind::Fundamental;
    c.ring_ = std::move(ring);
    c.name_ = "fundamental";
    if (!c.ring_->integration().empty())
        c.degree_ = c.ring_->monomial_degree(c.ring_->integration().begin()->first);
    return c;
}

Current Current::basic_form(RingElement alpha, std::string name) {
    Current c;
    c.kind_ = Kind::BasicForm;
    c.ring_ = alpha.ring();
    c.alpha_ = std::move(alpha);
    c.name_ = name.empty() ? "basic" : std::move(name);
    return c;
}

Current Current::point_mass(RingPtr ring, Rational mass) {
    Current c = dual(ring, Monomial(ring->variables().size(), 0), "point-mass");
    c.mass_ = std::move(mass);
    return c;
}

Cyclotomic Current::pair(const RingElement& a) const {
    if (a.ring() != ring_) throw std::invalid_argument("current on a different ring");
    switch (kind_) {
        case Kind::Dual:
            return a.coefficient(dual_monomial_) * Cyclotomic(mass_);
        case Kind::Fundamental:
            return integrate(a);
        case Kind::BasicForm:
            return integrate(a * alpha_);
    }
    return Cyclotomic(0);
}

}  // namespace lef
