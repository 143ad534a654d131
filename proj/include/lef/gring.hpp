#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lef/cyclotomic.hpp"
#include "lef/series.hpp"

namespace lef {

/// Exponent vector in the ring's declared variable order.
using Monomial = std::vector<int>;

struct GradedVariable {
    std::string name;
    int degree = 1;
    int nilpotency = 0;  // x^n == 0 when n > 0; 0 means unbounded
    bool fiber = false;  // belongs to the leaf/fiber direction of a split
};

class RingElement;
class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

/// Graded-commutative polynomial quotient ring with variable-power
/// nilpotency relations, a global degree cap, an integration functional on
/// designated top monomials, and an optional fiber/base split.
///
/// Odd-degree variables square to zero (characteristic 0); the Koszul sign
/// of a product is absorbed into the coefficient. Immutable once built.
class GradedRing : public std::enable_shared_from_this<GradedRing> {
public:
    static RingPtr create(std::vector<GradedVariable> vars, int degree_cap);

    const std::vector<GradedVariable>& variables() const { return vars_; }
    int degree_cap() const { return cap_; }
    int variable_index(const std::string& name) const;

    int monomial_degree(const Monomial& m) const;

    /// Integration functional. Defaults to "coefficient of the product of all
    /// top variable powers |-> 1"; override per ring as needed.
    void set_integration(std::map<Monomial, Rational> functional) {
        integration_ = std::move(functional);
    }
    const std::map<Monomial, Rational>& integration() const { return integration_; }

    bool has_split() const;
    /// Ring on the base (non-fiber) variables; integration entries restricted.
    RingPtr base_ring() const;
    /// Weight attached to the top fiber monomial under fiber integration.
    void set_fiber_volume(Monomial top_fiber, Rational weight);
    const std::optional<std::pair<Monomial, Rational>>& fiber_volume() const {
        return fiber_volume_;
    }

    RingElement zero() const;
    RingElement one() const;
    RingElement scalar(const Cyclotomic& c) const;
    RingElement var(const std::string& name, int power = 1) const;
    RingElement monomial_element(const Monomial& m, const Cyclotomic& c) const;

private:
    GradedRing(std::vector<GradedVariable> vars, int cap);

    std::vector<GradedVariable> vars_;
    int cap_;
    std::map<Monomial, Rational> integration_;
    std::optional<std::pair<Monomial, Rational>> fiber_volume_;
    mutable RingPtr base_cache_;  // memoized so pairings share one base ring
};

/// Sparse cohomology-ring element; scalars are exact cyclotomics
/// (rationals ride along at conductor 1).
class RingElement {
public:
    RingElement() = default;

    const RingPtr& ring() const { return ring_; }
    const std::map<Monomial, Cyclotomic>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Cyclotomic coefficient(const Monomial& m) const;
    Cyclotomic constant_term() const;
    /// The homogeneous part of the given degree.
    RingElement graded_part(int degree) const;
    int max_degree() const;
    bool is_homogeneous(int* degree_out = nullptr) const;

    RingElement operator-() const;
    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const Cyclotomic& s, const RingElement& a);
    RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
    RingElement& operator*=(const RingElement& o) { return *this = *this * o; }
    friend bool operator==(const RingElement& a, const RingElement& b);
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

    /// Multiplicative inverse; requires nonzero constant term (unit), computed
    /// by inverting the constant in the field and a finite geometric series on
    /// the nilpotent remainder.
    RingElement inverse() const;

    std::string str() const;

    friend class GradedRing;
    friend RingElement apply_series(const QSeries& f, const RingElement& x);

private:
    RingElement(RingPtr ring) : ring_(std::move(ring)) {}
    void add_term(const Monomial& m, const Cyclotomic& c);

    RingPtr ring_;
    std::map<Monomial, Cyclotomic> terms_;
};

/// Substitute a nilpotent even-degree element into a power series (finite sum).
RingElement apply_series(const QSeries& f, const RingElement& x);

/// Fundamental-class integration: applies the ring's integration functional.
Cyclotomic integrate(const RingElement& a);

/// Integration over the fiber variables: extracts the coefficient of the top
/// fiber monomial (weighted by the fiber volume) as an element of the base
/// ring. Identity (same ring) when the fiber variable set is empty.
RingElement fiber_integrate(const RingElement& a);

/// Holonomy-invariant current model: dual monomial, fundamental class, or a
/// basic-form current C_alpha pairing b |-> integrate(b * alpha).
class Current {
public:
    static Current dual(RingPtr ring, Monomial m, std::string name = "");
    static Current fundamental(RingPtr ring);
    static Current basic_form(RingElement alpha, std::string name = "");
    /// Degree-0 current of the given mass (dual of the unit monomial, scaled).
    static Current point_mass(RingPtr ring, Rational mass);

    int degree() const { return degree_; }
    const std::string& name() const { return name_; }
    const RingPtr& ring() const { return ring_; }
    Rational mass() const { return mass_; }

    Cyclotomic pair(const RingElement& a) const;

private:
    enum class Kind { Dual, Fundamental, BasicForm };
    Kind kind_ = Kind::Fundamental;
    RingPtr ring_;
    Monomial dual_monomial_;
    RingElement alpha_;
    Rational mass_{1};
    int degree_ = 0;
    std::string name_;
};

inline Cyclotomic pair_current(const RingElement& a, const Current& c) { return c.pair(a); }

}  // namespace lef
