#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "lef/rational.hpp"

namespace lef {

/// Element of the cyclotomic field Q(zeta_m), stored as a coefficient vector
/// of length deg(Phi_m) in the power basis 1, zeta, ..., zeta^{phi(m)-1},
/// fully reduced modulo the m-th cyclotomic polynomial Phi_m.
///
/// Arithmetic between different conductors lifts both operands to the lcm.
/// Values are immutable once constructed; all operations are pure.
class Cyclotomic {
public:
    /// Zero of conductor 1.
    Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}
    /// Rational scalar, conductor 1.
    Cyclotomic(const Rational& r) : conductor_(1), coeffs_(1, r) {}
    Cyclotomic(long n) : conductor_(1), coeffs_(1, Rational(n)) {}

    /// zeta_m^k.
    static Cyclotomic root_of_unity(long m, long k = 1);
    /// Element of Q(zeta_m) from an un-reduced polynomial in zeta_m.
    static Cyclotomic from_poly(long m, std::vector<Rational> poly);
    /// e^{i*theta} with theta = 2*pi*a/m.
    static Cyclotomic exp_2pi_i(long a, long m);
    /// The imaginary unit, zeta_4.
    static Cyclotomic i() { return root_of_unity(4, 1); }

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const { return *this == Cyclotomic(1); }

    /// Lift to a conductor that is a multiple of the current one.
    Cyclotomic lift(long target) const;
    /// Canonicalize to the minimal conductor containing this element.
    Cyclotomic canonical() const;
    /// Coefficient vector in the power basis of Q(zeta_d), if the element
    /// lies in that subfield (requires d | conductor after lifting).
    std::optional<std::vector<Rational>> coords_in(long d) const;

    bool is_rational() const { return coords_in(1).has_value(); }
    Rational to_rational() const;

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    Cyclotomic inv() const;
    /// Complex conjugation, zeta |-> zeta^{m-1}; a ring involution.
    Cyclotomic conj() const;
    Cyclotomic pow(long e) const;

    /// Numeric value under the embedding zeta_m = e^{2*pi*i/m} (test oracle).
    std::complex<double> embed() const;

    /// Render as a polynomial in z = zeta_m, e.g. "1/2 + 3/1*z^2 (conductor 8)".
    std::string str() const;

private:
    Cyclotomic(long m, std::vector<Rational> reduced)
        : conductor_(m), coeffs_(std::move(reduced)) {}

    long conductor_;
    std::vector<Rational> coeffs_;
};

/// Integer coefficients of the m-th cyclotomic polynomial Phi_m (low to high,
/// monic). Cached across calls; thread-safe.
const std::vector<mpz_class>& cyclotomic_polynomial(long m);

long euler_phi(long m);

/// Membership test for the ring of integers Z[zeta_kappa] of Q(zeta_kappa):
/// true iff `a` lies in Q(zeta_kappa) and its power-basis coordinates there
/// are all integers.
bool is_cyclotomic_integer(const Cyclotomic& a, long kappa);

}  // namespace lef
