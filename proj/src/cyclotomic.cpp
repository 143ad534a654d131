#include "lef/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace lef {

namespace {

// Exact division of integer polynomials, remainder must vanish.
std::vector<mpz_class> poly_div_exact(const std::vector<mpz_class>& num,
                                      const std::vector<mpz_class>& den) {
    std::vector<mpz_class> rem = num;
    std::vector<mpz_class> quot(num.size() - den.size() + 1, mpz_class(0));
    const mpz_class& lead = den.back();
    for (long i = static_cast<long>(rem.size()) - 1;
         i >= static_cast<long>(den.size()) - 1; --i) {
        if (rem[i] == 0) continue;
        mpz_class q = rem[i] / lead;
        long shift = i - (static_cast<long>(den.size()) - 1);
        quot[shift] = q;
        for (size_t j = 0; j < den.size(); ++j) rem[shift + j] -= q * den[j];
    }
    return quot;
}

std::vector<long> divisors(long m) {
    std::vector<long> ds;
    for (long d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            ds.push_back(d);
            if (d != m / d) ds.push_back(m / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// Reduce a rational polynomial modulo the monic integer polynomial Phi.
std::vector<Rational> reduce_mod(std::vector<Rational> p, const std::vector<mpz_class>& phi) {
    const size_t deg = phi.size() - 1;
    for (long i = static_cast<long>(p.size()) - 1; i >= static_cast<long>(deg); --i) {
        if (p[i].is_zero()) continue;
        Rational c = p[i];
        p[i] = Rational(0);
        for (size_t j = 0; j < deg; ++j)
            p[i - deg + j] -= c * Rational(phi[j]);
    }
    p.resize(deg, Rational(0));
    while (p.size() < deg) p.push_back(Rational(0));
    return p;
}

}  // namespace

long euler_phi(long m) {
    long result = m;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(long m) {
    static std::map<long, std::vector<mpz_class>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.
    std::function<const std::vector<mpz_class>&(long)> get = [&](long n) -> const std::vector<mpz_class>& {
        auto found = cache.find(n);
        if (found != cache.end()) return found->second;
        std::vector<mpz_class> num(n + 1, mpz_class(0));
        num[0] = -1;
        num[n] = 1;
        for (long d : divisors(n)) {
            if (d == n) continue;
            num = poly_div_exact(num, get(d));
        }
        return cache.emplace(n, std::move(num)).first->second;
    };
    return get(m);
}

Cyclotomic Cyclotomic::from_poly(long m, std::vector<Rational> poly) {
    if (m < 1) throw std::domain_error("conductor must be positive");
    return Cyclotomic(m, reduce_mod(std::move(poly), cyclotomic_polynomial(m)));
}

Cyclotomic Cyclotomic::root_of_unity(long m, long k) {
    k %= m;
    if (k < 0) k += m;
    std::vector<Rational> p(k + 1, Rational(0));
    p[k] = Rational(1);
    return from_poly(m, std::move(p));
}

Cyclotomic Cyclotomic::exp_2pi_i(long a, long m) { return root_of_unity(m, a); }

bool Cyclotomic::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& r) { return r.is_zero(); });
}

Cyclotomic Cyclotomic::lift(long target) const {
    if (target == conductor_) return *this;
    if (target % conductor_ != 0)
        throw std::domain_error("lift target is not a multiple of the conductor");
    long step = target / conductor_;
    std::vector<Rational> p(static_cast<size_t>((coeffs_.size() - 1) * step + 1), Rational(0));
    for (size_t j = 0; j < coeffs_.size(); ++j) p[j * step] = coeffs_[j];
    return from_poly(target, std::move(p));
}

std::optional<std::vector<Rational>> Cyclotomic::coords_in(long d) const {
    if (conductor_ % d != 0) {
        // Lift both into lcm and retry there.
        long L = std::lcm(conductor_, d);
        return lift(L).coords_in(d);
    }
    const long phi_m = static_cast<long>(coeffs_.size());
    const long phi_d = euler_phi(d);
    const long step = conductor_ / d;
    // Columns: zeta_m^{j*step} reduced mod Phi_m, for j = 0..phi_d-1.
    std::vector<std::vector<Rational>> cols;
    cols.reserve(phi_d);
    for (long j = 0; j < phi_d; ++j)
        cols.push_back(root_of_unity(conductor_, j * step).coeffs_);
    // Solve cols * c = coeffs_ by Gaussian elimination on the augmented system.
    std::vector<std::vector<Rational>> A(phi_m, std::vector<Rational>(phi_d + 1, Rational(0)));
    for (long r = 0; r < phi_m; ++r) {
        for (long j = 0; j < phi_d; ++j) A[r][j] = cols[j][r];
        A[r][phi_d] = coeffs_[r];
    }
    long row = 0;
    std::vector<long> pivot_col(phi_d, -1);
    for (long col = 0; col < phi_d && row < phi_m; ++col) {
        long pr = -1;
        for (long r = row; r < phi_m; ++r)
            if (!A[r][col].is_zero()) { pr = r; break; }
        if (pr == -1) continue;
        std::swap(A[row], A[pr]);
        Rational inv = A[row][col].inv();
        for (long j = col; j <= phi_d; ++j) A[row][j] *= inv;
        for (long r = 0; r < phi_m; ++r) {
            if (r == row || A[r][col].is_zero()) continue;
            Rational f = A[r][col];
            for (long j = col; j <= phi_d; ++j) A[r][j] -= f * A[row][j];
        }
        pivot_col[col] = row;
        ++row;
    }
    std::vector<Rational> sol(phi_d, Rational(0));
    for (long col = 0; col < phi_d; ++col)
        if (pivot_col[col] != -1) sol[col] = A[pivot_col[col]][phi_d];
    // Consistency: rows below the pivots must have zero rhs.
    for (long r = row; r < phi_m; ++r)
        if (!A[r][phi_d].is_zero()) return std::nullopt;
    return sol;
}

Cyclotomic Cyclotomic::canonical() const {
    for (long d : divisors(conductor_)) {
        if (d == conductor_) break;
        if (auto c = coords_in(d)) return Cyclotomic(d, std::move(*c));
    }
    return *this;
}

Rational Cyclotomic::to_rational() const {
    auto c = coords_in(1);
    if (!c) throw std::domain_error("cyclotomic value is not rational");
    return (*c)[0];
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rational> c = coeffs_;
    for (auto& r : c) r = -r;
    return Cyclotomic(conductor_, std::move(c));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    long L = std::lcm(a.conductor_, b.conductor_);
    Cyclotomic x = a.lift(L), y = b.lift(L);
    for (size_t j = 0; j < x.coeffs_.size(); ++j) x.coeffs_[j] += y.coeffs_[j];
    return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    long L = std::lcm(a.conductor_, b.conductor_);
    Cyclotomic x = a.lift(L), y = b.lift(L);
    std::vector<Rational> p(x.coeffs_.size() + y.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < x.coeffs_.size(); ++i) {
        if (x.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < y.coeffs_.size(); ++j) {
            if (y.coeffs_[j].is_zero()) continue;
            p[i + j] += x.coeffs_[i] * y.coeffs_[j];
        }
    }
    return Cyclotomic::from_poly(L, std::move(p));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inv(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    long L = std::lcm(a.conductor_, b.conductor_);
    return a.lift(L).coeffs_ == b.lift(L).coeffs_;
}

Cyclotomic Cyclotomic::inv() const {
    if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
    // Extended Euclid in Q[x] against Phi_m (irreducible, so the gcd is 1).
    const auto& phi_z = cyclotomic_polynomial(conductor_);
    std::vector<Rational> r0(phi_z.size());
    for (size_t j = 0; j < phi_z.size(); ++j) r0[j] = Rational(phi_z[j]);
    std::vector<Rational> r1 = coeffs_;
    while (!r1.empty() && r1.back().is_zero()) r1.pop_back();
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
    auto deg = [](const std::vector<Rational>& p) {
        return static_cast<long>(p.size()) - 1;
    };
    while (deg(r1) > 0) {
        // Divide r0 by r1.
        std::vector<Rational> q(deg(r0) - deg(r1) + 1, Rational(0));
        std::vector<Rational> rem = r0;
        Rational lead_inv = r1.back().inv();
        for (long i = deg(rem); i >= deg(r1); --i) {
            if (rem[i].is_zero()) continue;
            Rational c = rem[i] * lead_inv;
            q[i - deg(r1)] = c;
            for (long j = 0; j <= deg(r1); ++j)
                rem[i - deg(r1) + j] -= c * r1[j];
        }
        while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
        if (rem.empty()) rem.push_back(Rational(0));
        // s2 = s0 - q * s1.
        std::vector<Rational> s2(std::max(s0.size(), q.size() + s1.size() - 1), Rational(0));
        for (size_t j = 0; j < s0.size(); ++j) s2[j] = s0[j];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i].is_zero()) continue;
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant; inverse is s1 / r1.
    Rational c_inv = r1[0].inv();
    for (auto& s : s1) s *= c_inv;
    return from_poly(conductor_, std::move(s1));
}

Cyclotomic Cyclotomic::conj() const {
    std::vector<Rational> p(static_cast<size_t>(conductor_), Rational(0));
    for (size_t j = 0; j < coeffs_.size(); ++j)
        p[(j * static_cast<size_t>(conductor_ - 1)) % static_cast<size_t>(conductor_)] +=
            coeffs_[j];
    return from_poly(conductor_, std::move(p));
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Cyclotomic result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::complex<double> Cyclotomic::embed() const {
    std::complex<double> sum = 0.0;
    const double theta = 2.0 * M_PI / static_cast<double>(conductor_);
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        sum += coeffs_[j].to_double() *
               std::polar(1.0, theta * static_cast<double>(j));
    }
    return sum;
}

std::string Cyclotomic::str() const {
    std::ostringstream out;
    bool first = true;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        if (!first) out << " + ";
        out << coeffs_[j].str();
        if (j > 0) out << "*z^" << j;
        first = false;
    }
    if (first) out << "0/1";
    if (conductor_ > 1) out << " (conductor " << conductor_ << ")";
    return out.str();
}

bool is_cyclotomic_integer(const Cyclotomic& a, long kappa) {
    auto coords = a.coords_in(kappa);
    if (!coords) return false;
    return std::all_of(coords->begin(), coords->end(),
                       [](const Rational& r) { return r.is_integer(); });
}

}  // namespace lef
