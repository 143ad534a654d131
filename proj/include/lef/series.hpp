#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lef/bernoulli.hpp"
#include "lef/rational.hpp"

namespace lef {

/// Univariate truncated formal power / Laurent series with exact coefficients.
///
/// Coefficients of degree > trunc() are *unknown*, not zero; arithmetic
/// propagates the tightest valid truncation order of the result. A finite
/// principal part (finitely many negative degrees) is allowed; only coth
/// needs it.
template <class K>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int trunc) : trunc_(trunc) {}
    TruncatedSeries(const K& c, int trunc) : trunc_(trunc) {
        if (!(c == K(0))) coeffs_[0] = c;
    }

    static TruncatedSeries monomial(const K& c, int degree, int trunc) {
        TruncatedSeries s(trunc);
        if (degree > trunc) throw std::domain_error("monomial degree beyond truncation");
        if (!(c == K(0))) s.coeffs_[degree] = c;
        return s;
    }

    int trunc() const { return trunc_; }

    /// Lowest stored degree (0 for the zero series).
    int valuation() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }

    bool is_zero() const { return coeffs_.empty(); }
    bool has_principal_part() const { return !coeffs_.empty() && coeffs_.begin()->first < 0; }

    const K coefficient(int q) const {
        if (q > trunc_) throw std::domain_error("beyond truncation");
        auto it = coeffs_.find(q);
        return it == coeffs_.end() ? K(0) : it->second;
    }

    const std::map<int, K>& terms() const { return coeffs_; }

    TruncatedSeries truncated(int t) const {
        TruncatedSeries r(std::min(t, trunc_));
        for (const auto& [d, c] : coeffs_)
            if (d <= r.trunc_) r.coeffs_[d] = c;
        return r;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r(trunc_);
        for (const auto& [d, c] : coeffs_) r.coeffs_[d] = -c;
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.trunc_, b.trunc_));
        for (const auto& [d, c] : a.coeffs_)
            if (d <= r.trunc_) r.add_term(d, c);
        for (const auto& [d, c] : b.coeffs_)
            if (d <= r.trunc_) r.add_term(d, c);
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a + (-b);
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        // Known up to min over the unknown-tail positions.
        int t = std::min(a.trunc_ + b.valuation(), b.trunc_ + a.valuation());
        TruncatedSeries r(t);
        for (const auto& [da, ca] : a.coeffs_)
            for (const auto& [db, cb] : b.coeffs_) {
                if (da + db > t) continue;
                r.add_term(da + db, ca * cb);
            }
        return r;
    }

    friend TruncatedSeries operator*(const K& s, const TruncatedSeries& a) {
        TruncatedSeries r(a.trunc_);
        for (const auto& [d, c] : a.coeffs_) r.add_term(d, s * c);
        return r;
    }

    /// Multiplicative inverse; the lowest coefficient must be invertible.
    TruncatedSeries inverse() const {
        if (is_zero()) throw std::domain_error("non-invertible leading coefficient");
        int v = valuation();
        // *this = c z^v (1 + n), invert the unit part by Neumann series.
        K lead = coeffs_.begin()->second;
        K lead_inv = K(1) / lead;
        int order = trunc_ - v;  // unit part known up to this order
        TruncatedSeries unit(order);
        for (const auto& [d, c] : coeffs_) unit.add_term(d - v, lead_inv * c);
        TruncatedSeries n = unit;  // n = unit - 1, valuation >= 1
        n.add_term(0, K(-1));
        TruncatedSeries acc(K(1), order), pw(K(1), order);
        for (int k = 1; k <= order && !pw.is_zero(); ++k) {
            pw = pw * (-n);
            acc = acc + pw;
        }
        TruncatedSeries r(trunc_ - 2 * v);
        for (const auto& [d, c] : acc.coeffs_)
            if (d - v <= r.trunc_) r.add_term(d - v, lead_inv * c);
        return r;
    }

    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a * b.inverse();
    }

    /// f(g) with g of positive valuation (or f a polynomial within truncation).
    TruncatedSeries compose(const TruncatedSeries& g) const {
        if (has_principal_part())
            throw std::domain_error("cannot compose a Laurent series");
        if (!g.is_zero() && g.valuation() <= 0)
            throw std::domain_error("composition requires zero constant term");
        int t = std::min(trunc_ * std::max(g.valuation(), 1), g.trunc_);
        if (g.is_zero()) t = g.trunc_;
        TruncatedSeries r(t), pw(K(1), t);
        for (int k = 0; k <= trunc_; ++k) {
            K c = coefficient(k);
            if (!(c == K(0))) r = r + c * pw;
            pw = pw * g;
            if (pw.is_zero()) break;
        }
        return r;
    }

    std::string str(const std::string& var = "z") const {
        std::ostringstream out;
        bool first = true;
        for (const auto& [d, c] : coeffs_) {
            if (!first) out << " + ";
            out << coeff_str(c);
            if (d != 0) out << "*" << var << "^" << d;
            first = false;
        }
        if (first) out << "0";
        out << " (+O(" << var << "^" << trunc_ + 1 << "))";
        return out.str();
    }

private:
    void add_term(int d, const K& c) {
        auto it = coeffs_.find(d);
        if (it == coeffs_.end()) {
            if (!(c == K(0))) coeffs_[d] = c;
        } else {
            it->second += c;
            if (it->second == K(0)) coeffs_.erase(it);
        }
    }

    static std::string coeff_str(const K& c) {
        if constexpr (requires { c.str(); }) return c.str();
        else { std::ostringstream o; o << c; return o.str(); }
    }

    int trunc_;
    std::map<int, K> coeffs_;
};

using QSeries = TruncatedSeries<Rational>;

/// Named-series catalogue: exp, sinh, cosh, coth (Laurent), todd, ahat,
/// lgenus, binomial (1+u)^{-1/2}, sqrt_one_plus (1+u)^{1/2}.
QSeries named_series(const std::string& name, int order);

/// Coefficients a_0..a_N of sqrt(1+u^2) = sum a_n u^{2n}.
std::vector<Rational> sqrt_taylor_coeffs(long N);

}  // namespace lef
