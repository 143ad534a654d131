#include "lef/series.hpp"

namespace lef {

namespace {

QSeries exp_series(int T) {
    QSeries s(T);
    Rational c(1);
    for (int k = 0; k <= T; ++k) {
        s = s + QSeries::monomial(c, k, T);
        c /= Rational(k + 1);
    }
    return s;
}

QSeries sinh_series(int T) {
    QSeries s(T);
    for (int k = 1; k <= T; k += 2)
        s = s + QSeries::monomial(Rational(1) / factorial(k), k, T);
    return s;
}

QSeries cosh_series(int T) {
    QSeries s(T);
    for (int k = 0; k <= T; k += 2)
        s = s + QSeries::monomial(Rational(1) / factorial(k), k, T);
    return s;
}

// (1+u)^e for half-integer exponent e = p/2, via the binomial series.
QSeries binomial_series(const Rational& e, int T) {
    QSeries s(T);
    Rational c(1);
    for (int k = 0; k <= T; ++k) {
        s = s + QSeries::monomial(c, k, T);
        c *= (e - Rational(k)) / Rational(k + 1);
    }
    return s;
}

QSeries scale_variable(const QSeries& f, const Rational& a) {
    // f(a*z)
    QSeries r(f.trunc());
    for (const auto& [d, c] : f.terms())
        r = r + QSeries::monomial(c * a.pow(d), d, f.trunc());
    return r;
}

}  // namespace

QSeries named_series(const std::string& name, int T) {
    if (T < 0) throw std::domain_error("truncation order must be >= 0");
    // Divisions below lose precision at the valuation shift, so build the
    // primitives with enough headroom.
    const int pad = T + 4;
    if (name == "exp") return exp_series(T);
    if (name == "sinh") return sinh_series(T);
    if (name == "cosh") return cosh_series(T);
    if (name == "todd") {
        // x / (1 - e^{-x})
        QSeries em = scale_variable(exp_series(pad), Rational(-1));
        QSeries den = QSeries(Rational(1), pad) - em;
        return (QSeries::monomial(Rational(1), 1, pad) / den).truncated(T);
    }
    if (name == "ahat") {
        // (x/2) / sinh(x/2)
        QSeries sh = scale_variable(sinh_series(pad), Rational(1, 2));
        return (QSeries::monomial(Rational(1, 2), 1, pad) / sh).truncated(T);
    }
    if (name == "lgenus") {
        // x / tanh(x) = x cosh(x) / sinh(x)
        QSeries num = QSeries::monomial(Rational(1), 1, pad) * cosh_series(pad);
        return (num / sinh_series(pad)).truncated(T);
    }
    if (name == "coth") {
        // cosh / sinh, Laurent with principal part 1/z.
        return (cosh_series(pad) / sinh_series(pad)).truncated(T);
    }
    if (name == "binomial") return binomial_series(Rational(-1, 2), T);
    if (name == "sqrt_one_plus") return binomial_series(Rational(1, 2), T);
    throw std::invalid_argument("unknown named series: " + name);
}

std::vector<Rational> sqrt_taylor_coeffs(long N) {
    if (N < 0) throw std::domain_error("N must be >= 0");
    QSeries f = named_series("sqrt_one_plus", static_cast<int>(N));
    std::vector<Rational> a;
    a.reserve(N + 1);
    for (long n = 0; n <= N; ++n) a.push_back(f.coefficient(static_cast<int>(n)));
    return a;
}

}  // namespace lef
