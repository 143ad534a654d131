#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "lef/rational.hpp"

namespace lef {

/// Sparse multivariate polynomial over Q in up to 8 variables, exponents < 256.
/// Monomial keys are packed into a single 64-bit word.
class MultiPoly {
public:
    explicit MultiPoly(int nvars) : nvars_(nvars) {
        if (nvars < 0 || nvars > 8) throw std::invalid_argument("supports up to 8 variables");
    }

    static MultiPoly constant(int nvars, const Rational& c) {
        MultiPoly p(nvars);
        if (!c.is_zero()) p.terms_[0] = c;
        return p;
    }

    static MultiPoly variable(int nvars, int i) {
        MultiPoly p(nvars);
        p.terms_[pack_one(i)] = Rational(1);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    MultiPoly operator-() const {
        MultiPoly r(nvars_);
        for (const auto& [k, c] : terms_) r.terms_[k] = -c;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [k, c] : b.terms_) r.add(k, c);
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r(a.nvars_);
        r.terms_.reserve(a.terms_.size() * 2);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) r.add(add_keys(ka, kb), ca * cb);
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return (a - b).is_zero();
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        Rational acc(0);
        for (const auto& [k, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < nvars_; ++i) {
                int e = static_cast<int>((k >> (8 * i)) & 0xff);
                if (e) t *= point[i].pow(e);
            }
            acc += t;
        }
        return acc;
    }

    /// Render up to max_terms terms, e.g. "(3/2) t0^2 t1 + ...".
    std::string str(size_t max_terms = 4) const {
        if (terms_.empty()) return "0";
        std::string out;
        size_t shown = 0;
        for (const auto& [k, c] : terms_) {
            if (shown == max_terms) { out += " + ..."; break; }
            if (shown) out += " + ";
            out += "(" + c.str() + ")";
            for (int i = 0; i < nvars_; ++i) {
                int e = static_cast<int>((k >> (8 * i)) & 0xff);
                if (!e) continue;
                out += " t" + std::to_string(i);
                if (e > 1) out += "^" + std::to_string(e);
            }
            ++shown;
        }
        return out;
    }

private:
    static uint64_t pack_one(int i) { return uint64_t(1) << (8 * i); }

    static uint64_t add_keys(uint64_t a, uint64_t b) {
        // Per-byte exponent overflow would corrupt neighbors; inputs here stay
        // far below 255 per variable.
        return a + b;
    }

    void add(uint64_t k, const Rational& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    int nvars_;
    std::unordered_map<uint64_t, Rational> terms_;
};

/// Decides sum_j N_j / D_j == constant exactly by clearing denominators:
/// sum_j N_j * prod_{k != j} D_k == constant * prod_k D_k.
bool rational_identity_check(const std::vector<MultiPoly>& numerators,
                             const std::vector<MultiPoly>& denominators,
                             const Rational& constant);

}  // namespace lef
