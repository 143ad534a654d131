#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "lef/multipoly.hpp"
#include "lef/series.hpp"

namespace lef {

struct IdentityResult {
    std::string name;
    std::map<std::string, std::string> params;
    bool verdict = false;
    std::string witness;  // first failing coefficient/monomial; empty iff verdict
    double millis = 0;

    nlohmann::json to_json() const;
};

/// All verifiers accept a mutation index: mutate >= 0 perturbs one coefficient
/// in the pipeline (selected by the index) and must yield a concrete witness.

/// sum_{j=0}^n prod_{k != j} coth(u_k - u_j) = (1 + (-1)^n)/2, verified as an
/// exact rational-function identity after t_k = e^{2 u_k}.
IdentityResult verify_coth_cancellation(int n, int mutate = -1);

/// coth(z) = 1/z + sum_{l>=1} 2^{2l}/(2l)! b_{2l} z^{2l-1}, to degree T.
IdentityResult verify_coth_bernoulli(int T, int mutate = -1);

/// sqrt(1+u) coefficients: recurrence 2a_n + sum a_j a_{n-j} = 0, alternating
/// nonzero signs, denominators are powers of 2, for 1 <= n <= N.
IdentityResult verify_sqrt_claim(int N, int mutate = -1);

/// A-hat(CP_q) for q <= q_max: ring route vs 2^{-q} [u^q] (1+u^2)^{-1/2};
/// vanishing iff q odd.
IdentityResult verify_ahat_cp(int q_max, int mutate = -1);

/// A-hat(KP_{q-1}) = 0 exactly for 2 <= q <= q_max.
IdentityResult verify_ahat_kp(int q_max, int mutate = -1);

/// ch(W) from the k-fold tensor construction equals prod (1 + eta_i beta_i).
IdentityResult verify_ch_W(int k_max, int mutate = -1);

/// Numeric oracle for the coth identity: max |sum - (1+(-1)^n)/2| over random
/// complex sample points (optionally with the angle-decorated arguments).
double coth_numeric_max_error(int n, int samples, unsigned seed, bool with_angles = false);

}  // namespace lef
