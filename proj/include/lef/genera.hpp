#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lef/gring.hpp"

namespace lef {

/// Rotation angle theta = 2*pi*a/m, always a rational multiple of a full turn
/// so that the character value e^{i theta} is an exact cyclotomic.
struct Angle {
    long a = 1;
    long m = 4;

    /// e^{i theta}.
    Cyclotomic weight() const { return Cyclotomic::root_of_unity(m, a); }
    /// e^{i theta/2}, lifted to conductor 2m.
    Cyclotomic half_weight() const { return Cyclotomic::root_of_unity(2 * m, a); }
    bool is_zero() const { return a % m == 0; }
    /// Strictly inside (0, pi)?
    bool in_open_half() const {
        long r = ((a % m) + m) % m;
        return r > 0 && 2 * r < m;
    }
};

enum class BundleKind { COMPLEX, REAL };

struct WeightedRoot {
    RingElement root;       // degree-2 class (Chern root / Pontryagin half-root)
    Cyclotomic weight{1};   // character of h on the line; 1 = non-equivariant
};

/// Bundle presented by formal roots. COMPLEX stores one root per line; REAL
/// stores half-roots x_j (complexification has roots +-x_j with weights
/// (w, conj w)) plus an optional odd-rank trivial summand.
struct EquivariantBundle {
    BundleKind kind = BundleKind::COMPLEX;
    std::vector<WeightedRoot> roots;
    bool odd_trivial_summand = false;  // REAL only
    std::string name;
    RingPtr ring;  // ambient ring; inferred from the roots when unset

    RingPtr resolve_ring() const;

    int rank() const {
        int r = static_cast<int>(roots.size());
        return kind == BundleKind::COMPLEX ? r : 2 * r + (odd_trivial_summand ? 1 : 0);
    }
    /// REAL -> COMPLEX with roots +-x_j, weights (w, conj w).
    EquivariantBundle complexified() const;
};

/// Bundle presented only by its total Chern or Pontryagin class.
struct TotalClassBundle {
    BundleKind kind = BundleKind::REAL;  // REAL: Pontryagin (degree 4k parts)
    RingElement total_class;             // constant term 1
    int rank = 0;
    std::string name;
};

/// prod_i f(root_i) (COMPLEX) or prod_j f(x_j) over half-roots (REAL, f even).
RingElement genus_of_roots(const QSeries& f, const EquivariantBundle& E);

/// Same genus from the total class alone, via Newton power sums of the formal
/// roots and exp of the log-series: exp(sum_k (log f)_k * p_k).
RingElement genus_of_total_class(const QSeries& f, const TotalClassBundle& B);

/// sum_i w_i e^{root_i} (at_h) or sum_i e^{root_i}.
RingElement chern_character(const EquivariantBundle& E, bool at_h);

/// ch of lambda_{-1}(E)(h) = prod_i (1 - w_i e^{root_i}). If some weight is 1
/// the constant term vanishes; *non_invertible is set when supplied.
RingElement lambda_minus1_ch(const EquivariantBundle& E, bool* non_invertible = nullptr);

/// 2^{s1} * prod_theta ((1 - e^{i theta})(1 - e^{-i theta}))^{s(theta)}.
Cyclotomic det_one_minus_h(const std::vector<std::pair<Angle, int>>& thetas, int s1);

/// S^theta(N(theta)) = [prod_j (1-e^{y_j+i th})(1-e^{-y_j-i th}) /
/// ((1-e^{i th})(1-e^{-i th}))]^{-1}; N is COMPLEX with roots y_j.
RingElement S_theta_class(const EquivariantBundle& N, const Angle& theta);

/// R(N(-1)) = [prod_j ((1+e^{x_j})/2)((1+e^{-x_j})/2)]^{-1}; N is REAL.
RingElement R_class(const EquivariantBundle& N);

/// prod_j x_j for an even-rank oriented REAL bundle.
RingElement euler_class(const EquivariantBundle& E);

/// ch(Lambda_t E) resp. ch(S_t E) as coefficients of t^0..t^Q.
std::vector<RingElement> lambda_t_ch(const EquivariantBundle& E, int Q);
std::vector<RingElement> sym_t_ch(const EquivariantBundle& E, int Q);

/// t^n coefficient of ch of R_q = (x)_{j>=1} Lambda_{q^j}(F) (x)_{j>=1} S_{q^j}(F),
/// truncated mod q^{Q+1}; F is COMPLEX (complexify real bundles first).
RingElement rigidity_R_coeff(const EquivariantBundle& F, int n, int Q);

}  // namespace lef
