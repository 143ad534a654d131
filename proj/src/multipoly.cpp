#include "lef/multipoly.hpp"

namespace lef {

bool rational_identity_check(const std::vector<MultiPoly>& numerators,
                             const std::vector<MultiPoly>& denominators,
                             const Rational& constant) {
    if (numerators.size() != denominators.size() || numerators.empty())
        throw std::invalid_argument("mismatched numerator/denominator lists");
    const int nv = numerators[0].nvars();
    for (const auto& d : denominators)
        if (d.is_zero()) throw std::domain_error("zero denominator polynomial");

    MultiPoly lhs(nv);
    for (size_t j = 0; j < numerators.size(); ++j) {
        MultiPoly term = numerators[j];
        for (size_t k = 0; k < denominators.size(); ++k)
            if (k != j) term = term * denominators[k];
        lhs = lhs + term;
    }
    MultiPoly rhs = MultiPoly::constant(nv, constant);
    for (const auto& d : denominators) rhs = rhs * d;
    return lhs == rhs;
}

}  // namespace lef
