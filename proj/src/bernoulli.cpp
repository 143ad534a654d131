#include "lef/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace lef {

Rational bernoulli(long n) {
    if (n < 0) throw std::domain_error("bernoulli index must be non-negative");
    static std::vector<Rational> table{Rational(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    for (long m = static_cast<long>(table.size()); m <= n; ++m) {
        Rational acc(0);
        for (long k = 0; k < m; ++k) acc += binomial(m + 1, k) * table[k];
        table.push_back(-acc / Rational(m + 1));
    }
    return table[n];
}

}  // namespace lef
