#include "zetalab/bernoulli.hpp"

#include <mutex>

#include "zetalab/errors.hpp"

namespace zetalab {

BernoulliTable& BernoulliTable::instance() {
    static BernoulliTable table;
    return table;
}

Rational BernoulliTable::get(unsigned long n) {
    if (n > cap_)
        throw ResourceError("bernoulli: index " + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap_));
    {
        std::shared_lock lock(mutex_);
        if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    extend_to(n);
    return values_[n];
}

void BernoulliTable::extend_to(unsigned long n) {
    if (values_.empty()) {
        values_.emplace_back(1);
        values_.emplace_back(Rational(-1, 2));
    }
    // sum_{j=0}^{i} C(i+1, j) B_j = 0  =>  B_i = -(1/(i+1)) sum_{j<i} C(i+1, j) B_j
    for (unsigned long i = values_.size(); i <= n; ++i) {
        if (i % 2 == 1) {
            values_.emplace_back(0);
            continue;
        }
        Rational acc(0);
        for (unsigned long j = 0; j < i; ++j) {
            if (j >= 3 && j % 2 == 1) continue;
            acc += binomial_r(i + 1, j) * values_[j];
        }
        values_.push_back(-(acc / Rational(static_cast<long>(i) + 1)));
    }
}

Rational bernoulli(unsigned long n) { return BernoulliTable::instance().get(n); }

Rational bernoulli_poly(unsigned long n, const Rational& x) {
    Rational acc(0);
    std::vector<Rational> xpows(n + 1, Rational(1));
    for (unsigned long i = 1; i <= n; ++i) xpows[i] = xpows[i - 1] * x;
    for (unsigned long k = 0; k <= n; ++k) {
        if (k >= 3 && k % 2 == 1) continue; // B_k = 0
        acc += binomial_r(n, k) * bernoulli(k) * xpows[n - k];
    }
    return acc;
}

} // namespace zetalab
