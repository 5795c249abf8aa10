#pragma once

#include <cstddef>
#include <shared_mutex>
#include <vector>

#include "zetalab/rational.hpp"

namespace zetalab {

// Append-only memo of Bernoulli numbers B_0, B_1, ... (B_1 = -1/2).
// Concurrent readers are fine; extension takes the writer lock.
class BernoulliTable {
  public:
    static BernoulliTable& instance();

    // Exact B_n; extends the table as needed.  ResourceError above the cap.
    Rational get(unsigned long n);

    void set_cap(unsigned long cap) { cap_ = cap; }
    unsigned long cap() const { return cap_; }

  private:
    BernoulliTable() = default;
    void extend_to(unsigned long n); // caller holds the writer lock

    std::vector<Rational> values_;
    mutable std::shared_mutex mutex_;
    unsigned long cap_ = 10000;
};

// Exact n-th Bernoulli number.
Rational bernoulli(unsigned long n);

// Exact Bernoulli polynomial value B_n(x) = sum_k C(n,k) B_k x^(n-k).
Rational bernoulli_poly(unsigned long n, const Rational& x);

} // namespace zetalab
