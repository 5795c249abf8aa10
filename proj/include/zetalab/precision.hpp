#pragma once

#include <mpfr.h>

#include <cmath>

#include "zetalab/errors.hpp"

namespace zetalab {

// Digit budget for every floating evaluation.  Results are computed at
// working precision (target + guard digits); only target digits are ever
// claimed in a report.  max_terms is a hard cap on any single series.
class PrecisionContext {
  public:
    explicit PrecisionContext(int target_digits, int guard_digits = 20,
                              long max_terms = 2'000'000)
        : target_(target_digits), guard_(guard_digits), max_terms_(max_terms) {
        if (target_ < 10) throw ValidationError("PrecisionContext: target_digits must be >= 10");
        if (guard_ < 10) throw ValidationError("PrecisionContext: guard_digits must be >= 10");
        if (max_terms_ < 1) throw ValidationError("PrecisionContext: max_terms must be >= 1");
    }

    int target_digits() const { return target_; }
    int guard_digits() const { return guard_; }
    int working_digits() const { return target_ + guard_; }
    long max_terms() const { return max_terms_; }

    // Binary working precision, with slack for rounding accumulation.
    mpfr_prec_t working_bits() const {
        return static_cast<mpfr_prec_t>(std::ceil(working_digits() * 3.3219280948873626)) + 32;
    }

    PrecisionContext with_guard(int guard) const {
        return PrecisionContext(target_, guard, max_terms_);
    }
    PrecisionContext with_extra_guard(int extra) const {
        return PrecisionContext(target_, guard_ + extra, max_terms_);
    }
    PrecisionContext with_max_terms(long mt) const {
        return PrecisionContext(target_, guard_, mt);
    }

  private:
    int target_;
    int guard_;
    long max_terms_;
};

} // namespace zetalab
