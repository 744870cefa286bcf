#pragma once

#include <vector>

#include "kbonacci/exact_int.hpp"

namespace kbonacci {

// Order k plus the k initial terms; the single source of truth for a
// sequence instance. Each term past the initial ones is the sum of the k
// preceding terms.
class SequenceSpec {
  public:
    SequenceSpec(int k, std::vector<ExactInt> initial_terms);

    // The (0, ..., 0, 1) instance: k-1 zeros followed by a one.
    static SequenceSpec special(int k);

    int k() const { return k_; }
    const std::vector<ExactInt>& initial_terms() const { return initial_terms_; }
    bool is_special() const;

    bool operator==(const SequenceSpec&) const = default;

  private:
    int k_;
    std::vector<ExactInt> initial_terms_;
};

// Working precision for closed-form evaluation at index n. Uses the crude
// dominant-root bound 2 so the choice needs no root finding:
//   max(64, n + 32 + 8k).
int default_precision_for(int k, long n);
int default_precision_for(const SequenceSpec& spec, long n);

}  // namespace kbonacci
