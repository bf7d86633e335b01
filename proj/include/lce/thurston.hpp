#pragma once

#include <functional>

#include "lce/words.hpp"

namespace lce {

struct ThurstonResult {
    bool equal = false;
    std::int64_t classes = 0;        // final class count (= beta(n))
    int rewriting_bound = 0;         // intermediate word-length bound that sufficed
    std::int64_t relations_used = 0; // merges performed
};

/// Finished refinement of S'^{<= n}: query any two words of length <= n.
class ThurstonPartition {
public:
    ThurstonPartition(const GenSet& gens, int n, const SymmetricSet& I,
                      const std::function<std::int64_t(int)>& beta, int demoCap = 5);

    bool equal(const Word& u, const Word& v) const;
    std::int64_t classes() const { return classes_; }
    int rewriting_bound() const { return bound_; }
    std::int64_t relations_used() const { return merges_; }

private:
    int n_;
    std::int64_t classes_ = 0;
    std::int64_t merges_ = 0;
    int bound_ = 0;
    size_t genCount_ = 0;
    std::vector<std::int32_t> classOf_;  // indexed by word rank among S'^{<= n}
};

/// The word-problem-from-growth demonstration: partition S'^{<= n} by the
/// free equality, merge along enumerated relations (single relator
/// insertions/deletions/replacements, fair via a growing intermediate-length
/// bound), stop exactly when the class count reaches beta(n).
///
/// Throws std::logic_error if the class count ever drops below beta (a broken
/// oracle) and limit_error when n or the rewriting bound exceed the demo caps.
ThurstonResult wp_from_growth_demo(const GenSet& gens, const Word& u, const Word& v,
                                   const SymmetricSet& I,
                                   const std::function<std::int64_t(int)>& beta,
                                   int demoCap = 5);

}  // namespace lce
