#pragma once

#include <cstdint>
#include <stdexcept>

namespace talforge {

/* Enumeration guard.  Derivation sets are usually infinite, so every
   enumerator charges one unit per rule/transition application against
   max_nodes and prunes any sentential form, stack or tree frontier longer
   than max_sentential_length.  Exceeding either limit is not an error: the
   enumeration stops early and the result carries a truncation flag. */
struct StepBudget {
    uint64_t max_nodes = 100000;
    uint32_t max_sentential_length = 64;

    void validate() const {
        if (max_nodes == 0 || max_sentential_length == 0)
            throw std::invalid_argument("StepBudget fields must be strictly positive");
    }

    StepBudget scaled(uint64_t factor) const {
        StepBudget b = *this;
        b.max_nodes = max_nodes > UINT64_MAX / factor ? UINT64_MAX : max_nodes * factor;
        return b;
    }
};

/* Per-call meter.  `charge` returns false once the budget is exhausted and
   records that the enumeration is no longer exhaustive.  `prune` marks a
   frontier dropped for exceeding the length cap. */
class BudgetMeter {
  public:
    explicit BudgetMeter(const StepBudget& b) : budget_(b) { b.validate(); }

    bool charge() {
        if (used_ >= budget_.max_nodes) {
            truncated_ = true;
            return false;
        }
        ++used_;
        return true;
    }

    bool fits_length(size_t len) {
        if (len <= budget_.max_sentential_length) return true;
        truncated_ = true;
        return false;
    }

    void mark_truncated() { truncated_ = true; }
    bool truncated() const { return truncated_; }
    uint64_t used() const { return used_; }
    const StepBudget& budget() const { return budget_; }

  private:
    StepBudget budget_;
    uint64_t used_ = 0;
    bool truncated_ = false;
};

}  // namespace talforge
