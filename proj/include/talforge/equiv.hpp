#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "talforge/control.hpp"
#include "talforge/core_cf.hpp"
#include "talforge/tal.hpp"

namespace talforge {

/* AHU-style canonical code of the unordered, unlabeled shape of a tree:
   "(" + the children's codes in sorted order + ")".  Labels and edge
   annotations are ignored. */
std::string canonical_code(const DerivationTree& t);

/* Finite witness of d-weak equivalence: how many derivations each string
   has, up to a length bound. */
struct LanguageProfile {
    std::map<std::vector<Sym>, uint64_t> counts;
    bool truncated = false;
    size_t max_len = 0;

    std::string to_json() const;
};

/* Finite witness of d-strong equivalence: the multiset of (canonical shape
   code, yield) pairs up to a length bound. */
struct ShapeProfile {
    std::map<std::pair<std::string, std::vector<Sym>>, uint64_t> counts;
    bool truncated = false;
    size_t max_len = 0;

    std::string to_json() const;
};

/* Any system the checkers accept. */
using AnySystem = std::variant<Cfg, Pda, LdCfg, LdPda, TwoLevel, Tag, Lig, Epda, Paa>;

const std::vector<Sym>& system_terminals(const AnySystem& s);
std::string system_kind(const AnySystem& s);

/* Bounded enumeration of any system's derivation trees, grouped by string.
   LD systems are enumerated by their plain derivation semantics (labels
   ignored); two-level systems are normalized first when needed. */
struct SystemEnumeration {
    std::map<std::vector<Sym>, std::vector<DerivationTree>> by_string;
    std::map<std::vector<Sym>, uint64_t> counts;
    bool truncated = false;
};
SystemEnumeration enumerate_system(const AnySystem& s, size_t max_len, const StepBudget& budget);

LanguageProfile language_profile(const AnySystem& s, size_t max_len, const StepBudget& budget);
ShapeProfile shape_profile(const AnySystem& s, size_t max_len, const StepBudget& budget);

/* Verdicts are never extrapolated: "equal" requires both sides exhaustive
   within the bound.  A truncated side's counts are lower bounds, which can
   still prove "unequal"; otherwise agreement under truncation is
   "inconclusive". */
enum class Verdict { Equal, Unequal, Inconclusive };

struct EquivReport {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<Sym> witness;       // diverging string (unequal only)
    std::string witness_detail;     // counts/codes on both sides
    bool left_truncated = false;
    bool right_truncated = false;

    std::string render() const;
};

EquivReport check_d_weak(const AnySystem& a, const AnySystem& b, size_t max_len, const StepBudget& budget);
EquivReport check_d_strong(const AnySystem& a, const AnySystem& b, size_t max_len, const StepBudget& budget);

}  // namespace talforge
