#pragma once

#include <map>
#include <vector>

#include "talforge/budget.hpp"
#include "talforge/cfg.hpp"
#include "talforge/pda.hpp"
#include "talforge/tree.hpp"

namespace talforge {

/* Result of a bounded derivation-tree search.  `trees` is a multiset: two
   distinct derivations of the same string are two entries.  `truncated`
   reports that the budget cut the search off before it was exhaustive. */
struct CfTrees {
    std::vector<DerivationTree> trees;
    bool truncated = false;
};

/* Bounded enumeration of a whole language slice: every derivation tree
   whose yield has length <= max_len, grouped by yield. */
struct CfLanguage {
    std::map<std::vector<Sym>, std::vector<DerivationTree>> by_string;
    bool truncated = false;
};

/* Rewrites every mixed or multi-terminal rhs by introducing one fresh
   pre-terminal per terminal occurrence.  Fresh names are derived from the
   production index and rhs position, so the output is reproducible; they are
   recorded in fresh_nonterminals.  Idempotent. */
Cfg cfg_normal_form(const Cfg& g);

/* Splits every transition that both scans and pushes, via a fresh stack
   symbol that is pushed on top and then popped by the scan.  Idempotent. */
Pda pda_normal_form(const Pda& p);

/* Single-state PDA whose stack alphabet is g's nonterminal set:
   A -> B1...Bk becomes q,A -ε-> q,B1...Bk and A -> a becomes q,A -a-> q,ε.
   Requires normal form. */
Pda cfg_to_pda(const Cfg& g);

/* State-pair grammar: nonterminals A<p|q>, productions
   A<p|rk> -> B1<q|r1> ... Bk<r(k-1)|rk> for every transition p,A -ε-> q,γ
   and every choice of intermediate states, plus A<p|q> -> a for every
   scanning transition p,A -a-> q,ε.  Start is S<q0|qf>.  The raw
   construction is emitted in full; `prune` removes nonterminals that cannot
   derive a terminal string or be reached from the start. */
Cfg pda_to_cfg(const Pda& p, bool prune = false);

/* Also available standalone, for converted systems. */
Cfg cfg_prune(const Cfg& g);

/* One-state construction: stack symbols X<q|r> meaning "X is popped while
   the machine runs from state q to state r".  Push transitions guess the
   intermediate states of the pushed symbols; exactly one guess per original
   run survives, so the result is tree-shape- and yield-preserving, not just
   language-preserving.  Requires normal form. */
Pda pda_one_state(const Pda& p);

/* All derivation trees of the grammar or automaton yielding exactly w,
   within budget.  CFG trees are production trees (branching); PDA trees are
   configuration chains with scanned symbols on the edges. */
CfTrees cf_derivation_trees(const Cfg& g, const std::vector<Sym>& w, const StepBudget& budget);
CfTrees cf_derivation_trees(const Pda& p, const std::vector<Sym>& w, const StepBudget& budget);

/* Bounded language enumeration used by profiles and the CLI. */
CfLanguage cf_language(const Cfg& g, size_t max_len, const StepBudget& budget);
CfLanguage cf_language(const Pda& p, size_t max_len, const StepBudget& budget);

}  // namespace talforge
