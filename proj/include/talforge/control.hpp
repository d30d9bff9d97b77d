#pragma once

#include <map>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "talforge/budget.hpp"
#include "talforge/cfg.hpp"
#include "talforge/pda.hpp"
#include "talforge/tree.hpp"

namespace talforge {

/* A labeled distinguished CFG: every production carries a label, and at most
   one rhs nonterminal may be marked distinguished (the controlled path
   continues through it). */
struct LdCfg {
    std::vector<Sym> nonterminals;
    std::vector<Sym> terminals;
    std::vector<Sym> labels;

    struct Prod {
        Sym label;
        Sym lhs;
        std::vector<Sym> rhs;
        int distinguished = -1;  // index into rhs, or -1

        bool operator==(const Prod&) const = default;
    };
    std::vector<Prod> productions;
    Sym start = 0;
};

/* A labeled distinguished PDA.  The final configuration is fixed to
   (final_state, empty stack); inputs declaring anything else are rejected. */
struct LdPda {
    std::vector<Sym> states;
    std::vector<Sym> input_alphabet;
    std::vector<Sym> stack_alphabet;
    std::vector<Sym> labels;

    struct Tr {
        Sym label;
        Sym from;
        Sym pop;
        Sym scan;  // ε allowed
        Sym to;
        std::vector<Sym> push;
        int distinguished = -1;  // index into push, or -1

        bool operator==(const Tr&) const = default;
    };
    std::vector<Tr> transitions;

    Sym initial_state = 0;
    Sym initial_symbol = 0;
    Sym final_state = 0;
};

/* Internal constructions may give several transitions the same label (the
   label then names a set of controllee rules); user input must label
   uniquely. */
enum class LabelDiscipline { Unique, AllowShared };

void ld_validate(const LdCfg& g, LabelDiscipline d = LabelDiscipline::Unique);
void ld_validate(const LdPda& p, LabelDiscipline d = LabelDiscipline::Unique);

/* Normal form for LD systems: every production/transition is either lexical
   (rhs/push is a single terminal or empty, no distinguished mark, and for
   LD-PDAs the scan carries the terminal) or a distinguished push (rhs/push
   all nonterminal, nonempty, exactly one distinguished, scan ε).  An
   all-nonterminal rule without a distinguished mark has no normal-form
   image and is rejected. */
bool ld_in_normal_form(const LdCfg& g);
bool ld_in_normal_form(const LdPda& p);

enum class Pairing { CfgCfg, PdaCfg, CfgPda, PdaPda };

/* Controller-over-controllee system.  The controller's terminal alphabet
   must equal the controllee's label set. */
struct TwoLevel {
    std::variant<Cfg, Pda> controller;
    std::variant<LdCfg, LdPda> controllee;

    Pairing pairing() const;
    const std::vector<Sym>& terminals() const;
};

void validate_two_level(const TwoLevel& s, LabelDiscipline d = LabelDiscipline::AllowShared);

/* Normalizes both levels.  Controllee pre-terminal splitting introduces
   fresh labels, which the controller is extended to accept as singleton
   words; this preserves the derived language and per-string derivation
   counts but not tree shapes. */
TwoLevel two_level_normal_form(const TwoLevel& s);

/* A terminal string with holes.  The reserved `*` symbol marks each hole;
   two-level yields of controller-CFG pairings are assembled by plugging. */
struct HoledString {
    std::vector<Sym> items;  // terminals and hole markers

    size_t holes() const;
    bool operator==(const HoledString&) const = default;
    auto operator<=>(const HoledString&) const = default;
};

/* Replaces u's first hole by all of v (v's own holes survive).  Plugging
   into a hole-free string is an error. */
HoledString plug(const HoledString& u, const HoledString& v);

/* -------- Weir rewriting semantics (control words) -------- */

/* One complete derivation under the control-word semantics: the completed
   control words (a set, as in the acceptance condition W ⊆ L(controller))
   plus the number of rewriting steps. */
struct WeirDerivation {
    std::set<std::vector<Sym>> control_words;
    size_t steps = 0;
};

struct WeirResult {
    std::vector<WeirDerivation> derivations;  // multiset
    bool truncated = false;
};

/* Enumerates the leftmost (for LD-CFG controllees; PDA steps are already
   ordered) rewriting sequences deriving w whose completed control words all
   lie in the controller's language.  Controller membership is decided by
   bounded enumeration with `controller_budget` (default: 4x budget). */
WeirResult weir_derive(const TwoLevel& sys, const std::vector<Sym>& w, const StepBudget& budget,
                       std::optional<StepBudget> controller_budget = std::nullopt);

/* -------- Two-level derivation trees -------- */

/* A node of a two-level derivation tree.  The payload mirrors the four
   pairings:
     PDA∘PDA  — controllee state + nested stack X[s,γ]...;
     PDA∘CFG  — controllee nonterminal with controller configuration X[q,γ],
                or a terminal leaf;
     CFG∘CFG  — tri-label A<X|Z> (Z absent = thread closes), or a terminal
                leaf;
     CFG∘PDA  — controllee state + a string over tri-labels and holes. */
struct TwoLevelNode {
    struct NestedEntry {  // controllee stack symbol with controller config
        Sym symbol;
        Sym ctrl_state;
        std::vector<Sym> ctrl_stack;
        bool operator==(const NestedEntry&) const = default;
        auto operator<=>(const NestedEntry&) const = default;
    };
    struct TriLabel {  // controller symbol over controllee slots
        Sym ctrl;
        Sym left;
        std::optional<Sym> right;
        bool operator==(const TriLabel&) const = default;
        auto operator<=>(const TriLabel&) const = default;
    };
    /* CFG∘PDA stack strings interleave tri-labels with hole markers. */
    struct StringItem {
        bool is_hole = false;
        TriLabel tri;
        bool operator==(const StringItem&) const = default;
        auto operator<=>(const StringItem&) const = default;
    };

    struct PdaPda {
        Sym state;
        std::vector<NestedEntry> stack;
        bool operator==(const PdaPda&) const = default;
        auto operator<=>(const PdaPda&) const = default;
    };
    struct PdaCfg {
        bool is_terminal = false;
        Sym terminal = 0;  // ε allowed (leaf contributing nothing)
        Sym symbol = 0;
        Sym ctrl_state = 0;
        std::vector<Sym> ctrl_stack;
        bool operator==(const PdaCfg&) const = default;
        auto operator<=>(const PdaCfg&) const = default;
    };
    struct CfgCfg {
        bool is_terminal = false;
        Sym terminal = 0;
        TriLabel tri;
        bool operator==(const CfgCfg&) const = default;
        auto operator<=>(const CfgCfg&) const = default;
    };
    struct CfgPda {
        Sym state;
        std::vector<StringItem> items;
        bool operator==(const CfgPda&) const = default;
        auto operator<=>(const CfgPda&) const = default;
    };

    std::variant<PdaPda, PdaCfg, CfgCfg, CfgPda> payload;

    bool operator==(const TwoLevelNode&) const = default;
    std::string render() const;
};

/* One way a node can be expanded: the ordered children it licenses, the
   terminal scanned on the step (automaton-style pairings annotate the edge;
   grammar-style pairings attach terminal leaves as children instead). */
struct Expansion {
    std::vector<TwoLevelNode> children;
    Sym scanned;  // ε when nothing is scanned
    char case_tag;  // 'a', 'b' or 'c', after the three derivation cases
};

/* Every expansion the derivation cases license for this node label.
   Depends only on the node, never on its context.  Requires a normalized
   controllee; the controller may be in general form (its scanning
   transitions/mixed productions expand by the general rules). */
std::vector<Expansion> expand_node(const TwoLevel& sys, const TwoLevelNode& node);

/* The pairing's start node. */
TwoLevelNode two_level_root(const TwoLevel& sys);

struct TwoLevelTrees {
    std::vector<DerivationTree> trees;
    bool truncated = false;
};

/* All complete derivation trees with yield w.  Yields of controller-CFG
   pairings are assembled bottom-up with plug; automaton-controllee pairings
   read yields off edge annotations. */
TwoLevelTrees two_level_trees(const TwoLevel& sys, const std::vector<Sym>& w, const StepBudget& budget);

/* Bounded slice of the derived language, grouped by string. */
struct TwoLevelLanguage {
    std::map<std::vector<Sym>, std::vector<DerivationTree>> by_string;
    bool truncated = false;
};
TwoLevelLanguage two_level_language(const TwoLevel& sys, size_t max_len, const StepBudget& budget);

}  // namespace talforge
