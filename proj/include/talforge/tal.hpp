#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "talforge/budget.hpp"
#include "talforge/tree.hpp"

namespace talforge {

/* -------- Tree-adjoining grammars (spinal fragment executable) -------- */

/* A node of a production's rhs tree.  Interior nodes are variables or
   constants; leaves are foot nodes (at most one per tree), substitution
   variables, terminals or ε. */
struct TagRhsNode {
    Sym label = 0;
    bool is_terminal = false;  // terminal or ε leaf
    bool is_foot = false;
    bool is_subst = false;     // substitution-marked variable leaf
    std::vector<TagRhsNode> children;

    bool operator==(const TagRhsNode&) const = default;
};

struct Tag {
    std::vector<Sym> variables;
    std::vector<Sym> constants;
    std::vector<Sym> terminals;
    Sym start = 0;

    struct Prod {
        Sym lhs;  // a variable
        TagRhsNode rhs;
        bool operator==(const Prod&) const = default;
    };
    std::vector<Prod> productions;
};

void validate_tag(const Tag& g);

/* Working trees rewritten by adjunction.  Node ids are path addresses
   (child indices from the root), recomputed after each surgery. */
struct TagWorkingNode {
    Sym label = 0;
    bool is_terminal = false;
    std::vector<TagWorkingNode> children;

    bool operator==(const TagWorkingNode&) const = default;
};
using TagPath = std::vector<size_t>;

/* Rewrites the variable node at `at` with the production: the rhs tree
   replaces the node and the node's children move below the rhs foot.
   Errors: label mismatch; footless rhs at a node that has children. */
TagWorkingNode tag_step(const TagWorkingNode& tree, const TagPath& at, const Tag::Prod& prod);

/* Spine discipline: every rhs node lies on the root-to-foot path (for
   footless trees: on the path to some designated leaf) or is a child of a
   node on it.  Returns the indices of offending productions. */
bool tag_is_spinal(const Tag& g, std::vector<size_t>* offending = nullptr);

/* -------- Linear indexed grammars -------- */

struct Lig {
    std::vector<Sym> nonterminals;
    std::vector<Sym> terminals;
    std::vector<Sym> stack_alphabet;

    /* One rhs occurrence: a terminal, a nonterminal with a fixed stack, or
       the unique inheritor Y[γ··] that receives the lhs stack under γ. */
    struct Item {
        enum Kind { Terminal, Fixed, Inheritor } kind = Terminal;
        Sym symbol = 0;            // terminal or nonterminal
        std::vector<Sym> stack;    // fixed stack or pushed prefix γ
        bool operator==(const Item&) const = default;
    };
    struct Prod {
        bool lexical = false;      // X[A] -> a  (pops the last symbol)
        Sym lhs;
        Sym pop = 0;               // top (lexical: only) symbol popped
        Sym terminal = 0;          // lexical only; ε allowed
        std::vector<Item> rhs;     // non-lexical only
        bool operator==(const Prod&) const = default;
    };
    std::vector<Prod> productions;

    Sym start = 0;
    Sym start_stack_symbol = 0;
};

void validate_lig(const Lig& g);

/* Sentential forms for the stepping interface. */
struct LigForm {
    struct Entry {
        bool is_terminal = false;
        Sym symbol = 0;
        std::vector<Sym> stack;  // top-first; nonterminals only
        bool operator==(const Entry&) const = default;
    };
    std::vector<Entry> entries;
    bool operator==(const LigForm&) const = default;
};

/* Applies a production at the given nonterminal occurrence.  Errors: the
   occurrence is a terminal, its stack is empty or its top does not match,
   or a lexical production meets a stack of length != 1. */
LigForm lig_step(const LigForm& form, size_t at, const Lig::Prod& prod);

/* -------- Embedded pushdown automata -------- */

struct Epda {
    std::vector<Sym> states;
    std::vector<Sym> input_alphabet;
    std::vector<Sym> stack_alphabet;

    /* General transition: pop A from the top inner stack, scan a, push γ in
       its place and insert whole stacks above/below the modified stack; or
       pop a whole singleton stack [A].  Inserted stacks may hold anything
       for stepping, but only [S]-stacks can be normalized. */
    struct Tr {
        bool pops_stack = false;            // p,[A] -a-> q, ε
        Sym from;
        Sym pop;
        Sym scan;                           // ε allowed
        Sym to;
        std::vector<std::vector<Sym>> insert_above;
        std::vector<Sym> push;
        std::vector<std::vector<Sym>> insert_below;
        bool operator==(const Tr&) const = default;
    };
    std::vector<Tr> transitions;

    Sym initial_state = 0;
    Sym initial_symbol = 0;
    Sym final_state = 0;
};

void validate_epda(const Epda& e);

/* Configuration: outer sequence of inner stacks, top-first both ways. */
struct EpdaConfig {
    Sym state;
    std::vector<std::vector<Sym>> stacks;
    bool operator==(const EpdaConfig&) const = default;
    auto operator<=>(const EpdaConfig&) const = default;
};

/* Applies a transition, touching only the top inner stack. */
EpdaConfig epda_step(const EpdaConfig& c, const Epda::Tr& tr);

/* -------- Pushdown adjoining automata -------- */

/* A PAA configuration is a tree: each stack symbol carries an embedded
   stack drawn below it, and the whole structure hangs from an implicit
   root.  A node's children are the symbols of its embedded stack, in
   order.  Transitions replace the top variable (found by descending first
   children past constants) with the rhs stack; the foot inherits the
   variable's embedded stack; constant leaves are then deleted. */
struct PaaRhsNode {
    Sym label = 0;
    bool is_foot = false;
    std::vector<PaaRhsNode> children;
    bool operator==(const PaaRhsNode&) const = default;
};

struct Paa {
    std::vector<Sym> terminals;
    std::vector<Sym> variables;
    std::vector<Sym> constants;

    struct Tr {
        Sym lhs;                      // a variable
        Sym scan;                     // ε allowed
        std::vector<PaaRhsNode> rhs;  // the rhs stack (top-level symbols)
        bool operator==(const Tr&) const = default;
    };
    std::vector<Tr> transitions;
    Sym initial = 0;  // a variable
};

void validate_paa(const Paa& m);

struct PaaConfigNode {
    Sym label = 0;
    std::vector<PaaConfigNode> children;
    bool operator==(const PaaConfigNode&) const = default;
};
struct PaaConfig {
    std::vector<PaaConfigNode> stack;  // children of the implicit root
    bool operator==(const PaaConfig&) const = default;
};

/* The position of the top variable, as a path of child indices from the
   implicit root; absent when no variable is reachable. */
std::optional<std::vector<size_t>> paa_top_variable(const PaaConfig& c);

/* Applies a transition to the top variable.  Errors: no top variable, lhs
   mismatch, or a footless rhs where the variable still has an embedded
   stack.  Constant leaves are deleted to a fixpoint afterwards. */
PaaConfig paa_step(const PaaConfig& c, const Paa::Tr& tr);

/* Spinal check, as for TAG. */
bool paa_is_spinal(const Paa& m, std::vector<size_t>* offending = nullptr);

/* -------- Uniform enumeration and normal forms -------- */

struct TalEntry {
    uint64_t count = 0;
    std::vector<DerivationTree> trees;
};
struct TalEnumeration {
    std::map<std::vector<Sym>, TalEntry> by_string;
    bool truncated = false;
};

/* Complete derivations with yield length <= max_len, keyed by string, using
   each formalism's derivation-tree notion: TAG derivations are counted as
   production-use trees, LIG as production trees, EPDA as configuration
   chains, PAA as stack rewriting trees. */
TalEnumeration tal_enumerate(const Tag& g, size_t max_len, const StepBudget& budget);
TalEnumeration tal_enumerate(const Lig& g, size_t max_len, const StepBudget& budget);
TalEnumeration tal_enumerate(const Epda& e, size_t max_len, const StepBudget& budget);
TalEnumeration tal_enumerate(const Paa& m, size_t max_len, const StepBudget& budget);

/* Normal forms (five TAG shapes, three LIG shapes, three EPDA shapes, five
   PAA shapes).  Splitting preserves per-string derivation counts.  TAG and
   PAA inputs must be spinal and role-consistent (each variable used either
   for adjunction or for substitution, not both); violations are diagnosed,
   not repaired. */
Tag tal_normal_form(const Tag& g);
Lig tal_normal_form(const Lig& g);
Epda tal_normal_form(const Epda& e);
Paa tal_normal_form(const Paa& m);

bool tag_in_normal_form(const Tag& g);
bool lig_in_normal_form(const Lig& g);
bool epda_in_normal_form(const Epda& e);
bool paa_in_normal_form(const Paa& m);

}  // namespace talforge
