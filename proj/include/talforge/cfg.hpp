#pragma once

#include <set>
#include <vector>

#include "talforge/symbols.hpp"

namespace talforge {

/* A context-free grammar.  Alphabets are kept as sorted vectors; validation
   checks that they are disjoint, that the start symbol is declared and that
   every production mentions only declared symbols.  fresh_nonterminals marks
   the pre-terminals introduced by normalization. */
struct Cfg {
    std::vector<Sym> nonterminals;
    std::vector<Sym> terminals;

    struct Prod {
        Sym lhs;
        std::vector<Sym> rhs;

        bool operator==(const Prod&) const = default;
        auto operator<=>(const Prod&) const = default;
    };
    std::vector<Prod> productions;
    Sym start = 0;
    std::set<Sym> fresh_nonterminals;

    bool is_nonterminal(Sym s) const;
    bool is_terminal(Sym s) const;
};

void validate_cfg(const Cfg& g);

/* Normal form: every rhs is all-nonterminal (any length, including empty)
   or a single terminal. */
bool cfg_in_normal_form(const Cfg& g);

}  // namespace talforge
