#pragma once

#include <set>
#include <vector>

#include "talforge/symbols.hpp"

namespace talforge {

/* A pushdown automaton with a single initial configuration (initial state,
   one stack symbol) and a single final configuration (final state, empty
   stack).  A transition pops exactly one symbol, scans one terminal or ε,
   and pushes a sequence. */
struct Pda {
    std::vector<Sym> states;
    std::vector<Sym> input_alphabet;
    std::vector<Sym> stack_alphabet;

    struct Tr {
        Sym from;
        Sym pop;
        Sym scan;  // ε allowed
        Sym to;
        std::vector<Sym> push;

        bool operator==(const Tr&) const = default;
        auto operator<=>(const Tr&) const = default;
    };
    std::vector<Tr> transitions;

    Sym initial_state = 0;
    Sym initial_symbol = 0;
    Sym final_state = 0;
    std::set<Sym> fresh_symbols;
};

void validate_pda(const Pda& p);

/* Normal form: every transition either scans ε (pushing anything) or scans
   one terminal and pushes nothing.  Pop-type transitions may also scan ε. */
bool pda_in_normal_form(const Pda& p);

}  // namespace talforge
