#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace talforge {

/* All alphabet symbols (terminals, nonterminals, stack symbols, states,
   labels) are interned strings.  A Sym is an index into a global table, so
   symbol comparison is integer comparison and systems can share symbols
   freely.  Interning is append-only and thread-safe. */
using Sym = uint32_t;

/* Interns a name, returning the same Sym for the same spelling. */
Sym intern(std::string_view name);

/* The spelling of an interned symbol. */
const std::string& sym_name(Sym s);

/* The empty string is interned at startup and doubles as the ε marker for
   scans and edge annotations. */
Sym eps_sym();
bool is_eps(Sym s);

/* The reserved hole marker `*` used in partial yields.  It belongs to no
   user alphabet; the text format rejects it as a declared symbol. */
Sym hole_sym();

/* Composite symbols built by the constructions.  They use angle brackets and
   `|` inside the name (e.g. "A<p|q>" for a state-pair nonterminal or
   "A<X|Z>" for a tri-label, with "_" standing for the absent right slot).
   The spellings are ordinary interned names, so they survive the text
   format round trip. */
Sym sym_pair(Sym base, Sym left, Sym right);     // base<left|right>
Sym sym_pair_bottom(Sym base, Sym left);          // base<left|_>
Sym sym_indexed(Sym base, Sym index);             // base<index>

/* Splits a composite spelling back into its parts; returns false when the
   symbol is not composite.  `right` is absent for the base<left|_> form. */
bool sym_split_pair(Sym s, Sym* base, Sym* left, bool* has_right, Sym* right);

/* A name not colliding with anything interned so far, formed from `stem`
   plus as many apostrophes as needed.  Used by normalization when a
   deterministic fresh name would clash with a user symbol. */
Sym fresh_sym(const std::string& stem, const std::vector<Sym>& avoid);

/* Renders a symbol sequence by concatenating names; ε for the empty one. */
std::string render_string(const std::vector<Sym>& w);

}  // namespace talforge
