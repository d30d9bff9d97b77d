#pragma once

#include <string>
#include <vector>

#include "talforge/equiv.hpp"

namespace talforge {

/* A parsed workbench file: named system declarations in order.  Names are
   unique; `import "path";` splices another file first. */
struct WorkbenchFile {
    struct Decl {
        std::string name;
        AnySystem system;
    };
    std::vector<Decl> declarations;

    const AnySystem& lookup(const std::string& name) const;
};

/* Parses the text format:

     system cfg G2 {
       start S2 ;
       S2 -> T L3 ;
       T -> ;                    # empty rhs
       L1 -> "l1" ;              # quoted terminals
     }
     system pda P2 {
       initial q [S2] ;
       final q [] ;
       q , S2 -> q , T L3 @ eps ;
       q , L1 -> q , @ "l1" ;
     }
     system ldcfg G1 { start S1 ; l1 : S1 -> A ^S1 D ; l4 : A -> "a" ; }
     system ldpda P1 { ... l1 : q , S1 -> q , A ^S1 D @ eps ; ... }
     system tag T { start S ; vars S ; consts X ; A -> X( Y! , Z* , "a" ) ; }
     system lig L { start S [S0] ; X [A ..] -> Y [S0] Z [.. B] ; X [A] -> "a" ; }
     system epda E { initial p [S] ; final q [] ;
                     p , [A ..] -> q , [S] [B ..] [S] @ eps ; p , [A] -> q @ "a" ; }
     system paa M { initial S ; A -> X( S2* ) @ eps ; A -> @ "a" ; }
     system twolevel W { controller = G2 ; controllee = G1 ; }

   `eps` spells ε, `^` marks the distinguished symbol, `!` marks substitution
   leaves, `*` marks feet, `..` marks the inherited stack.  Errors carry
   line/column. */
WorkbenchFile parse_file(const std::string& text, const std::string& filename = "<input>");

/* Renders one system or a whole file back into the format; parse ∘ render
   is the identity on parsed structures. */
std::string render_system(const std::string& name, const AnySystem& s);
std::string render_file(const WorkbenchFile& f);

}  // namespace talforge
