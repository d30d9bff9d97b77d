#pragma once

#include <map>
#include <string>

#include "talforge/control.hpp"
#include "talforge/tal.hpp"

namespace talforge {

/* Record of what a construction did: the fresh symbols it introduced (an
   injective map from rendered descriptions to the interned names) and
   whether a one-state pass was applied to the controllee first. */
struct ConversionReport {
    std::string construction;
    std::string source_kind;
    std::string target_kind;
    std::map<std::string, Sym> fresh_symbols;
    bool one_state_applied = false;

    std::string to_json() const;
};

/* The eight tree-preserving constructions.  Forward directions require
   normal form (TAG/PAA additionally spinal + role-consistent); reverse
   directions require normalized components and, for the EPDA and PAA
   targets, one-state controllees (applied automatically and recorded). */
TwoLevel epda_to_pda_pda(const Epda& e, ConversionReport* report = nullptr);
Epda pda_pda_to_epda(const TwoLevel& s, ConversionReport* report = nullptr);

TwoLevel lig_to_pda_cfg(const Lig& g, ConversionReport* report = nullptr);
Lig pda_cfg_to_lig(const TwoLevel& s, ConversionReport* report = nullptr);

TwoLevel tag_to_cfg_cfg(const Tag& g, ConversionReport* report = nullptr);
Tag cfg_cfg_to_tag(const TwoLevel& s, ConversionReport* report = nullptr);

TwoLevel paa_to_cfg_pda(const Paa& m, ConversionReport* report = nullptr);
Paa cfg_pda_to_paa(const TwoLevel& s, ConversionReport* report = nullptr);

/* Count-preserving pairing swaps: the controller axis converts the
   controller CFG↔PDA with the core constructions; the controllee axis
   threads each rule's label and distinguished mark through them. */
TwoLevel swap_controller(const TwoLevel& s, ConversionReport* report = nullptr);
TwoLevel swap_controllee(const TwoLevel& s, ConversionReport* report = nullptr);

/* The label-threading CFG↔PDA constructions, exposed for tests. */
LdPda ld_cfg_to_pda(const LdCfg& g);
LdCfg ld_pda_to_cfg(const LdPda& p);

}  // namespace talforge
