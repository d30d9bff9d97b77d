#pragma once

#include <optional>
#include <string>
#include <vector>

#include "talforge/symbols.hpp"

namespace talforge {

/* A derivation tree.  The label is a rendered, formalism-specific payload
   (production name, configuration, tri-labeled node, ...).  PDA-style trees
   annotate edges with the symbol scanned on the step into the child; the
   annotation is stored on the child as edge_from_parent.  Terminal leaves of
   grammar-style trees record their terminal so the yield can be read off the
   frontier (ε leaves record the ε symbol and contribute nothing). */
struct DerivationTree {
    std::string label;
    std::optional<Sym> terminal;
    std::optional<Sym> edge_from_parent;
    std::vector<DerivationTree> children;

    size_t node_count() const {
        size_t n = 1;
        for (const auto& c : children) n += c.node_count();
        return n;
    }
};

/* Yield conventions.  Grammar-style trees concatenate terminal leaves in
   order; automaton-style trees concatenate edge annotations along the
   (unary) configuration chain.  Trees whose yields involve holes and
   plugging are assembled by their own enumerators, which record the final
   yield alongside the tree. */
std::vector<Sym> yield_leaf_style(const DerivationTree& t);
std::vector<Sym> yield_edge_style(const DerivationTree& t);

/* JSON export: {"label": ..., "edge": ..., "children": [...]}, with "edge"
   omitted on the root and ε rendered as "eps".  DOT export labels nodes with
   their payloads and edges with their annotations. */
std::string tree_to_json(const DerivationTree& t);
std::string tree_to_dot(const DerivationTree& t, const std::string& graph_name);

}  // namespace talforge
