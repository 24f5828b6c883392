#pragma once

#include <optional>

#include "bordcalc/planar.hpp"

// Structural normalization of sliced diagrams.
//
// Interchange and SymSlide steps are the free part of diagram equality; two
// step lists that differ only by them (and by commuting Apply steps across
// disjoint windows) present the same 2-cell. The normal form migrates Apply
// steps to the earliest window they can reach, sorts independent neighbours
// by (anchor, offset, generator) and re-synthesizes every structural segment
// canonically from its endpoint 1-cells.

namespace bordcalc {

// Whether two 1-cells differ only by structural moves; on success, a
// deterministic witness path (shortest; first found in BFS order).
std::optional<std::vector<SliceStep>> structural_path(const LinearDiagram& from,
                                                      const LinearDiagram& to,
                                                      std::size_t node_budget = 50000);

bool structurally_equal_cells(const LinearDiagram& a, const LinearDiagram& b,
                              std::size_t node_budget = 50000);

PlanarDiagram structural_normal_form(const PlanarDiagram& p);

// Hash of the normal form; key for visited sets.
std::uint64_t structural_key(const PlanarDiagram& p);

// Test helper: random structural reshuffling of a diagram (inserts inverse
// structural pairs and commutes independent Apply steps), preserving source
// and target. `seed` drives determinism.
PlanarDiagram structural_shuffle(const PlanarDiagram& p, std::uint64_t seed, int moves = 16);

}  // namespace bordcalc
