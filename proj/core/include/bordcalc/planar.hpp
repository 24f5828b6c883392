#pragma once

#include "bordcalc/diagram.hpp"
#include "bordcalc/generators.hpp"

// Sliced framed planar diagrams: a source linear diagram plus an ordered
// list of slice steps read top to bottom. Each step rewrites a contiguous
// window of the running event list.
//
// Steps:
//   Apply       a generator 2-cell, anchored at an event index and a sheet
//               offset shift
//   Interchange swaps two adjacent events with disjoint support
//   SymSlide    a structural move at a Swap event: sliding a twist across
//               it, cancelling or creating a double swap, or rotating a
//               braid triple. Swap coherence is free in the semistrict
//               model, so these carry no topological content.

namespace bordcalc {

enum class SlideOp : std::uint8_t {
  TwistAcross,   // [swap o, twist] <-> [twist', swap o]  (naturality)
  CancelPair,    // [swap o, swap o] -> []
  CreatePair,    // []              -> [swap o, swap o]
  BraidLeft,     // [swap o, swap o+1, swap o] -> [swap o+1, swap o, swap o+1]
  BraidRight,    // the converse rotation
};

struct SliceStep {
  enum class Kind : std::uint8_t { Apply, Interchange, SymSlide } kind = Kind::Apply;
  Gen gen{};            // Apply
  std::size_t at = 0;   // event index: Apply anchor / first event of the move
  int offset = 0;       // Apply: sheet anchor; CreatePair: swap offset
  SlideOp op{};         // SymSlide

  friend bool operator==(const SliceStep&, const SliceStep&) = default;
};

SliceStep apply_step(Gen g, std::size_t at, int offset);
SliceStep interchange_step(std::size_t at);
SliceStep symslide_step(SlideOp op, std::size_t at, int offset = 0);

std::string step_to_string(const SliceStep& s);

// Applies one step to the event list of `cell` in place; `cell.domain` is
// fixed. Returns the error if the step does not apply.
std::optional<Error> apply_slice_step(LinearDiagram& cell, const SliceStep& step);

// The inverse step: applying it after `step` restores the original diagram.
// Apply steps invert through the generator's inverse; Morse cells have none,
// so inversion fails for them.
std::optional<SliceStep> inverse_step(const LinearDiagram& before, const SliceStep& step);

struct PlanarDiagram {
  LinearDiagram source;
  std::vector<SliceStep> steps;

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;
};

inline PlanarDiagram identity_2cell(LinearDiagram cell) { return {std::move(cell), {}}; }

// Runs all steps; on success the target linear diagram, otherwise the first
// inapplicable step.
Expected<LinearDiagram> validate_planar(const PlanarDiagram& p);

// Running 1-cell after the first `count` steps (diagram must validate).
LinearDiagram cell_at(const PlanarDiagram& p, std::size_t count);

Expected<PlanarDiagram> vcompose_planar(const PlanarDiagram& p, const PlanarDiagram& q);
PlanarDiagram tensor_planar(const PlanarDiagram& p, const PlanarDiagram& q);

// Reverses an invertible diagram (fails on Morse applies).
std::optional<PlanarDiagram> invert_planar(const PlanarDiagram& p);

std::uint64_t hash_planar(const PlanarDiagram& p);
std::string planar_to_string(const PlanarDiagram& p);

// All slice steps applicable to `cell`, in a fixed deterministic order.
// `cfd_only` restricts Apply steps to the coherent-fully-dual-pair fragment
// (and forbids negative-sheet twists from entering).
std::vector<SliceStep> applicable_steps(const LinearDiagram& cell, bool cfd_only = false,
                                        bool structural_too = true);

}  // namespace bordcalc
