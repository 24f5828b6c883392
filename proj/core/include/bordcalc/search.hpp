#pragma once

#include <optional>

#include "bordcalc/planar.hpp"

// Bounded path search in the space of 1-cells under slice steps: find some
// valid step sequence turning one linear diagram into another. Used to
// witness isomorphisms of 1-cells (Serre composites, retraction images) and
// to pin composite rule sides.

namespace bordcalc {

struct StepPathOptions {
  std::size_t node_budget = 200000;
  int max_depth = 12;
  bool cfd_only = false;        // restrict Apply steps to the cfd fragment
  bool invertible_only = false; // forbid Morse applies
  // Events above this bound prune a branch (0: auto from endpoints).
  std::size_t max_events = 0;
  std::vector<Gen> banned;      // generators the path must avoid
  // Exact steps the path must not begin with (e.g. to rule out a known
  // route when pinning an alternative composite).
  std::vector<SliceStep> banned_first;
};

// Steps that, applied to some predecessor cell, produce `cell`; paired with
// that predecessor. Used for meet-in-the-middle searches.
std::vector<std::pair<SliceStep, LinearDiagram>> reverse_steps(const LinearDiagram& cell,
                                                               bool cfd_only = false);

std::optional<std::vector<SliceStep>> find_step_path(const LinearDiagram& from,
                                                     const LinearDiagram& to,
                                                     const StepPathOptions& opt = {});

}  // namespace bordcalc
