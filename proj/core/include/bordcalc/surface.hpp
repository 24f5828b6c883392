#pragma once

#include <map>

#include "bordcalc/planar.hpp"

// Reconstruction of the combinatorial surface a planar diagram encodes and
// its invariants.
//
// The complex is built slice by slice. Faces are the regions swept by one
// sheet strand over one time interval; they are separated only by fold
// curves (the surface does not see chambering edges or twist arcs, which
// stay bookkeeping). Morse and cusp steps contribute a singular vertex
// where the engaged fold curves meet; every other step is surface-
// transparent. Euler characteristic comes from the explicit V - E + F
// count, not from a Morse-piece formula; the counting formula lives in the
// tests as an independent oracle.

namespace bordcalc {

struct CellComplex {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  std::size_t boundary_edges = 0;
  std::size_t components = 0;

  // Per-component counts, indexed by component id.
  std::vector<int> component_euler;
  std::vector<int> component_boundary_circles;
  std::vector<bool> component_closed;
  std::vector<int> component_total_twist;

  // Crossing degree per maximal fold arc, with the owning component.
  struct FoldArc {
    int component = 0;
    int crossing_degree = 0;
  };
  std::vector<FoldArc> fold_arcs;

  int euler_total() const {
    return static_cast<int>(vertices) - static_cast<int>(edges) + static_cast<int>(faces);
  }
};

struct SurfaceComponent {
  int euler = 0;
  int boundary_components = 0;
  bool closed = false;
  int total_twist = 0;
};

struct SurfaceReport {
  std::vector<SurfaceComponent> components;
  std::vector<int> crossing_degrees;  // per maximal fold arc

  bool empty() const { return components.empty(); }
};

// Requires validate_planar(p) to succeed.
Expected<CellComplex> reconstruct(const PlanarDiagram& p);

Expected<SurfaceReport> surface_invariants(const PlanarDiagram& p);

}  // namespace bordcalc
