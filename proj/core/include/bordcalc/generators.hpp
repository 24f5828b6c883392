#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "bordcalc/diagram.hpp"

// The twenty-four generating 2-cells of the framed bordism presentation.
//
// Each generator is a local rewrite between two short event sequences with
// the same net effect on sheet words. Patterns are anchored: event offsets
// are relative to a sheet offset chosen at application time, and `context`
// lists the signs the running word must show at that offset.
//
//   mu_e / eps_e    unit and counit of e^L -| e, where e^L = b(R x q^-1)c
//   mu_c / eps_c    unit and counit of c^L -| c, where c^L = e(q x R)b
//   alpha / beta    cusp isomorphisms of the dual pair (pt+, pt-)
//   psi / phi       q q^-1 => id and q^-1 q => id on the positive point
//   theta / vartheta  the same on the negative point
//   chi(+/-)        a twist crossing a left elbow (coevaluation side)
//   zeta(+/-)       a twist crossing a right elbow (evaluation side)
//
// Crossing a fold flips the twist direction and moves it between the two
// folded sheets; chi+/zeta+ carry the straightforward twist in the source,
// chi-/zeta- the inverted one.

namespace bordcalc {

enum class Gen : std::uint8_t {
  MuE, EpsE, MuC, EpsC,
  Alpha, AlphaInv, Beta, BetaInv,
  Psi, PsiInv, Phi, PhiInv,
  Theta, ThetaInv, Vartheta, VarthetaInv,
  ChiPlus, ChiPlusInv, ChiMinus, ChiMinusInv,
  ZetaPlus, ZetaPlusInv, ZetaMinus, ZetaMinusInv,
};

inline constexpr std::size_t kGeneratorCount = 24;

struct Generator2Cell {
  Gen name{};
  std::vector<LinearEvent> source;  // offsets relative to anchor 0
  std::vector<LinearEvent> target;
  SheetWord context;      // required signs at anchor..anchor+len-1
  bool invertible = false;
  Gen inverse{};          // valid when invertible

  // Fold-arc crossing bookkeeping: +1/-1 if this generator is a crossing
  // whose downward (target-side) twist is straightforward/inverted.
  int crossing_sign = 0;
  // Movie Morse index contribution to Euler characteristic: +1 birth/death
  // of a circle, -1 saddle, 0 otherwise.
  int euler_delta = 0;
};

const std::array<Generator2Cell, kGeneratorCount>& generator_catalog();

const Generator2Cell& generator(Gen g);
std::string_view gen_name(Gen g);
std::optional<Gen> gen_by_name(std::string_view name);

bool is_morse(Gen g);
bool is_cusp(Gen g);
bool is_crossing(Gen g);
bool is_twist_homotopy(Gen g);

// Generators of the coherent-fully-dual-pair sub-presentation: everything
// that stays away from negative-point Serre twists.
bool in_cfd_fragment(Gen g);

}  // namespace bordcalc
