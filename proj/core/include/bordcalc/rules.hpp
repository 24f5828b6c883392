#pragma once

#include <string>
#include <string_view>

#include "bordcalc/planar.hpp"

// The relation families of the presentation as bidirectional rewrite rules
// on step lists. A rule is an anchored local instance: `source` is the
// 1-cell it starts from, `lhs` and `rhs` parallel step sequences on it.
// Application shifts the whole instance by an event index and a sheet
// offset.
//
// The presentation's own figures for round twist and oriented-bordism
// relations are empty in the source we work from; those families are
// reconstructed from the framed-surface move catalogue and the retraction
// chapter's prose, and each carries a provenance note.

namespace bordcalc {

enum class RuleFamily : std::uint8_t {
  RoundTwistMorse,
  RoundTwistCusp,
  CrossingDouble,
  CrossingZigzag,
  TwistHomotopyInverse,
  TwistHomotopyTriangle,
  MorseTriangle,
  CuspInverse,
  Swallowtail,
  CuspFlip,
};

const char* rule_family_name(RuleFamily f);

struct RewriteRule {
  RuleFamily family{};
  std::string id;
  LinearDiagram source;       // anchored instance: lhs and rhs start here
  std::vector<SliceStep> lhs;
  std::vector<SliceStep> rhs;
  bool derivable = false;     // Morse round twists follow from the rest
  std::string provenance;
};

// The closed catalog: 8 Morse round twist (derivable), 4 cusp round twist,
// 8 crossing double-cancellations, 4 crossing color shifts, 8 twist-homotopy
// inverse pairs, 4 q -| q^-1 triangles, 4 Morse triangles, 4 cusp inverses,
// 2 Swallowtail, 2 cusp flips.
const std::vector<RewriteRule>& rule_set();

const RewriteRule* find_rule(std::string_view id);

// Rules whose instances live entirely in the coherent-fully-dual-pair
// fragment (the image of R_cfd).
std::vector<const RewriteRule*> cfd_rule_set();

}  // namespace bordcalc
