#include "bordcalc/structural.hpp"

#include "doctest.h"

using namespace bordcalc;

namespace {
const TwistDir kStr = TwistDir::Straightforward;
}

TEST_CASE("two disjoint applies normalize to the same form in either order") {
  LinearDiagram src = identity_1cell(word_from_string("++"));
  PlanarDiagram ab{src, {apply_step(Gen::PhiInv, 0, 0), apply_step(Gen::PsiInv, 0, 1)}};
  PlanarDiagram ba{src, {apply_step(Gen::PsiInv, 0, 1), apply_step(Gen::PhiInv, 0, 0)}};
  auto ta = validate_planar(ab);
  auto tb = validate_planar(ba);
  REQUIRE(ta.ok());
  REQUIRE(tb.ok());
  // Same target only up to the two insertions landing in either order; the
  // normal form must agree when the targets agree.
  PlanarDiagram ab2{src, {apply_step(Gen::PhiInv, 0, 0), apply_step(Gen::PsiInv, 2, 1)}};
  auto ta2 = validate_planar(ab2);
  REQUIRE(ta2.ok());
  PlanarDiagram ba2{src, {apply_step(Gen::PsiInv, 0, 1), apply_step(Gen::PhiInv, 0, 0)}};
  auto tb2 = validate_planar(ba2);
  REQUIRE(tb2.ok());
  CHECK(ta2.value() == tb2.value());
  CHECK(structural_normal_form(ab2) == structural_normal_form(ba2));
}

TEST_CASE("normal form is idempotent") {
  PlanarDiagram p{identity_1cell(word_from_string("+")),
                  {apply_step(Gen::AlphaInv, 0, 0), apply_step(Gen::PhiInv, 2, 0),
                   apply_step(Gen::Phi, 2, 0), apply_step(Gen::Alpha, 0, 0)}};
  REQUIRE(validate_planar(p).ok());
  auto n1 = structural_normal_form(p);
  auto n2 = structural_normal_form(n1);
  CHECK(n1 == n2);
  auto t0 = validate_planar(p);
  auto t1 = validate_planar(n1);
  REQUIRE(t1.ok());
  CHECK(t0.value() == t1.value());
  CHECK(n1.source == p.source);
}

TEST_CASE("interchange law: whiskered composites share a normal form") {
  // f = phi_inv birth on the left plus sheet, g = psi_inv birth on the right.
  LinearDiagram src = identity_1cell(word_from_string("++"));
  // (f x id) then (id x g)
  PlanarDiagram fg{src, {apply_step(Gen::PhiInv, 0, 0), apply_step(Gen::PsiInv, 2, 1)}};
  // (id x g) then (f x id)
  PlanarDiagram gf{src, {apply_step(Gen::PsiInv, 0, 1), apply_step(Gen::PhiInv, 0, 0)}};
  auto a = validate_planar(fg);
  auto b = validate_planar(gf);
  REQUIRE(a.ok());
  REQUIRE(b.ok());
  REQUIRE(a.value() == b.value());
  CHECK(structural_normal_form(fg) == structural_normal_form(gf));
}

TEST_CASE("structural path finds swap cancellations") {
  LinearDiagram a{word_from_string("+-"), {swap(0), swap(0), twist(0, kStr)}};
  LinearDiagram b{word_from_string("+-"), {twist(0, kStr)}};
  auto path = structural_path(a, b);
  REQUIRE(path.has_value());
  LinearDiagram cur = a;
  for (const SliceStep& s : *path) REQUIRE(!apply_slice_step(cur, s).has_value());
  CHECK(cur == b);
}

TEST_CASE("shuffles preserve the normal form") {
  PlanarDiagram p{identity_1cell(word_from_string("+-")),
                  {apply_step(Gen::PhiInv, 0, 0), apply_step(Gen::ThetaInv, 2, 1),
                   apply_step(Gen::Theta, 2, 1), apply_step(Gen::Phi, 0, 0)}};
  REQUIRE(validate_planar(p).ok());
  const auto base = structural_normal_form(p);
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    PlanarDiagram q = structural_shuffle(p, seed);
    auto tq = validate_planar(q);
    REQUIRE(tq.ok());
    CHECK(structural_normal_form(q) == base);
  }
}

TEST_CASE("structural key separates genuinely different diagrams") {
  PlanarDiagram a{identity_1cell(word_from_string("+")), {apply_step(Gen::PhiInv, 0, 0)}};
  PlanarDiagram b{identity_1cell(word_from_string("+")), {apply_step(Gen::PsiInv, 0, 0)}};
  CHECK(structural_key(a) != structural_key(b));
}
