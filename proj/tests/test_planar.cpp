#include "bordcalc/planar.hpp"

#include "doctest.h"

using namespace bordcalc;

namespace {
const TwistDir kStr = TwistDir::Straightforward;
const TwistDir kInv = TwistDir::Inverted;
}

TEST_CASE("alpha_inv then alpha round-trips the identity 1-cell") {
  PlanarDiagram p{identity_1cell(word_from_string("+")),
                  {apply_step(Gen::AlphaInv, 0, 0), apply_step(Gen::Alpha, 0, 0)}};
  auto target = validate_planar(p);
  REQUIRE(target.ok());
  CHECK(target.value() == identity_1cell(word_from_string("+")));
}

TEST_CASE("eps_c collapses the c then c^L circle to the unit identity") {
  LinearDiagram circle{{}, {elbow_left(0), swap(0), twist(0, kStr), elbow_right(0)}};
  PlanarDiagram p{circle, {apply_step(Gen::EpsC, 0, 0)}};
  auto target = validate_planar(p);
  REQUIRE(target.ok());
  CHECK(target.value() == identity_1cell({}));
}

TEST_CASE("sphere obstruction: mu_e then eps_c is a pattern mismatch") {
  PlanarDiagram p{identity_1cell({}),
                  {apply_step(Gen::MuE, 0, 0), apply_step(Gen::EpsC, 0, 0)}};
  auto target = validate_planar(p);
  REQUIRE(!target.ok());
  CHECK(target.error().code == ErrorCode::PatternMismatch);
  CHECK(target.error().index == 1);
}

TEST_CASE("mu_e births the inverted-twist circle") {
  PlanarDiagram p{identity_1cell({}), {apply_step(Gen::MuE, 0, 0)}};
  auto target = validate_planar(p);
  REQUIRE(target.ok());
  const std::vector<LinearEvent> want{elbow_left(0), twist(1, kInv), swap(0), elbow_right(0)};
  CHECK(target.value().events == want);
}

TEST_CASE("torus movie: mu_e, mu_c, eps_e, eps_c closes up") {
  PlanarDiagram p{identity_1cell({}),
                  {apply_step(Gen::MuE, 0, 0), apply_step(Gen::MuC, 1, 0),
                   apply_step(Gen::EpsE, 3, 0), apply_step(Gen::EpsC, 0, 0)}};
  auto target = validate_planar(p);
  REQUIRE(target.ok());
  CHECK(target.value() == identity_1cell({}));
}

TEST_CASE("vertical composition concatenates and checks the middle cell") {
  PlanarDiagram birth{identity_1cell(word_from_string("+")), {apply_step(Gen::AlphaInv, 0, 0)}};
  auto mid = validate_planar(birth);
  REQUIRE(mid.ok());
  PlanarDiagram death{mid.value(), {apply_step(Gen::Alpha, 0, 0)}};
  auto both = vcompose_planar(birth, death);
  REQUIRE(both.ok());
  CHECK(both.value().steps.size() == 2);

  PlanarDiagram wrong{identity_1cell(word_from_string("-")), {}};
  auto bad = vcompose_planar(birth, wrong);
  REQUIRE(!bad.ok());
  CHECK(bad.error().code == ErrorCode::BoundaryMismatch);
}

TEST_CASE("p composed with identity 2-cell equals p") {
  PlanarDiagram p{identity_1cell(word_from_string("+")), {apply_step(Gen::AlphaInv, 0, 0)}};
  auto tgt = validate_planar(p);
  REQUIRE(tgt.ok());
  auto same = vcompose_planar(p, identity_2cell(tgt.value()));
  REQUIRE(same.ok());
  CHECK(same.value() == p);
}

TEST_CASE("tensor of 2-cells validates on the tensor source") {
  PlanarDiagram roundtrip{identity_1cell(word_from_string("+")),
                          {apply_step(Gen::AlphaInv, 0, 0), apply_step(Gen::Alpha, 0, 0)}};
  PlanarDiagram idm = identity_2cell(identity_1cell(word_from_string("-")));
  auto t = tensor_planar(roundtrip, idm);
  CHECK(t.source.domain == word_from_string("+-"));
  auto target = validate_planar(t);
  REQUIRE(target.ok());
  CHECK(target.value() == identity_1cell(word_from_string("+-")));

  // And on the other side, with offsets shifted.
  auto t2 = tensor_planar(idm, roundtrip);
  auto target2 = validate_planar(t2);
  REQUIRE(target2.ok());
  CHECK(target2.value() == identity_1cell(word_from_string("-+")));
  REQUIRE(t2.steps.size() == 2);
  CHECK(t2.steps[0].offset == 1);
}

TEST_CASE("apply steps preserve boundary words") {
  LinearDiagram cell{word_from_string("+"), {twist(0, kStr)}};
  for (const SliceStep& s : applicable_steps(cell)) {
    LinearDiagram next = cell;
    REQUIRE(!apply_slice_step(next, s).has_value());
    CHECK(next.domain == cell.domain);
    auto a = validate_linear(cell);
    auto b = validate_linear(next);
    REQUIRE(a.ok());
    REQUIRE(b.ok());
    CHECK(a.value() == b.value());
  }
}

TEST_CASE("invert_planar reverses invertible diagrams") {
  PlanarDiagram p{identity_1cell(word_from_string("+")),
                  {apply_step(Gen::AlphaInv, 0, 0), apply_step(Gen::PhiInv, 0, 0)}};
  auto target = validate_planar(p);
  REQUIRE(target.ok());
  auto inv = invert_planar(p);
  REQUIRE(inv.has_value());
  CHECK(inv->source == target.value());
  auto back = validate_planar(*inv);
  REQUIRE(back.ok());
  CHECK(back.value() == p.source);

  PlanarDiagram morse{identity_1cell({}), {apply_step(Gen::MuE, 0, 0)}};
  CHECK(!invert_planar(morse).has_value());
}

TEST_CASE("interchange of disjoint twists commutes them") {
  LinearDiagram cell{word_from_string("++"), {twist(0, kStr), twist(1, kInv)}};
  LinearDiagram next = cell;
  REQUIRE(!apply_slice_step(next, interchange_step(0)).has_value());
  const std::vector<LinearEvent> want{twist(1, kInv), twist(0, kStr)};
  CHECK(next.events == want);
}

TEST_CASE("interchange of the double coevaluation matches the sigma cell") {
  LinearDiagram cell{{}, {elbow_left(0), elbow_left(0)}};
  LinearDiagram next = cell;
  REQUIRE(!apply_slice_step(next, interchange_step(0)).has_value());
  const std::vector<LinearEvent> want{elbow_left(0), elbow_left(2)};
  CHECK(next.events == want);
  // And back.
  REQUIRE(!apply_slice_step(next, interchange_step(0)).has_value());
  CHECK(next.events == cell.events);
}

TEST_CASE("twist slides across a swap with relabelling") {
  LinearDiagram cell{word_from_string("+-"), {swap(0), twist(0, kStr)}};
  LinearDiagram next = cell;
  REQUIRE(!apply_slice_step(next, symslide_step(SlideOp::TwistAcross, 0)).has_value());
  const std::vector<LinearEvent> want{twist(1, kStr), swap(0)};
  CHECK(next.events == want);
}

TEST_CASE("double swap cancels and re-creates") {
  LinearDiagram cell{word_from_string("+-"), {swap(0), swap(0)}};
  LinearDiagram next = cell;
  REQUIRE(!apply_slice_step(next, symslide_step(SlideOp::CancelPair, 0)).has_value());
  CHECK(next.events.empty());
  REQUIRE(!apply_slice_step(next, symslide_step(SlideOp::CreatePair, 0, 0)).has_value());
  CHECK(next.events == cell.events);
}
