#include "bordcalc/rewrite.hpp"

#include "bordcalc/search.hpp"
#include "bordcalc/structural.hpp"
#include "doctest.h"

using namespace bordcalc;

namespace {
const TwistDir kStr = TwistDir::Straightforward;
}

TEST_CASE("apply_rule: cusp inverse collapses a round trip") {
  PlanarDiagram p{identity_1cell(word_from_string("+")),
                  {apply_step(Gen::AlphaInv, 0, 0), apply_step(Gen::Alpha, 0, 0)}};
  const RewriteRule* rule = find_rule("cusp_inv_alpha_1");
  REQUIRE(rule != nullptr);
  auto matches = rule_matches(p, *rule);
  REQUIRE(!matches.empty());
  auto out = apply_rule(p, *rule, matches.front());
  REQUIRE(out.ok());
  CHECK(out.value().steps.empty());
}

TEST_CASE("apply_rule: morse triangle rewrites the e zigzag") {
  PlanarDiagram p{LinearDiagram{word_from_string("+-"), {elbow_right(0)}},
                  {apply_step(Gen::MuE, 1, 0), apply_step(Gen::EpsE, 0, 0)}};
  REQUIRE(validate_planar(p).ok());
  const RewriteRule* rule = find_rule("mt_e_on_e");
  REQUIRE(rule != nullptr);
  auto matches = rule_matches(p, *rule);
  REQUIRE(!matches.empty());
  auto out = apply_rule(p, *rule, matches.front());
  REQUIRE(out.ok());
  CHECK(out.value().steps.empty());
}

TEST_CASE("apply_rule reports NoMatch when directions differ") {
  PlanarDiagram p{identity_1cell(word_from_string("+")),
                  {apply_step(Gen::PhiInv, 0, 0), apply_step(Gen::Phi, 0, 0)}};
  const RewriteRule* rule = find_rule("th_inv_psi_1");  // expects psi pair
  REQUIRE(rule != nullptr);
  RuleLocation loc{RuleDirection::Forward, 0, 0, 0};
  auto out = apply_rule(p, *rule, loc);
  REQUIRE(!out.ok());
  CHECK(out.error().code == ErrorCode::NoMatch);
}

TEST_CASE("equal_bounded: syntactic equality at depth zero") {
  PlanarDiagram p{identity_1cell(word_from_string("+")), {apply_step(Gen::AlphaInv, 0, 0)}};
  auto res = equal_bounded(p, p);
  CHECK(res.equal());
  CHECK(!res.trace.has_value());
}

TEST_CASE("equal_bounded: structural shuffles are equal with empty trace") {
  PlanarDiagram p{identity_1cell(word_from_string("++")),
                  {apply_step(Gen::PhiInv, 0, 0), apply_step(Gen::PsiInv, 2, 1)}};
  PlanarDiagram q{identity_1cell(word_from_string("++")),
                  {apply_step(Gen::PsiInv, 0, 1), apply_step(Gen::PhiInv, 0, 0)}};
  REQUIRE(validate_planar(p).ok());
  REQUIRE(validate_planar(q).ok());
  auto res = equal_bounded(p, q);
  CHECK(res.equal());
}

TEST_CASE("equal_bounded: the two Swallowtail sides meet at depth one") {
  const RewriteRule* st = find_rule("swallowtail_C");
  REQUIRE(st != nullptr);
  PlanarDiagram lhs{st->source, st->lhs};
  PlanarDiagram rhs{st->source, st->rhs};
  auto res = equal_bounded(lhs, rhs, {2000, 3});
  REQUIRE(res.equal());
  REQUIRE(res.trace.has_value());
  CHECK(res.trace->moves.size() == 1);
  auto replay = replay_trace(*res.trace);
  if (!replay.ok()) MESSAGE(replay.error().message);
  REQUIRE(replay.ok());
}

TEST_CASE("equal_bounded: not parallel is flagged") {
  PlanarDiagram p{identity_1cell(word_from_string("+")), {}};
  PlanarDiagram q{identity_1cell(word_from_string("-")), {}};
  auto res = equal_bounded(p, q);
  CHECK(res.verdict == EqualityResult::Verdict::NotParallel);
}

TEST_CASE("equal_bounded is symmetric on a solvable pair") {
  const RewriteRule* st = find_rule("swallowtail_E");
  REQUIRE(st != nullptr);
  PlanarDiagram lhs{st->source, st->lhs};
  PlanarDiagram rhs{st->source, st->rhs};
  auto a = equal_bounded(lhs, rhs, {4000, 4});
  auto b = equal_bounded(rhs, lhs, {4000, 4});
  CHECK(a.equal());
  CHECK(b.equal());
  REQUIRE(a.trace.has_value());
  REQUIRE(b.trace.has_value());
  CHECK(replay_trace(*a.trace).ok());
  CHECK(replay_trace(*b.trace).ok());
}

TEST_CASE("equal_bounded distinguishes inequivalent twists within budget") {
  PlanarDiagram p{identity_1cell(word_from_string("+")), {apply_step(Gen::PhiInv, 0, 0)}};
  PlanarDiagram q{identity_1cell(word_from_string("+")), {apply_step(Gen::PsiInv, 0, 0)}};
  auto tp = validate_planar(p);
  auto tq = validate_planar(q);
  REQUIRE(tp.ok());
  REQUIRE(tq.ok());
  // Different targets: not parallel.
  CHECK(equal_bounded(p, q).verdict == EqualityResult::Verdict::NotParallel);
}

TEST_CASE("enumerate: unit word, zero steps") {
  auto all = enumerate_diagrams({}, 0);
  REQUIRE(all.size() == 1);
  CHECK(all[0].steps.empty());
  CHECK(all[0].source == identity_1cell({}));
}

TEST_CASE("enumerate: (+) at two steps includes cusp and twist births") {
  auto all = enumerate_diagrams(word_from_string("+"), 2);
  bool cusp_roundtrip = false;
  bool twist_birth = false;
  for (const PlanarDiagram& d : all) {
    if (d.steps.size() == 2 && d.steps[0].gen == Gen::AlphaInv && d.steps[1].gen == Gen::Alpha)
      cusp_roundtrip = true;
    if (d.steps.size() == 1 && d.steps[0].kind == SliceStep::Kind::Apply &&
        d.steps[0].gen == Gen::PhiInv)
      twist_birth = true;
  }
  CHECK(cusp_roundtrip);
  CHECK(twist_birth);
  for (const PlanarDiagram& d : all) CHECK(validate_planar(d).ok());
}

TEST_CASE("find_step_path recovers a two-step route") {
  LinearDiagram from = identity_1cell(word_from_string("+"));
  LinearDiagram to{word_from_string("+"),
                   {twist(0, kStr), elbow_left(1), elbow_right(0), twist(0, TwistDir::Inverted)}};
  StepPathOptions opt;
  opt.max_depth = 4;
  auto path = find_step_path(from, to, opt);
  REQUIRE(path.has_value());
  LinearDiagram cur = from;
  for (const SliceStep& s : *path) REQUIRE(!apply_slice_step(cur, s).has_value());
  CHECK(cur == to);
}
