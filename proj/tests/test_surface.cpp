#include "bordcalc/surface.hpp"

#include "bordcalc/rewrite.hpp"
#include "bordcalc/structural.hpp"
#include <set>

#include "doctest.h"

using namespace bordcalc;

namespace {

const TwistDir kStr = TwistDir::Straightforward;

// Independent oracle: Euler characteristic by Morse counting over the
// movie. Building the surface from the source 1-manifold crossed with time,
// each Morse piece attaches one handle: caps and cups add one, saddles
// subtract one. Interval components contribute one each, circles zero.
int euler_by_morse_count(const PlanarDiagram& p) {
  auto strands = strand_matching(p.source);
  REQUIRE(strands.ok());
  int chi = static_cast<int>(strands.value().pairs.size());
  for (const SliceStep& s : p.steps)
    if (s.kind == SliceStep::Kind::Apply) chi += generator(s.gen).euler_delta;
  return chi;
}

int total_euler(const CellComplex& c) {
  int chi = 0;
  for (int e : c.component_euler) chi += e;
  return chi;
}

}  // namespace

TEST_CASE("a single cusp is a disk") {
  PlanarDiagram p{LinearDiagram{word_from_string("+"), {elbow_left(1), elbow_right(0)}},
                  {apply_step(Gen::Alpha, 0, 0)}};
  auto c = reconstruct(p);
  REQUIRE(c.ok());
  CHECK(c.value().components == 1);
  REQUIRE(c.value().component_euler.size() == 1);
  CHECK(c.value().component_euler[0] == 1);
  CHECK(c.value().component_boundary_circles[0] == 1);
  CHECK(!c.value().component_closed[0]);
  CHECK(total_euler(c.value()) == euler_by_morse_count(p));
}

TEST_CASE("identity 2-cell on q+ is a square") {
  PlanarDiagram p = identity_2cell(LinearDiagram{word_from_string("+"), {twist(0, kStr)}});
  auto c = reconstruct(p);
  REQUIRE(c.ok());
  CHECK(c.value().components == 1);
  CHECK(c.value().component_euler[0] == 1);
  CHECK(c.value().component_boundary_circles[0] == 1);
  CHECK(c.value().component_total_twist[0] == 1);
}

TEST_CASE("identity on the unit gives the empty report") {
  auto r = surface_invariants(identity_2cell(identity_1cell({})));
  REQUIRE(r.ok());
  CHECK(r.value().empty());
}

TEST_CASE("the torus movie is one closed component of euler zero") {
  PlanarDiagram p{identity_1cell({}),
                  {apply_step(Gen::MuE, 0, 0), apply_step(Gen::MuC, 1, 0),
                   apply_step(Gen::EpsE, 3, 0), apply_step(Gen::EpsC, 0, 0)}};
  REQUIRE(validate_planar(p).ok());
  auto c = reconstruct(p);
  REQUIRE(c.ok());
  CHECK(c.value().components == 1);
  CHECK(c.value().component_euler[0] == 0);
  CHECK(c.value().component_closed[0]);
  CHECK(c.value().component_boundary_circles[0] == 0);
  CHECK(total_euler(c.value()) == euler_by_morse_count(p));
}

TEST_CASE("a lone Morse birth is a disk with one boundary circle") {
  PlanarDiagram p{identity_1cell({}), {apply_step(Gen::MuE, 0, 0)}};
  auto c = reconstruct(p);
  REQUIRE(c.ok());
  CHECK(c.value().components == 1);
  CHECK(c.value().component_euler[0] == 1);
  CHECK(c.value().component_boundary_circles[0] == 1);
}

TEST_CASE("crossing steps leave chi alone and mark the fold arc") {
  // mu_e births the circle, then the inverted twist crosses the left elbow.
  PlanarDiagram p{identity_1cell({}),
                  {apply_step(Gen::MuE, 0, 0), apply_step(Gen::ChiMinus, 0, 0)}};
  REQUIRE(validate_planar(p).ok());
  auto r = surface_invariants(p);
  REQUIRE(r.ok());
  REQUIRE(r.value().components.size() == 1);
  CHECK(r.value().components[0].euler == 1);
  int pos = 0, neg = 0;
  for (int cd : r.value().crossing_degrees) {
    if (cd > 0) pos += cd;
    if (cd < 0) neg -= cd;
  }
  CHECK(pos + neg == 1);  // exactly one crossing on one arc
  // ChiMinus has a straightforward downward arc: positive crossing.
  CHECK(pos == 1);
}

TEST_CASE("crossing pairs cancel on the arc") {
  PlanarDiagram p{identity_1cell({}),
                  {apply_step(Gen::MuE, 0, 0), apply_step(Gen::ChiMinus, 0, 0),
                   apply_step(Gen::ChiMinusInv, 0, 0)}};
  REQUIRE(validate_planar(p).ok());
  auto r = surface_invariants(p);
  REQUIRE(r.ok());
  for (int cd : r.value().crossing_degrees) CHECK(cd == 0);
}

TEST_CASE("tensor of two disks has two components") {
  PlanarDiagram one{identity_1cell(word_from_string("+")),
                    {apply_step(Gen::AlphaInv, 0, 0), apply_step(Gen::Alpha, 0, 0)}};
  PlanarDiagram two = tensor_planar(one, one);
  REQUIRE(validate_planar(two).ok());
  auto c = reconstruct(two);
  REQUIRE(c.ok());
  CHECK(c.value().components == 2);
  for (int e : c.value().component_euler) CHECK(e == 1);
}

TEST_CASE("euler matches the Morse-count oracle across an enumeration") {
  auto all = enumerate_diagrams(word_from_string("+"), 3, {400, 10});
  int checked = 0;
  for (const PlanarDiagram& d : all) {
    auto c = reconstruct(d);
    REQUIRE(c.ok());
    CHECK(total_euler(c.value()) == euler_by_morse_count(d));
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("structural steps do not change the surface") {
  PlanarDiagram plain{identity_1cell(word_from_string("++")),
                      {apply_step(Gen::PhiInv, 0, 0), apply_step(Gen::PsiInv, 2, 1)}};
  REQUIRE(validate_planar(plain).ok());
  PlanarDiagram shuffled = structural_shuffle(plain, 7);
  REQUIRE(validate_planar(shuffled).ok());
  auto a = reconstruct(plain);
  auto b = reconstruct(shuffled);
  REQUIRE(a.ok());
  REQUIRE(b.ok());
  CHECK(a.value().components == b.value().components);
  CHECK(total_euler(a.value()) == total_euler(b.value()));
  std::multiset<int> ba(a.value().component_boundary_circles.begin(),
                        a.value().component_boundary_circles.end());
  std::multiset<int> bb(b.value().component_boundary_circles.begin(),
                        b.value().component_boundary_circles.end());
  CHECK(ba == bb);
}
