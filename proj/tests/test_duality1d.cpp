#include "bordcalc/duality1d.hpp"

#include <random>

#include "doctest.h"

using namespace bordcalc;

namespace {

Term1D triangle_x() {
  // (e (x) X) after (X (x) c): the X-side triangle composite.
  return Term1D::compose({Term1D::tensor({Term1D::id({Letter1::X}), Term1D::c()}),
                          Term1D::tensor({Term1D::e(), Term1D::id({Letter1::X})})});
}

Term1D triangle_y() {
  return Term1D::compose({Term1D::tensor({Term1D::c(), Term1D::id({Letter1::Y})}),
                          Term1D::tensor({Term1D::id({Letter1::Y}), Term1D::e()})});
}

Term1D circle() {
  // e after b after c: the closed loop.
  return Term1D::compose(
      {Term1D::c(), Term1D::swap(Letter1::Y, Letter1::X), Term1D::e()});
}

// Random matching on random boundary words generated by composing random
// valid terms would be slow; instead build random matchings directly from
// random wirings of identity/e/c blocks.
Matching1D random_matching(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  Matching1D m;  // identity on I
  for (int block = 0; block < 4; ++block) {
    Matching1D piece;
    switch (pick(rng)) {
      case 0:
        piece = matching_identity({Letter1::X});
        break;
      case 1: {
        Matching1D e;
        e.source = {Letter1::X, Letter1::Y};
        e.pairs = {{0, 1}};
        piece = e;
        break;
      }
      default: {
        Matching1D c;
        c.target = {Letter1::Y, Letter1::X};
        c.pairs = {{0, 1}};
        piece = c;
        break;
      }
    }
    m = matching_tensor(m, piece);
  }
  return m;
}

}  // namespace

TEST_CASE("triangle composites normalize to identity matchings") {
  auto tx = normal_form_1d(triangle_x());
  REQUIRE(tx.ok());
  CHECK(tx.value() == matching_identity({Letter1::X}));
  auto ty = normal_form_1d(triangle_y());
  REQUIRE(ty.ok());
  CHECK(ty.value() == matching_identity({Letter1::Y}));
}

TEST_CASE("the circle is one loop on empty boundary") {
  auto nf = normal_form_1d(circle());
  REQUIRE(nf.ok());
  CHECK(nf.value().loops == 1);
  CHECK(nf.value().pairs.empty());
  CHECK(nf.value().source.empty());
  CHECK(nf.value().target.empty());
}

TEST_CASE("endpoint tracing on a wider wiring") {
  // (e (x) e) after (X (x) swap (x) Y) pairs the outer endpoints.
  Term1D t = Term1D::compose(
      {Term1D::tensor({Term1D::id({Letter1::X}), Term1D::swap(Letter1::X, Letter1::Y),
                       Term1D::id({Letter1::Y})}),
       Term1D::tensor({Term1D::e(), Term1D::e()})});
  auto typ = type_term(t);
  REQUIRE(typ.ok());
  CHECK(typ.value().source == Word1D{Letter1::X, Letter1::X, Letter1::Y, Letter1::Y});
  auto nf = normal_form_1d(t);
  REQUIRE(nf.ok());
  CHECK(nf.value().loops == 0);
  // Wires: 0 with 2 (via the first e after the swap) and 1 with 3.
  const std::vector<std::pair<int, int>> want{{0, 2}, {1, 3}};
  CHECK(nf.value().pairs == want);
}

TEST_CASE("normal form is monoidal on compose and tensor") {
  Term1D a = triangle_x();
  Term1D b = Term1D::id({Letter1::Y});
  auto nf_tensor = normal_form_1d(Term1D::tensor({a, b}));
  REQUIRE(nf_tensor.ok());
  auto nf_a = normal_form_1d(a);
  auto nf_b = normal_form_1d(b);
  REQUIRE(nf_a.ok());
  REQUIRE(nf_b.ok());
  CHECK(nf_tensor.value() == matching_tensor(nf_a.value(), nf_b.value()));

  Term1D comp = Term1D::compose({a, Term1D::id({Letter1::X})});
  auto nf_comp = normal_form_1d(comp);
  REQUIRE(nf_comp.ok());
  auto spliced = matching_compose(nf_a.value(), matching_identity({Letter1::X}));
  REQUIRE(spliced.ok());
  CHECK(nf_comp.value() == spliced.value());
}

TEST_CASE("dual_of is involutive on random matchings") {
  std::mt19937 rng(12345);
  for (int i = 0; i < 1000; ++i) {
    Matching1D m = random_matching(rng);
    CHECK(dual_of(dual_of(m)) == m);
  }
}

TEST_CASE("dual_of identity is the identity") {
  Matching1D id = matching_identity({Letter1::X, Letter1::Y});
  Matching1D d = dual_of(id);
  CHECK(d == matching_identity({Letter1::X, Letter1::Y}));
}

TEST_CASE("matrix pair triangles") {
  CHECK(MatrixPair::standard(3).triangles_hold());
  MatrixPair bad;
  bad.e = rmatrix_identity(2);
  bad.c = rmatrix_identity(2);
  bad.c[0][0] = Rational(2);
  CHECK(!bad.triangles_hold());
  // Non-standard but exact pair: c = e^-1.
  MatrixPair skew;
  skew.e = {{Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
  skew.c = rmatrix_inverse(skew.e);
  CHECK(skew.triangles_hold());
}

TEST_CASE("dual of a matrix under the standard pairing is the transpose") {
  MatrixPair p = MatrixPair::standard(2);
  RMatrix x{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
  RMatrix y = dual_of_matrix(x, p);
  CHECK(rmatrix_equal(y, rmatrix_transpose(x)));
  // And dualizing twice recovers the matrix.
  CHECK(rmatrix_equal(dual_of_matrix(y, p), x));
}

TEST_CASE("complete_iso on the identity and on permutations") {
  MatrixPair p = MatrixPair::standard(3);
  auto y = complete_iso(rmatrix_identity(3), p, p);
  REQUIRE(y.ok());
  CHECK(rmatrix_equal(y.value(), rmatrix_identity(3)));

  RMatrix perm{{Rational(0), Rational(1), Rational(0)},
               {Rational(0), Rational(0), Rational(1)},
               {Rational(1), Rational(0), Rational(0)}};
  auto yp = complete_iso(perm, p, p);
  REQUIRE(yp.ok());
  // Inverse-transpose of a permutation matrix is itself.
  CHECK(rmatrix_equal(yp.value(), perm));
  // The completed pair commutes with e: x^T e2 y = e1.
  CHECK(rmatrix_equal(rmatrix_mul(rmatrix_transpose(perm), rmatrix_mul(p.e, yp.value())), p.e));
}

TEST_CASE("complete_iso rejects singular matrices") {
  MatrixPair p = MatrixPair::standard(2);
  RMatrix sing{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  auto y = complete_iso(sing, p, p);
  REQUIRE(!y.ok());
  CHECK(y.error().code == ErrorCode::NotInvertible);
}

TEST_CASE("evaluate: circle equals the dimension for dims 1..5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto v = evaluate_matrix(circle(), MatrixPair::standard(n));
    REQUIRE(v.ok());
    REQUIRE(v.value().size() == 1);
    CHECK(v.value()[0][0] == Rational(static_cast<long long>(n)));
  }
}

TEST_CASE("evaluate: triangle composites are exact identities") {
  MatrixPair skew;
  skew.e = {{Rational(1), Rational(1, 2)}, {Rational(0), Rational(1)}};
  skew.c = rmatrix_inverse(skew.e);
  REQUIRE(skew.triangles_hold());
  auto vx = evaluate_matrix(triangle_x(), skew);
  REQUIRE(vx.ok());
  CHECK(rmatrix_equal(vx.value(), rmatrix_identity(2)));
  auto vy = evaluate_matrix(triangle_y(), skew);
  REQUIRE(vy.ok());
  CHECK(rmatrix_equal(vy.value(), rmatrix_identity(2)));
}

TEST_CASE("evaluate: empty term on the unit is one") {
  auto v = evaluate_matrix(Term1D::id({}), MatrixPair::standard(3));
  REQUIRE(v.ok());
  REQUIRE(v.value().size() == 1);
  CHECK(v.value()[0][0] == Rational(1));
}

TEST_CASE("evaluation factors through the normal form") {
  MatrixPair skew;
  skew.e = {{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
  skew.c = rmatrix_inverse(skew.e);
  REQUIRE(skew.triangles_hold());
  Term1D t = Term1D::compose(
      {Term1D::c(), Term1D::swap(Letter1::Y, Letter1::X),
       Term1D::tensor({Term1D::id({Letter1::X}), Term1D::id({Letter1::Y})}), Term1D::e()});
  auto direct = evaluate_matrix(t, skew);
  REQUIRE(direct.ok());
  auto nf = normal_form_1d(t);
  REQUIRE(nf.ok());
  auto via_nf = evaluate_matching(nf.value(), skew);
  REQUIRE(via_nf.ok());
  CHECK(rmatrix_equal(direct.value(), via_nf.value()));
}

TEST_CASE("ill-typed composites are reported") {
  Term1D bad = Term1D::compose({Term1D::e(), Term1D::e()});
  auto typ = type_term(bad);
  REQUIRE(!typ.ok());
  CHECK(typ.error().code == ErrorCode::IllTyped);
  auto nf = normal_form_1d(bad);
  REQUIRE(!nf.ok());
}
