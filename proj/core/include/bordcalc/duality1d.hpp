#pragma once

#include <memory>
#include <optional>

#include "bordcalc/diagram.hpp"
#include "bordcalc/rational.hpp"

// The one-dimensional layer: dual pairs in monoidal categories, morphisms of
// the free symmetric monoidal category on a dual pair as loop-counting
// endpoint matchings, and evaluation into an exact-rational matrix target.

namespace bordcalc {

enum class Letter1 : std::uint8_t { X, Y };
using Word1D = std::vector<Letter1>;

std::string word1d_to_string(const Word1D& w);

// Terms: e, c, elementary symmetries, identities, closed under compose and
// tensor. Sources and targets are computed, not stored.
struct Term1D {
  enum class Kind : std::uint8_t { Id, E, C, Swap, Compose, Tensor } kind = Kind::Id;
  Word1D word;  // Id: the word; Swap: the two-letter word it transposes
  std::vector<Term1D> parts;

  static Term1D id(Word1D w);
  static Term1D e();  // X (x) Y -> I
  static Term1D c();  // I -> Y (x) X
  static Term1D swap(Letter1 a, Letter1 b);
  static Term1D compose(std::vector<Term1D> fs);  // left to right
  static Term1D tensor(std::vector<Term1D> fs);
};

struct Typing1D {
  Word1D source, target;
};
Expected<Typing1D> type_term(const Term1D& t);

// Normal form: a perfect matching on the endpoints of the boundary words
// plus a count of closed loops. Endpoint ids: source letters first, then
// target letters.
struct Matching1D {
  Word1D source, target;
  std::vector<std::pair<int, int>> pairs;
  int loops = 0;

  friend bool operator==(const Matching1D&, const Matching1D&) = default;
};

Expected<Matching1D> normal_form_1d(const Term1D& t);

Matching1D matching_identity(const Word1D& w);
Expected<Matching1D> matching_compose(const Matching1D& f, const Matching1D& g);
Matching1D matching_tensor(const Matching1D& f, const Matching1D& g);

// Conjugation through e and c: swaps the roles of the two duals and
// reverses the boundary words. Involutive.
Matching1D dual_of(const Matching1D& f);

// A dual pair in the category of exact-rational matrices. The triangle
// equations force e and c to be mutually inverse square matrices.
struct MatrixPair {
  RMatrix e;  // X (x) Y -> I, row index X, column index Y
  RMatrix c;  // I -> Y (x) X, row index Y, column index X

  std::size_t dim_x() const { return e.size(); }
  std::size_t dim_y() const { return e.empty() ? 0 : e[0].size(); }

  static MatrixPair standard(std::size_t n);
  bool triangles_hold() const;
};

// Dual of an endomorphism of X as an endomorphism of Y: c x^T e.
RMatrix dual_of_matrix(const RMatrix& x, const MatrixPair& pair);

// Completes an isomorphism x: X1 -> X2 to the unique morphism of dual
// pairs; fails when x is singular.
Expected<RMatrix> complete_iso(const RMatrix& x, const MatrixPair& p1, const MatrixPair& p2);

// Full evaluation of a term in the matrix target. The value of a term
// A -> B is a matrix indexed by basis tuples of B (rows) and A (columns);
// closed terms give a 1 x 1 scalar.
Expected<RMatrix> evaluate_matrix(const Term1D& t, const MatrixPair& pair);

// Evaluation through the normal form: delta wiring per matched pair, e or c
// per same-side pair, dimension per loop.
Expected<RMatrix> evaluate_matching(const Matching1D& m, const MatrixPair& pair);

}  // namespace bordcalc
