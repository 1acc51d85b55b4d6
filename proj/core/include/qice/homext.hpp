#pragma once

#include <vector>

#include "qice/rep.hpp"

namespace qice {

// Minimal projective presentation P1 --d--> P0 --eps--> X -> 0 with
// ker(eps) inside rad(P0) and P1 covering ker(eps) the same way.
struct Presentation {
  Representation p1, p0, x;
  Morphism d;    // P1 -> P0
  Morphism eps;  // P0 -> X
};

Presentation min_presentation(const Representation& x);

// Ext^1(Y, X) = { g in Hom(P1, X) : g vanishes on ker d } / Hom(P0, X) o d,
// with a fixed canonical complement basis. (The vanishing condition is the
// cocycle condition of the resolution; it is vacuous iff ker d = 0.)
class ExtSpace {
 public:
  ExtSpace(const Representation& y, const Representation& x);

  int dim() const { return ext_dim_; }
  const Presentation& presentation() const { return pres_; }
  const Representation& y() const { return pres_.x; }
  const Representation& x() const { return x_; }

  // Representative cocycle P1 -> X for the class with the given coordinates.
  Morphism cocycle(const std::vector<Rat>& coords) const;
  // Canonical coordinates of an arbitrary cocycle; cocycles congruent modulo
  // the image of Hom(P0, X) get equal coordinates. Throws InvalidInput if the
  // morphism is not a cocycle.
  std::vector<Rat> coords_of(const Morphism& cocycle) const;

 private:
  Presentation pres_;  // of Y
  Representation x_;
  std::vector<Morphism> hom_p1_x_;
  QMatrix hom_flat_;     // flattened Hom(P1, X) basis, column per element
  QMatrix cocycles_;     // basis of the cocycle subspace, in Hom coordinates
  QuotientMap ext_quot_; // quotient of the cocycle space by the image
  int ext_dim_ = 0;
};

struct ExtClass {
  std::vector<Rat> coords;
  Morphism cocycle;
};

std::vector<ExtClass> ext1_basis(const Representation& y, const Representation& x);
int ext1_dim(const Representation& y, const Representation& x);

// Realization of the middle term of a class: E = coker(P1 -> X (+) P0) via
// the stacked map (-cocycle, d); exactness is checked by dimension
// bookkeeping per vertex.
struct MiddleTerm {
  Representation e;
  Morphism incl;  // X -> E
  Morphism proj;  // E -> Y
};

MiddleTerm middle_term(const ExtSpace& ext, const std::vector<Rat>& coords);
MiddleTerm middle_term(const ExtClass& cls, const ExtSpace& ext);

// Middle terms over the coefficient grid {-radius..radius}^dim, deduplicated
// up to isomorphism; always contains the split term.
std::vector<Representation> middle_terms_all(const Representation& y, const Representation& x,
                                             int radius = 1);

// Proper quotients of X by images of nonzero grid combinations of morphisms
// from the simples; zero quotients are dropped.
std::vector<Representation> simple_quotient_steps(const Representation& x, int radius = 1);

}  // namespace qice
