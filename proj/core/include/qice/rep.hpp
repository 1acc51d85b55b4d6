#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qice/algebra.hpp"
#include "qice/matrix.hpp"

namespace qice {

// A right module presented as a quiver representation: a space per vertex and
// a dims(target) x dims(source) matrix per arrow, annihilated by every
// relation. Immutable.
class Representation {
 public:
  Representation(AlgebraPtr alg, std::vector<int> dims, std::vector<QMatrix> arrow_mats,
                 bool validate = true);

  static Representation zero(AlgebraPtr alg);
  static Representation direct_sum(std::span<const Representation> parts);
  static Representation direct_sum(const Representation& a, const Representation& b);

  const Algebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  int dim(int v) const { return dims_[v]; }
  const std::vector<int>& dims() const { return dims_; }
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  const QMatrix& arrow_mat(int a) const { return mats_[a]; }

  // Product of arrow matrices along a path from src, in composition order.
  QMatrix apply_path(int src, const std::vector<int>& path) const;

  // Checks shapes and that every relation evaluates to zero.
  void check() const;

  std::string bytes() const;  // canonical key (dims + matrices)

 private:
  AlgebraPtr alg_;
  std::vector<int> dims_;
  std::vector<QMatrix> mats_;
};

class Morphism {
 public:
  Morphism(Representation src, Representation dst, std::vector<QMatrix> mats, bool validate = true);

  static Morphism zero(const Representation& src, const Representation& dst);
  static Morphism identity(const Representation& x);

  const Representation& source() const { return src_; }
  const Representation& target() const { return dst_; }
  const QMatrix& mat(int v) const { return mats_[v]; }
  const std::vector<QMatrix>& mats() const { return mats_; }

  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const { return is_injective() && is_surjective(); }

  Morphism operator+(const Morphism& o) const;
  Morphism scaled(const Rat& c) const;

  // Commuting squares: mat(j) * src.arrow(a) == dst.arrow(a) * mat(i).
  void check() const;

 private:
  Representation src_, dst_;
  std::vector<QMatrix> mats_;
};

Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism direct_sum(const Morphism& a, const Morphism& b);

// Canonical basis of Hom(X, Y): the kernel of the stacked commuting-square
// system, one coordinate block per vertex.
std::vector<Morphism> hom_basis(const Representation& x, const Representation& y);
int hom_dim(const Representation& x, const Representation& y);  // rank only

struct SubQuotient {
  Representation rep;
  Morphism map;  // inclusion (kernel, image) or projection (cokernel)
};
SubQuotient kernel(const Morphism& f);
SubQuotient image(const Morphism& f);
SubQuotient cokernel(const Morphism& f);

// Submodule spanned per vertex by the given column spaces (must be arrow
// stable); returns the subrepresentation and its inclusion.
SubQuotient subrep_from_columns(const Representation& x, const std::vector<QMatrix>& cols);

struct EndData {
  std::vector<Morphism> end_basis;
  std::vector<Morphism> rad_basis;
  QMatrix rad_coords;  // columns = radical basis in End coordinates
};
// rad End = null space of the trace form (f, g) -> tr(f g); valid over Q.
EndData end_radical(const Representation& x);

bool is_brick(const Representation& x);

bool is_isomorphic(const Representation& x, const Representation& y);

struct DecompPart {
  Representation rep;
  int multiplicity;
};
// Indecomposable summands with multiplicity, canonically ordered. Splits via
// idempotents lifted from End/rad; throws NonSplitEndAlgebra outside the
// Schurian scope.
std::vector<DecompPart> decompose(const Representation& m);

// Radical subrepresentation (sum of arrow images) and the top quotient.
SubQuotient radical_subrep(const Representation& x);
SubQuotient top_quotient(const Representation& x);

// Stacked name for uniserials ("4/2/3"), "0" for zero, else the dimension
// vector "(d1,...,dn)".
std::string module_name(const Representation& x);

}  // namespace qice
