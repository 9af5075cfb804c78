#ifndef DYCOH_SQUARE_HPP
#define DYCOH_SQUARE_HPP

#include <memory>
#include <string>

#include "dycoh/dy.hpp"
#include "dycoh/validate.hpp"

// Functoriality of the DY complex: a commutative square of semigroupal
// functors whose bottom edge is fully faithful on endomorphisms induces
// the chain map η ↦ T^{-1}(η_{S X_1,...,S X_n}) against the direction
// of the square.

namespace dycoh {

struct SquareMorphism {
  std::shared_ptr<const FunctorPresentation> top;     // S: C1 -> C2
  std::shared_ptr<const FunctorPresentation> bottom;  // T: D1 -> D2
  std::shared_ptr<const FunctorPresentation> left;    // F: C1 -> D1
  std::shared_ptr<const FunctorPresentation> right;   // G: C2 -> D2
  std::string name;
};

inline SquareMorphism identity_square(std::shared_ptr<const FunctorPresentation> F) {
  SquareMorphism sq;
  sq.top = std::make_shared<FunctorPresentation>(identity_functor(F->source));
  sq.bottom = std::make_shared<FunctorPresentation>(identity_functor(F->target));
  sq.left = F;
  sq.right = F;
  sq.name = "id_square(" + F->name + ")";
  return sq;
}

// The square with S = T = inc and identity verticals; its chain map is
// the forgetful restriction to the subcategory.
inline SquareMorphism inclusion_square(std::shared_ptr<const FunctorPresentation> inc) {
  SquareMorphism sq;
  sq.top = inc;
  sq.bottom = inc;
  sq.left = std::make_shared<FunctorPresentation>(identity_functor(inc->source));
  sq.right = std::make_shared<FunctorPresentation>(identity_functor(inc->target));
  sq.name = "restrict(" + inc->name + ")";
  return sq;
}

inline ValidationReport validate_square(const SquareMorphism& sq) {
  ValidationReport rep;
  rep.subject = "square " + sq.name;
  auto violate = [&](const std::string& axiom, const std::string& witness) {
    rep.violations.push_back({axiom, witness});
  };
  if (sq.top->source != sq.left->source || sq.top->target != sq.right->source ||
      sq.bottom->source != sq.left->target || sq.bottom->target != sq.right->target) {
    violate("square-endpoints", "functor endpoints do not share presentations");
    return rep;
  }
  FunctorPresentation gs = compose_functors(*sq.right, *sq.top);
  FunctorPresentation tf = compose_functors(*sq.bottom, *sq.left);
  if (!same_functor_data(gs, tf))
    violate("square-commutativity", "G∘S != T∘F as presentations");
  const CatPresentation& D1 = *sq.bottom->source;
  for (Obj x = 0; x < D1.n_objects(); ++x) {
    const Matrix& m = sq.bottom->hom_maps[x][x];
    if (m.rows() != m.cols() || rank(m) != m.rows())
      violate("bottom-fully-faithful-on-endomorphisms",
              "End hom map of T not invertible at " + D1.objects[x]);
  }
  return rep;
}

namespace dy {

inline void require_valid_square(const SquareMorphism& sq) {
  ValidationReport rep = validate_square(sq);
  if (!rep.ok())
    throw_error(Error::Kind::Precondition,
                "square " + sq.name + " invalid: " + rep.violations.front().axiom +
                    " (" + rep.violations.front().witness + ")");
}

// φ_□: C^n_DY(G) -> C^n_DY(F).
inline DYCochain restrict_along_square(const SquareMorphism& sq, const DYCochain& eta) {
  require_valid_square(sq);
  bool matches = eta.functor == sq.right ||
                 (eta.functor->source == sq.right->source &&
                  eta.functor->target == sq.right->target &&
                  same_functor_data(*eta.functor, *sq.right));
  if (!matches)
    throw_error(Error::Kind::Precondition,
                "cochain does not belong to the square's right edge");
  const FunctorPresentation& S = *sq.top;
  const FunctorPresentation& T = *sq.bottom;
  const FunctorPresentation& F = *sq.left;
  const CatPresentation& C1 = *F.source;
  int n = eta.degree;
  TupleIndex ti(C1.n_objects(), static_cast<std::size_t>(n));
  TupleIndex ti2(S.target->n_objects(), static_cast<std::size_t>(n));
  DYCochain out;
  out.functor = sq.left;
  out.degree = n;
  for (std::size_t r = 0; r < ti.count(); ++r) {
    std::vector<Obj> t = ti.decode(r);
    std::vector<Obj> st(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) st[i] = S.obj(t[i]);
    Obj w = image_object(F, t);  // object of D1
    const Vec& value = eta.table[ti2.encode(st)];
    auto pre = solve(T.hom_maps[w][w], value);
    if (!pre)
      throw_error(Error::Kind::Internal,
                  "T^{-1} failed although T is fully faithful on endomorphisms");
    out.table.push_back(std::move(*pre));
  }
  if (auto bad = naturality_violation(out))
    throw_error(Error::Kind::Internal, "restricted cochain lost naturality at " + *bad);
  return out;
}

}  // namespace dy

// Horizontal composition: squares F -> G and G -> H paste to F -> H.
inline SquareMorphism compose_squares(const SquareMorphism& fg, const SquareMorphism& gh) {
  if (fg.right != gh.left)
    throw_error(Error::Kind::Precondition,
                "squares are not composable (shared edge differs)");
  SquareMorphism sq;
  sq.top = std::make_shared<FunctorPresentation>(compose_functors(*gh.top, *fg.top));
  sq.bottom =
      std::make_shared<FunctorPresentation>(compose_functors(*gh.bottom, *fg.bottom));
  sq.left = fg.left;
  sq.right = gh.right;
  sq.name = gh.name + "·" + fg.name;
  return sq;
}

struct InducedMap {
  Matrix matrix;  // H^n(G) -> H^n(F) in the chosen representative bases
  bool injective = false;
  bool surjective = false;
  CohomologyEntry source_cohomology;  // G side
  CohomologyEntry target_cohomology;  // F side

  InducedMap() : matrix(FieldSpec::rationals(), 0, 0) {}
};

// Matrix of φ_□ on H^n together with the bijectivity verdict.  Both
// complexes are built from scratch here.
inline InducedMap induced_map_on_cohomology(const SquareMorphism& sq, int n,
                                            const DyOptions& opts = {}) {
  dy::require_valid_square(sq);
  DYComplex right(sq.right, opts);
  DYComplex left(sq.left, opts);
  InducedMap result;
  result.source_cohomology = right.cohomology(n);
  result.target_cohomology = left.cohomology(n);
  std::size_t src_dim = result.source_cohomology.dim_H;
  std::size_t dst_dim = result.target_cohomology.dim_H;

  std::vector<Vec> rep_cols;
  for (const DYCochain& rep : result.target_cohomology.representatives)
    rep_cols.push_back(left.to_basis_coords(rep));
  Matrix reps = rep_cols.empty()
                    ? Matrix(left.field(), left.degree(n).basis.size(), 0)
                    : Matrix::from_columns(left.field(), rep_cols);
  Matrix cobound = left.coboundary_columns(n);
  Matrix sysmat = reps.hcat(cobound);

  Matrix phi(left.field(), dst_dim, src_dim);
  for (std::size_t j = 0; j < src_dim; ++j) {
    DYCochain mapped =
        dy::restrict_along_square(sq, result.source_cohomology.representatives[j]);
    auto sol = solve(sysmat, left.to_basis_coords(mapped));
    if (!sol)
      throw_error(Error::Kind::Internal,
                  "image of a cocycle is not a cocycle modulo coboundaries");
    for (std::size_t i = 0; i < dst_dim; ++i) phi.at(i, j) = (*sol)[i];
  }
  std::size_t rk = rank(phi);
  result.matrix = std::move(phi);
  result.injective = rk == src_dim;
  result.surjective = rk == dst_dim;
  return result;
}

}  // namespace dycoh

#endif
