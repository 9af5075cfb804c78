#ifndef DYCOH_BRIDGE_HPP
#define DYCOH_BRIDGE_HPP

#include <memory>
#include <string>
#include <vector>

#include "dycoh/hochschild.hpp"
#include "dycoh/square.hpp"

// The dictionary between the DY complex of a strict skeletal category
// and the Hochschild complex of its object semigroup algebra k[S] with
// coefficients in M = ⊕_X End(X), where X·f = id_X ⊗ f and
// f·X = f ⊗ id_X.  On top of it: the zero-extension of cochains over
// the adjoined unit and the executable category-unitalization theorem.

namespace dycoh {

struct BridgeContext {
  std::shared_ptr<const CatPresentation> category;
  std::shared_ptr<const AlgebraPresentation> algebra;    // k[S]
  std::shared_ptr<const BimodulePresentation> bimodule;  // ⊕_X End(X)
  std::vector<std::size_t> block_offset;                 // per object
};

inline BridgeContext build_bridge(std::shared_ptr<const CatPresentation> c) {
  if (!c->is_strict())
    throw_error(Error::Kind::Precondition, "the bridge needs a strict presentation");
  const CatPresentation& C = *c;
  std::size_t n = C.n_objects();

  auto algebra = std::make_shared<AlgebraPresentation>();
  algebra->field = C.field;
  algebra->name = "k[" + C.name + "]";
  algebra->basis = C.objects;
  algebra->mul.assign(n, std::vector<Vec>(n, vec_zero(C.field, n)));
  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y)
      algebra->mul[x][y][C.tensor_obj(x, y)] = Scalar::one(C.field);
  if (C.unit) algebra->unit_coords = vec_unit(C.field, n, C.unit->object);

  BridgeContext ctx;
  ctx.category = c;
  std::size_t total = 0;
  for (Obj x = 0; x < n; ++x) {
    ctx.block_offset.push_back(total);
    total += C.hom_dim(x, x);
  }

  auto bimodule = std::make_shared<BimodulePresentation>();
  bimodule->algebra = algebra;
  bimodule->name = "End(" + C.name + ")";
  for (Obj x = 0; x < n; ++x)
    for (const std::string& b : C.hom[x][x]) bimodule->basis.push_back(b);
  bimodule->left_action.assign(n, std::vector<Vec>(total, vec_zero(C.field, total)));
  bimodule->right_action.assign(total, std::vector<Vec>(n, vec_zero(C.field, total)));
  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y) {
      std::size_t dy_ = C.hom_dim(y, y);
      for (std::size_t k = 0; k < dy_; ++k) {
        // X · f = id_X ⊗ f placed in the End(X⊗Y) block
        Obj xy = C.tensor_obj(x, y);
        Vec lf = C.tensor_vec(x, x, y, y, C.id(x), vec_unit(C.field, dy_, k));
        Vec& lcell = bimodule->left_action[x][ctx.block_offset[y] + k];
        for (std::size_t i = 0; i < lf.size(); ++i) lcell[ctx.block_offset[xy] + i] = lf[i];
        // f · X = f ⊗ id_X placed in the End(Y⊗X) block
        Obj yx = C.tensor_obj(y, x);
        Vec rf = C.tensor_vec(y, y, x, x, vec_unit(C.field, dy_, k), C.id(x));
        Vec& rcell = bimodule->right_action[ctx.block_offset[y] + k][x];
        for (std::size_t i = 0; i < rf.size(); ++i) rcell[ctx.block_offset[yx] + i] = rf[i];
      }
    }

  if (!validate_algebra(*algebra).ok())
    throw_error(Error::Kind::Internal, "semigroup algebra failed validation");
  if (!validate_bimodule(*bimodule).ok())
    throw_error(Error::Kind::Internal, "endomorphism bimodule failed validation");

  ctx.algebra = algebra;
  ctx.bimodule = bimodule;
  return ctx;
}

namespace bridge {

inline void require_identity_functor(const BridgeContext& ctx, const DYCochain& eta) {
  const FunctorPresentation& F = *eta.functor;
  bool identity = F.source == ctx.category && F.target == ctx.category;
  if (identity)
    for (Obj x = 0; x < F.source->n_objects() && identity; ++x) {
      if (F.obj(x) != x) identity = false;
      for (Obj y = 0; y < F.source->n_objects() && identity; ++y)
        if (F.hom_maps[x][y] != Matrix::identity(F.source->field, F.source->hom_dim(x, y)))
          identity = false;
    }
  if (!identity)
    throw_error(Error::Kind::Unsupported,
                "the Hochschild embedding is defined for identity-functor cochains");
}

// η ↦ ((X_1,...,X_n) ↦ η_{X_1,...,X_n} in the End(X_1⊗...⊗X_n) block).
inline HochCochain embed_dy_cochain(const BridgeContext& ctx, const DYCochain& eta) {
  require_identity_functor(ctx, eta);
  const CatPresentation& C = *ctx.category;
  HochCochain out = hoch::zero_cochain(ctx.bimodule, eta.degree);
  TupleIndex ti(C.n_objects(), static_cast<std::size_t>(eta.degree));
  for (std::size_t r = 0; r < ti.count(); ++r) {
    std::vector<Obj> t = ti.decode(r);
    Obj w = C.tensor_obj_list(t);
    const Vec& v = eta.table[r];
    for (std::size_t i = 0; i < v.size(); ++i)
      out.values[r][ctx.block_offset[w] + i] = v[i];
  }
  return out;
}

}  // namespace bridge

// Zero-extension of a cochain over the freely adjoined unit: the
// extension agrees with η on old tuples and vanishes as soon as one
// slot is the unit.  The zero hom spaces make it natural; the section
// property against the ι-square restriction is exact.
inline DYCochain extend_over_unit(const Unitalization& u,
                                  std::shared_ptr<const FunctorPresentation> id_cu,
                                  const DYCochain& eta) {
  if (id_cu->source != u.category || id_cu->target != u.category)
    throw_error(Error::Kind::Precondition,
                "extension target must be the identity functor of the unitalization");
  if (eta.functor->source != u.inclusion.source)
    throw_error(Error::Kind::Precondition,
                "cochain must live over the category being unitalized");
  std::size_t n_old = u.inclusion.source->n_objects();
  DYCochain out = dy::zero_cochain(id_cu, eta.degree);
  TupleIndex hi(u.category->n_objects(), static_cast<std::size_t>(eta.degree));
  TupleIndex lo(n_old, static_cast<std::size_t>(eta.degree));
  for (std::size_t r = 0; r < hi.count(); ++r) {
    std::vector<Obj> t = hi.decode(r);
    bool hits_unit = false;
    for (Obj x : t)
      if (x >= n_old) hits_unit = true;
    if (hits_unit) continue;
    out.table[r] = eta.table[lo.encode(t)];
  }
  if (auto bad = dy::naturality_violation(out))
    throw_error(Error::Kind::Internal, "zero-extension lost naturality at " + *bad);
  return out;
}

struct UnitalizationDegreeReport {
  int degree = 0;
  CohomologyEntry unitalized_side;  // H^n(C^u)
  CohomologyEntry base_side;        // H^n(C)
  Matrix iota_matrix;
  bool injective = false;
  bool surjective = false;

  UnitalizationDegreeReport() : iota_matrix(FieldSpec::rationals(), 0, 0) {}
};

struct UnitalizationReport {
  std::string category;
  bool pass = false;
  std::vector<UnitalizationDegreeReport> degrees;
  // diagnostic re-run of the injectivity argument through the
  // Hochschild embedding; informational only
  bool normalization_diagnostic_ran = false;
  bool normalization_diagnostic_ok = true;
};

// The category-unitalization theorem run as an executable check: both
// cohomologies are computed from scratch by independent complex
// instances and ι* must be bijective in every requested degree.
inline UnitalizationReport check_category_unitalization(
    std::shared_ptr<const CatPresentation> c, int max_degree, const DyOptions& opts = {}) {
  if (max_degree > opts.degree_cap - 1)
    throw_error(Error::Kind::Budget, "max degree exceeds the configured cap");
  UnitalizationReport rep;
  rep.category = c->name;
  Unitalization u = unitalize_with_inclusion(c);
  auto iota = std::make_shared<FunctorPresentation>(u.inclusion);
  SquareMorphism sq = inclusion_square(iota);
  rep.pass = true;
  for (int n = 1; n <= max_degree; ++n) {
    InducedMap m = induced_map_on_cohomology(sq, n, opts);
    UnitalizationDegreeReport d;
    d.degree = n;
    d.unitalized_side = m.source_cohomology;
    d.base_side = m.target_cohomology;
    d.iota_matrix = m.matrix;
    d.injective = m.injective;
    d.surjective = m.surjective;
    if (!(d.injective && d.surjective)) rep.pass = false;
    rep.degrees.push_back(std::move(d));
  }

  // diagnostic: normalize an embedded representative inside the
  // Hochschild complex of k[S^u]
  BridgeContext ctx = build_bridge(u.category);
  for (const auto& d : rep.degrees) {
    if (d.unitalized_side.representatives.empty()) continue;
    rep.normalization_diagnostic_ran = true;
    HochCochain embedded =
        bridge::embed_dy_cochain(ctx, d.unitalized_side.representatives.front());
    if (!hoch::differential(embedded).is_zero()) {
      rep.normalization_diagnostic_ok = false;
      continue;
    }
    auto norm = hoch::normalize_cocycle(embedded);
    if (!hoch::vanishes_at_unit_arguments(norm.corrected))
      rep.normalization_diagnostic_ok = false;
  }
  return rep;
}

}  // namespace dycoh

#endif
