#ifndef DYCOH_DY_HPP
#define DYCOH_DY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dycoh/construct.hpp"
#include "dycoh/presentation.hpp"

// The Davydov-Yetter complex of a strict k-linear semigroupal functor.
// A degree-n cochain assigns to every n-tuple of source objects an
// endomorphism of F(X_1⊗...⊗X_n), natural in every slot.  The cochain
// space is realized as the kernel of the naturality constraint system;
// cofaces and the differential act on the per-tuple tables directly.

namespace dycoh {

struct DyOptions {
  int degree_cap = 4;
  std::size_t max_variables = 2000000;
};

// Mixed-radix enumeration of object tuples, lexicographic in object
// declaration order.  This fixes every matrix layout downstream.
class TupleIndex {
 public:
  TupleIndex(std::size_t base, std::size_t length) : base_(base), length_(length) {
    count_ = 1;
    for (std::size_t i = 0; i < length; ++i) count_ *= base;
  }

  std::size_t count() const { return count_; }
  std::size_t length() const { return length_; }

  std::vector<Obj> decode(std::size_t rank) const {
    std::vector<Obj> t(length_);
    for (std::size_t i = length_; i-- > 0;) {
      t[i] = rank % base_;
      rank /= base_;
    }
    return t;
  }

  std::size_t encode(std::span<const Obj> t) const {
    std::size_t rank = 0;
    for (std::size_t i = 0; i < length_; ++i) rank = rank * base_ + t[i];
    return rank;
  }

 private:
  std::size_t base_, length_, count_;
};

struct DYCochain {
  std::shared_ptr<const FunctorPresentation> functor;
  int degree = 1;
  std::vector<Vec> table;  // tuple rank -> coordinates in End(F(⊗tuple))

  bool is_zero() const {
    for (const Vec& v : table)
      if (!vec_is_zero(v)) return false;
    return true;
  }

  bool operator==(const DYCochain& o) const {
    return degree == o.degree && table == o.table;
  }
};

namespace dy {

inline Obj image_object(const FunctorPresentation& F, std::span<const Obj> tuple) {
  return F.obj(F.source->tensor_obj_list(tuple));
}

inline std::size_t end_dim(const FunctorPresentation& F, std::span<const Obj> tuple) {
  Obj w = image_object(F, tuple);
  return F.target->hom_dim(w, w);
}

inline void require_strict(const FunctorPresentation& F) {
  if (!F.is_strict() || !F.source->is_strict() || !F.target->is_strict())
    throw_error(Error::Kind::Precondition,
                "DY complexes are computed for strict presentations only");
}

struct CochainSpace {
  std::shared_ptr<const FunctorPresentation> functor;
  int degree = 1;
  std::vector<std::size_t> offset;  // per tuple rank
  std::size_t total_dim = 0;

  TupleIndex tuples() const {
    return TupleIndex(functor->source->n_objects(), static_cast<std::size_t>(degree));
  }
};

inline CochainSpace make_space(std::shared_ptr<const FunctorPresentation> F, int n,
                               const DyOptions& opts = {}) {
  require_strict(*F);
  if (n < 1)
    throw_error(Error::Kind::Precondition,
                "cochain spaces exist in degrees >= 1; degree 0 lives in End(1), "
                "see the degree-0 differential");
  if (n > opts.degree_cap)
    throw_error(Error::Kind::Budget, "degree " + std::to_string(n) +
                                         " exceeds the configured cap " +
                                         std::to_string(opts.degree_cap));
  CochainSpace s;
  s.functor = F;
  s.degree = n;
  TupleIndex ti = TupleIndex(F->source->n_objects(), static_cast<std::size_t>(n));
  s.offset.reserve(ti.count());
  for (std::size_t r = 0; r < ti.count(); ++r) {
    s.offset.push_back(s.total_dim);
    s.total_dim += end_dim(*F, ti.decode(r));
    if (s.total_dim > opts.max_variables)
      throw_error(Error::Kind::Budget, "cochain table exceeds the variable budget");
  }
  return s;
}

inline Vec flatten(const CochainSpace& s, const DYCochain& eta) {
  Vec out = vec_zero(s.functor->source->field, s.total_dim);
  TupleIndex ti = s.tuples();
  for (std::size_t r = 0; r < ti.count(); ++r)
    for (std::size_t k = 0; k < eta.table[r].size(); ++k)
      out[s.offset[r] + k] = eta.table[r][k];
  return out;
}

inline DYCochain unflatten(const CochainSpace& s, const Vec& v) {
  DYCochain eta;
  eta.functor = s.functor;
  eta.degree = s.degree;
  TupleIndex ti = s.tuples();
  const FunctorPresentation& F = *s.functor;
  for (std::size_t r = 0; r < ti.count(); ++r) {
    std::size_t d = end_dim(F, ti.decode(r));
    Vec cell(v.begin() + static_cast<std::ptrdiff_t>(s.offset[r]),
             v.begin() + static_cast<std::ptrdiff_t>(s.offset[r] + d));
    eta.table.push_back(std::move(cell));
  }
  return eta;
}

inline DYCochain zero_cochain(std::shared_ptr<const FunctorPresentation> F, int n) {
  DYCochain eta;
  eta.functor = F;
  eta.degree = n;
  TupleIndex ti(F->source->n_objects(), static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < ti.count(); ++r)
    eta.table.push_back(vec_zero(F->source->field, end_dim(*F, ti.decode(r))));
  return eta;
}

// F(id ⊗ ... ⊗ f ⊗ ... ⊗ id) for a basis-slot replacement, as a
// morphism of the target category.
inline Mor slot_morphism(const FunctorPresentation& F, std::span<const Obj> tuple,
                         std::size_t slot, Obj target_obj, const Vec& f) {
  const CatPresentation& C = *F.source;
  std::vector<Mor> parts;
  parts.reserve(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i == slot)
      parts.push_back(Mor{tuple[i], target_obj, f});
    else
      parts.push_back(Mor{tuple[i], tuple[i], C.id(tuple[i])});
  }
  Mor w = tensor_fold(C, parts);
  return Mor{F.obj(w.src), F.obj(w.tgt), F.apply(w.src, w.tgt, w.coords)};
}

// First violated naturality instance, if any.
inline std::optional<std::string> naturality_violation(const DYCochain& eta) {
  const FunctorPresentation& F = *eta.functor;
  const CatPresentation& C = *F.source;
  const CatPresentation& D = *F.target;
  TupleIndex ti(C.n_objects(), static_cast<std::size_t>(eta.degree));
  for (std::size_t r = 0; r < ti.count(); ++r) {
    std::vector<Obj> t = ti.decode(r);
    for (std::size_t slot = 0; slot < t.size(); ++slot)
      for (Obj y = 0; y < C.n_objects(); ++y) {
        std::size_t dm = C.hom_dim(t[slot], y);
        for (std::size_t mi = 0; mi < dm; ++mi) {
          std::vector<Obj> t2 = t;
          t2[slot] = y;
          Mor w = slot_morphism(F, t, slot, y, vec_unit(C.field, dm, mi));
          const Vec& here = eta.table[r];
          const Vec& there = eta.table[ti.encode(t2)];
          Vec lhs = D.compose_vec(w.src, w.tgt, w.tgt, w.coords, there);
          Vec rhs = D.compose_vec(w.src, w.src, w.tgt, here, w.coords);
          if (lhs != rhs) {
            std::string witness = "tuple (";
            for (std::size_t i = 0; i < t.size(); ++i)
              witness += (i ? ", " : "") + C.objects[t[i]];
            witness += ") slot " + std::to_string(slot) + " morphism " +
                       C.hom[t[slot]][y][mi];
            return witness;
          }
        }
      }
  }
  return std::nullopt;
}

struct BasisResult {
  CochainSpace space;
  std::vector<DYCochain> basis;
  bool full_space = false;  // no active constraints: basis is the standard one
};

// Assemble the naturality constraint system over all (tuple, slot,
// basis morphism) instances and return its canonical kernel basis.
inline BasisResult cochain_basis(std::shared_ptr<const FunctorPresentation> F, int n,
                                 const DyOptions& opts = {},
                                 const LinalgOptions& lopts = {}) {
  CochainSpace space = make_space(F, n, opts);
  const CatPresentation& C = *F->source;
  const CatPresentation& D = *F->target;
  const FieldSpec& field = C.field;
  TupleIndex ti = space.tuples();

  // count constraint rows
  std::size_t rows = 0;
  for (std::size_t r = 0; r < ti.count(); ++r) {
    std::vector<Obj> t = ti.decode(r);
    Obj w_src = image_object(*F, t);
    for (std::size_t slot = 0; slot < t.size(); ++slot)
      for (Obj y = 0; y < C.n_objects(); ++y) {
        std::size_t dm = C.hom_dim(t[slot], y);
        if (!dm) continue;
        std::vector<Obj> t2 = t;
        t2[slot] = y;
        Obj w_tgt = image_object(*F, t2);
        rows += dm * D.hom_dim(w_src, w_tgt);
      }
  }

  Triplets sys(field, rows, space.total_dim);
  std::size_t row = 0;
  for (std::size_t r = 0; r < ti.count(); ++r) {
    std::vector<Obj> t = ti.decode(r);
    for (std::size_t slot = 0; slot < t.size(); ++slot)
      for (Obj y = 0; y < C.n_objects(); ++y) {
        std::size_t dm = C.hom_dim(t[slot], y);
        for (std::size_t mi = 0; mi < dm; ++mi) {
          std::vector<Obj> t2 = t;
          t2[slot] = y;
          std::size_t r2 = ti.encode(t2);
          Mor w = slot_morphism(*F, t, slot, y, vec_unit(field, dm, mi));
          std::size_t eq_rows = D.hom_dim(w.src, w.tgt);
          std::size_t d_here = D.hom_dim(w.src, w.src);
          std::size_t d_there = D.hom_dim(w.tgt, w.tgt);
          // eta_{t2} ∘ w  -  w ∘ eta_t  =  0
          for (std::size_t g = 0; g < d_there; ++g) {
            Vec col = D.compose_vec(w.src, w.tgt, w.tgt, w.coords,
                                    vec_unit(field, d_there, g));
            for (std::size_t i = 0; i < eq_rows; ++i)
              sys.add(row + i, space.offset[r2] + g, col[i]);
          }
          for (std::size_t h = 0; h < d_here; ++h) {
            Vec col = D.compose_vec(w.src, w.src, w.tgt, vec_unit(field, d_here, h),
                                    w.coords);
            for (std::size_t i = 0; i < eq_rows; ++i)
              sys.add(row + i, space.offset[r] + h, -col[i]);
          }
          row += eq_rows;
        }
      }
  }

  BasisResult result;
  result.space = space;
  if (sys.nnz() == 0) {
    result.full_space = true;
    for (std::size_t j = 0; j < space.total_dim; ++j)
      result.basis.push_back(unflatten(space, vec_unit(field, space.total_dim, j)));
    return result;
  }
  Echelon e = sys.echelon(lopts);
  for (const Vec& k : kernel_basis_from(e)) result.basis.push_back(unflatten(space, k));
  return result;
}

// Coface map ∂_i in degree n: i = 0 tensors id_{F(X_0)} on the left,
// 1 <= i <= n merges slots i-1 and i through ⊗, i = n+1 tensors
// id_{F(X_n)} on the right.
inline DYCochain coface(const DYCochain& eta, int i) {
  const FunctorPresentation& F = *eta.functor;
  require_strict(F);
  const CatPresentation& C = *F.source;
  const CatPresentation& D = *F.target;
  int n = eta.degree;
  if (i < 0 || i > n + 1)
    throw_error(Error::Kind::Precondition,
                "coface index " + std::to_string(i) + " out of range 0.." +
                    std::to_string(n + 1));
  DYCochain out;
  out.functor = eta.functor;
  out.degree = n + 1;
  TupleIndex to(C.n_objects(), static_cast<std::size_t>(n + 1));
  TupleIndex from(C.n_objects(), static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < to.count(); ++r) {
    std::vector<Obj> t = to.decode(r);
    Vec value;
    if (i == 0) {
      std::vector<Obj> rest(t.begin() + 1, t.end());
      Obj w = image_object(F, rest);
      Obj fx0 = F.obj(t[0]);
      value = D.tensor_vec(fx0, fx0, w, w, D.id(fx0), eta.table[from.encode(rest)]);
    } else if (i <= n) {
      std::vector<Obj> merged;
      merged.reserve(static_cast<std::size_t>(n));
      for (std::size_t k = 0; k < t.size(); ++k) {
        if (static_cast<int>(k) == i - 1) {
          merged.push_back(C.tensor_obj(t[k], t[k + 1]));
          ++k;
        } else {
          merged.push_back(t[k]);
        }
      }
      value = eta.table[from.encode(merged)];
    } else {
      std::vector<Obj> rest(t.begin(), t.end() - 1);
      Obj w = image_object(F, rest);
      Obj fxn = F.obj(t.back());
      value = D.tensor_vec(w, w, fxn, fxn, eta.table[from.encode(rest)], D.id(fxn));
    }
    out.table.push_back(std::move(value));
  }
  return out;
}

inline DYCochain differential(const DYCochain& eta) {
  int n = eta.degree;
  DYCochain acc = coface(eta, 0);
  bool negative = true;
  for (int i = 1; i <= n + 1; ++i) {
    DYCochain d = coface(eta, i);
    for (std::size_t r = 0; r < acc.table.size(); ++r)
      acc.table[r] = negative ? vec_sub(acc.table[r], d.table[r])
                              : vec_add(acc.table[r], d.table[r]);
    negative = !negative;
  }
  return acc;
}

// d^0(f)_X = id_{F(X)} ⊗ f - f ⊗ id_{F(X)} for f in End(1) of the
// target; requires the target to be monoidal with a strict unit.
inline DYCochain degree0_differential(std::shared_ptr<const FunctorPresentation> F,
                                      const Vec& f_endo) {
  require_strict(*F);
  const CatPresentation& D = *F->target;
  if (!D.unit)
    throw_error(Error::Kind::Precondition,
                "degree-0 cochains need a monoidal presentation (no unit object)");
  Obj u = D.unit->object;
  if (f_endo.size() != D.hom_dim(u, u))
    throw_error(Error::Kind::Dimension, "End(1) coordinate length mismatch");
  const CatPresentation& C = *F->source;
  DYCochain out;
  out.functor = F;
  out.degree = 1;
  for (Obj x = 0; x < C.n_objects(); ++x) {
    Obj fx = F->obj(x);
    Vec left = D.tensor_vec(fx, fx, u, u, D.id(fx), f_endo);
    Vec right = D.tensor_vec(u, u, fx, fx, f_endo, D.id(fx));
    out.table.push_back(vec_sub(left, right));
  }
  return out;
}

inline DYCochain degree0_differential(const std::shared_ptr<const CatPresentation>& c,
                                      const Vec& f_endo) {
  return degree0_differential(
      std::make_shared<FunctorPresentation>(identity_functor(c)), f_endo);
}

}  // namespace dy

struct CohomologyEntry {
  int degree = 0;
  std::size_t dim_cochains = 0;
  std::size_t rank_d = 0;
  std::size_t dim_cocycles = 0;
  std::size_t dim_coboundaries = 0;
  std::size_t dim_H = 0;
  std::string incoming_convention;
  std::vector<DYCochain> representatives;
};

struct CoboundaryResult {
  bool is_coboundary = false;
  std::optional<DYCochain> witness;   // degree n-1 preimage, n >= 2
  std::optional<Vec> unit_witness;    // End(1) preimage for n = 1 over a unital target
};

// Memoized view of one functor's DY complex: canonical cochain bases,
// differentials in those coordinates, cohomology with representatives.
class DYComplex {
 public:
  explicit DYComplex(std::shared_ptr<const FunctorPresentation> F, DyOptions opts = {},
                     LinalgOptions lopts = {})
      : F_(std::move(F)), opts_(opts), lopts_(lopts) {}

  const std::shared_ptr<const FunctorPresentation>& functor() const { return F_; }
  const DyOptions& options() const { return opts_; }

  struct DegreeData {
    dy::CochainSpace space;
    std::vector<DYCochain> basis;
    bool full_space = false;
    Matrix basis_matrix;  // columns: flattened basis (only when !full_space)

    DegreeData() : basis_matrix(FieldSpec::rationals(), 0, 0) {}
  };

  const DegreeData& degree(int n) {
    auto it = degrees_.find(n);
    if (it != degrees_.end()) return it->second;
    dy::BasisResult br = dy::cochain_basis(F_, n, opts_, lopts_);
    DegreeData data;
    data.space = br.space;
    data.basis = std::move(br.basis);
    data.full_space = br.full_space;
    if (!data.full_space) {
      std::vector<Vec> cols;
      cols.reserve(data.basis.size());
      for (const DYCochain& b : data.basis) cols.push_back(dy::flatten(data.space, b));
      data.basis_matrix = Matrix::from_columns(field(), cols);
      if (cols.empty()) data.basis_matrix = Matrix(field(), data.space.total_dim, 0);
    }
    return degrees_.emplace(n, std::move(data)).first->second;
  }

  // Coordinates of a natural cochain in the canonical degree basis.
  Vec to_basis_coords(const DYCochain& eta) {
    const DegreeData& d = degree(eta.degree);
    Vec flat = dy::flatten(d.space, eta);
    if (d.full_space) return flat;
    auto sol = solve(d.basis_matrix, flat);
    if (!sol)
      throw_error(Error::Kind::Internal,
                  "cochain is not in the naturality kernel (corrupted input?)");
    return *sol;
  }

  DYCochain from_basis_coords(int n, const Vec& coords) {
    const DegreeData& d = degree(n);
    DYCochain acc = dy::zero_cochain(F_, n);
    for (std::size_t j = 0; j < coords.size(); ++j) {
      if (coords[j].is_zero()) continue;
      for (std::size_t r = 0; r < acc.table.size(); ++r)
        acc.table[r] = vec_add(acc.table[r], vec_scale(coords[j], d.basis[j].table[r]));
    }
    return acc;
  }

  // Matrix of d^n from degree-n basis coordinates to degree-(n+1)
  // basis coordinates.
  const Matrix& differential_matrix(int n) {
    auto it = diff_.find(n);
    if (it != diff_.end()) return it->second;
    const DegreeData& lo = degree(n);
    const DegreeData& hi = degree(n + 1);
    std::vector<Vec> image_cols;
    image_cols.reserve(lo.basis.size());
    for (const DYCochain& b : lo.basis)
      image_cols.push_back(dy::flatten(hi.space, dy::differential(b)));
    Matrix images = Matrix::from_columns(field(), image_cols);
    if (image_cols.empty()) images = Matrix(field(), hi.space.total_dim, 0);
    Matrix result(field(), hi.basis.size(), lo.basis.size());
    if (hi.full_space) {
      result = images;
    } else if (!lo.basis.empty()) {
      auto sol = solve_many(hi.basis_matrix, images);
      if (!sol)
        throw_error(Error::Kind::Internal,
                    "differential image left the naturality kernel");
      result = *sol;
    }
    return diff_.emplace(n, std::move(result)).first->second;
  }

  // d^0 as a matrix into degree-1 basis coordinates; nullopt when the
  // target has no unit object.
  const std::optional<Matrix>& d0_matrix() {
    if (d0_computed_) return d0_;
    d0_computed_ = true;
    if (!F_->target->unit) return d0_;
    Obj u = F_->target->unit->object;
    std::size_t du = F_->target->hom_dim(u, u);
    const DegreeData& one = degree(1);
    Matrix m(field(), one.basis.size(), du);
    for (std::size_t j = 0; j < du; ++j) {
      DYCochain col = dy::degree0_differential(F_, vec_unit(field(), du, j));
      Vec coords = to_basis_coords(col);
      for (std::size_t i = 0; i < coords.size(); ++i) m.at(i, j) = coords[i];
    }
    d0_ = std::move(m);
    return d0_;
  }

  // Columns spanning the coboundary space of degree n, in basis coords.
  Matrix coboundary_columns(int n) {
    if (n >= 2) return differential_matrix(n - 1);
    const auto& d0 = d0_matrix();
    if (d0) return *d0;
    return Matrix(field(), degree(1).basis.size(), 0);
  }

  CohomologyEntry cohomology(int n) {
    if (n < 1 || n > opts_.degree_cap - 1)
      throw_error(Error::Kind::Budget,
                  "cohomology degree must lie in 1.." +
                      std::to_string(opts_.degree_cap - 1) +
                      " (the outgoing differential must fit under the cap)");
    CohomologyEntry entry;
    entry.degree = n;
    const Matrix& d = differential_matrix(n);
    entry.dim_cochains = degree(n).basis.size();
    entry.rank_d = rank(d);
    entry.dim_cocycles = entry.dim_cochains - entry.rank_d;
    Matrix cobound = coboundary_columns(n);
    entry.dim_coboundaries = rank(cobound);
    entry.dim_H = entry.dim_cocycles - entry.dim_coboundaries;
    if (n == 1)
      entry.incoming_convention = F_->target->unit
                                      ? "d0 from End(1) (monoidal presentation)"
                                      : "zero incoming differential (semigroupal presentation)";
    else
      entry.incoming_convention = "d" + std::to_string(n - 1);

    // representatives: first cocycle-kernel vectors outside the
    // coboundary span, in canonical order
    std::vector<Vec> kept;
    Matrix span = cobound;
    for (const Vec& k : kernel_basis(d)) {
      if (kept.size() == entry.dim_H) break;
      if (in_span(span, k)) continue;
      span = span.hcat(Matrix::from_columns(field(), {k}));
      kept.push_back(k);
    }
    if (kept.size() != entry.dim_H)
      throw_error(Error::Kind::Internal, "representative selection failed");
    for (const Vec& k : kept) entry.representatives.push_back(from_basis_coords(n, k));
    return entry;
  }

  CoboundaryResult is_coboundary(const DYCochain& eta) {
    int n = eta.degree;
    if (!dy::differential(eta).is_zero())
      throw_error(Error::Kind::Precondition, "is_coboundary expects a cocycle");
    Vec coords = to_basis_coords(eta);
    CoboundaryResult res;
    if (n >= 2) {
      auto sol = solve(differential_matrix(n - 1), coords);
      res.is_coboundary = sol.has_value();
      if (sol) res.witness = from_basis_coords(n - 1, *sol);
      return res;
    }
    const auto& d0 = d0_matrix();
    if (d0) {
      auto sol = solve(*d0, coords);
      res.is_coboundary = sol.has_value();
      if (sol) res.unit_witness = *sol;
      return res;
    }
    res.is_coboundary = vec_is_zero(coords);
    return res;
  }

  const FieldSpec& field() const { return F_->source->field; }

 private:
  std::shared_ptr<const FunctorPresentation> F_;
  DyOptions opts_;
  LinalgOptions lopts_;
  std::map<int, DegreeData> degrees_;
  std::map<int, Matrix> diff_;
  std::optional<Matrix> d0_;
  bool d0_computed_ = false;
};

}  // namespace dycoh

#endif
