#ifndef DYCOH_PRESENTATION_HPP
#define DYCOH_PRESENTATION_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dycoh/linalg.hpp"

// Finite presentations of k-linear semigroupal categories and functors.
// Hom spaces are free modules on named basis morphisms; composition and
// the semigroupal product are bilinear structure-constant tables.  By
// multilinearity every axiom only needs checking on basis tuples.

namespace dycoh {

using Obj = std::size_t;

// Bilinear structure constants: (a, b) -> coordinates in the output
// hom space.  Zero-dimensional inputs or outputs give empty tables.
struct StructTable {
  std::size_t dim_a = 0, dim_b = 0, dim_out = 0;
  std::vector<Vec> cells;

  static StructTable zeros(const FieldSpec& f, std::size_t a, std::size_t b,
                           std::size_t out) {
    StructTable t;
    t.dim_a = a;
    t.dim_b = b;
    t.dim_out = out;
    t.cells.assign(a * b, vec_zero(f, out));
    return t;
  }

  const Vec& at(std::size_t ia, std::size_t ib) const { return cells[ia * dim_b + ib]; }
  Vec& at(std::size_t ia, std::size_t ib) { return cells[ia * dim_b + ib]; }

  Vec apply(const FieldSpec& f, const Vec& a, const Vec& b) const {
    Vec out = vec_zero(f, dim_out);
    for (std::size_t ia = 0; ia < dim_a; ++ia) {
      if (a[ia].is_zero()) continue;
      for (std::size_t ib = 0; ib < dim_b; ++ib) {
        if (b[ib].is_zero()) continue;
        Scalar c = a[ia] * b[ib];
        const Vec& cell = at(ia, ib);
        for (std::size_t k = 0; k < dim_out; ++k)
          if (!cell[k].is_zero()) out[k] = out[k] + c * cell[k];
      }
    }
    return out;
  }
};

struct UnitData {
  Obj object = 0;
  bool adjoined = false;  // set by unitalize_category; blocks re-unitalization
};

struct CatPresentation {
  FieldSpec field;
  std::string name;
  std::vector<std::string> objects;
  std::vector<std::vector<Obj>> tensor_obj_table;  // [x][y]
  // hom[x][y]: names of the basis morphisms of Hom(x, y)
  std::vector<std::vector<std::vector<std::string>>> hom;
  std::vector<Vec> identity_coords;  // id_x in Hom(x, x)
  // compose[x][y][z].at(g, f) = g∘f for f in Hom(x,y), g in Hom(y,z)
  std::vector<std::vector<std::vector<StructTable>>> compose;
  // tensor_mor[x][x2][y][y2].at(f, g) = f⊗g in Hom(x⊗y, x2⊗y2)
  std::vector<std::vector<std::vector<std::vector<StructTable>>>> tensor_mor;
  // associator[x][y][z] in Hom(x⊗(y⊗z), (x⊗y)⊗z); absent means strict
  std::optional<std::vector<std::vector<std::vector<Vec>>>> associator;
  std::optional<UnitData> unit;

  std::size_t n_objects() const { return objects.size(); }
  bool is_strict() const { return !associator.has_value(); }

  std::size_t hom_dim(Obj x, Obj y) const { return hom[x][y].size(); }
  const Vec& id(Obj x) const { return identity_coords[x]; }
  Obj tensor_obj(Obj x, Obj y) const { return tensor_obj_table[x][y]; }

  Obj tensor_obj_list(std::span<const Obj> xs) const {
    Obj acc = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) acc = tensor_obj(acc, xs[i]);
    return acc;
  }

  Vec compose_vec(Obj x, Obj y, Obj z, const Vec& f, const Vec& g) const {
    return compose[x][y][z].apply(field, g, f);
  }

  Vec tensor_vec(Obj x, Obj x2, Obj y, Obj y2, const Vec& f, const Vec& g) const {
    return tensor_mor[x][x2][y][y2].apply(field, f, g);
  }

  // Throws on inconsistent table shapes, naming the offending table.
  void check_shapes() const;
};

// Morphism with its endpoints, for folding tensor products.
struct Mor {
  Obj src = 0, tgt = 0;
  Vec coords;
};

inline Mor tensor_fold(const CatPresentation& c, std::span<const Mor> ms) {
  Mor acc = ms.front();
  for (std::size_t i = 1; i < ms.size(); ++i) {
    const Mor& m = ms[i];
    Vec coords = c.tensor_vec(acc.src, acc.tgt, m.src, m.tgt, acc.coords, m.coords);
    acc = Mor{c.tensor_obj(acc.src, m.src), c.tensor_obj(acc.tgt, m.tgt),
              std::move(coords)};
  }
  return acc;
}

inline void CatPresentation::check_shapes() const {
  std::size_t n = n_objects();
  auto fail = [&](const std::string& table) {
    throw_error(Error::Kind::Structure,
                "category " + name + ": malformed table: " + table);
  };
  if (tensor_obj_table.size() != n) fail("tensor_obj");
  for (const auto& row : tensor_obj_table) {
    if (row.size() != n) fail("tensor_obj");
    for (Obj o : row)
      if (o >= n) fail("tensor_obj");
  }
  if (hom.size() != n) fail("hom");
  for (const auto& row : hom)
    if (row.size() != n) fail("hom");
  if (identity_coords.size() != n) fail("identity");
  for (Obj x = 0; x < n; ++x)
    if (identity_coords[x].size() != hom_dim(x, x)) fail("identity");
  if (compose.size() != n) fail("compose");
  for (Obj x = 0; x < n; ++x) {
    if (compose[x].size() != n) fail("compose");
    for (Obj y = 0; y < n; ++y) {
      if (compose[x][y].size() != n) fail("compose");
      for (Obj z = 0; z < n; ++z) {
        const StructTable& t = compose[x][y][z];
        if (t.dim_a != hom_dim(y, z) || t.dim_b != hom_dim(x, y) ||
            t.dim_out != hom_dim(x, z))
          fail("compose");
        for (const Vec& cell : t.cells)
          if (cell.size() != t.dim_out) fail("compose");
      }
    }
  }
  if (tensor_mor.size() != n) fail("tensor_mor");
  for (Obj x = 0; x < n; ++x)
    for (Obj x2 = 0; x2 < n; ++x2)
      for (Obj y = 0; y < n; ++y)
        for (Obj y2 = 0; y2 < n; ++y2) {
          if (tensor_mor[x].size() != n || tensor_mor[x][x2].size() != n ||
              tensor_mor[x][x2][y].size() != n)
            fail("tensor_mor");
          const StructTable& t = tensor_mor[x][x2][y][y2];
          if (t.dim_a != hom_dim(x, x2) || t.dim_b != hom_dim(y, y2) ||
              t.dim_out != hom_dim(tensor_obj(x, y), tensor_obj(x2, y2)))
            fail("tensor_mor");
          for (const Vec& cell : t.cells)
            if (cell.size() != t.dim_out) fail("tensor_mor");
        }
  if (associator) {
    const auto& a = *associator;
    if (a.size() != n) fail("associator");
    for (Obj x = 0; x < n; ++x)
      for (Obj y = 0; y < n; ++y)
        for (Obj z = 0; z < n; ++z) {
          if (a[x].size() != n || a[x][y].size() != n) fail("associator");
          Obj lhs = tensor_obj(x, tensor_obj(y, z));
          Obj rhs = tensor_obj(tensor_obj(x, y), z);
          if (a[x][y][z].size() != hom_dim(lhs, rhs)) fail("associator");
        }
  }
  if (unit && unit->object >= n) fail("unit");
}

struct FunctorPresentation {
  std::shared_ptr<const CatPresentation> source, target;
  std::string name;
  std::vector<Obj> object_map;
  std::vector<std::vector<Matrix>> hom_maps;  // [x][y]: Hom_src(x,y) -> Hom_tgt(Fx,Fy)
  // phi[x][y] in Hom_tgt(Fx⊗Fy, F(x⊗y)); absent means strict
  std::optional<std::vector<std::vector<Vec>>> phi;

  bool is_strict() const { return !phi.has_value(); }
  Obj obj(Obj x) const { return object_map[x]; }

  Vec apply(Obj x, Obj y, const Vec& f) const { return hom_maps[x][y].apply(f); }

  void check_shapes() const {
    std::size_t n = source->n_objects();
    auto fail = [&](const std::string& what) {
      throw_error(Error::Kind::Structure, "functor " + name + ": malformed " + what);
    };
    if (!source || !target) fail("endpoints");
    if (object_map.size() != n) fail("object_map");
    for (Obj o : object_map)
      if (o >= target->n_objects()) fail("object_map");
    if (hom_maps.size() != n) fail("hom_maps");
    for (Obj x = 0; x < n; ++x) {
      if (hom_maps[x].size() != n) fail("hom_maps");
      for (Obj y = 0; y < n; ++y) {
        const Matrix& m = hom_maps[x][y];
        if (m.rows() != target->hom_dim(obj(x), obj(y)) || m.cols() != source->hom_dim(x, y))
          fail("hom_maps");
      }
    }
    if (phi) {
      if (phi->size() != n) fail("phi");
      for (Obj x = 0; x < n; ++x) {
        if ((*phi)[x].size() != n) fail("phi");
        for (Obj y = 0; y < n; ++y) {
          Obj lhs = target->tensor_obj(obj(x), obj(y));
          Obj rhs = obj(source->tensor_obj(x, y));
          if ((*phi)[x][y].size() != target->hom_dim(lhs, rhs)) fail("phi");
        }
      }
    }
  }
};

// Structural equality of functors with identified endpoints; used for
// square commutativity checks.
inline bool same_functor_data(const FunctorPresentation& a, const FunctorPresentation& b) {
  if (a.object_map != b.object_map) return false;
  std::size_t n = a.object_map.size();
  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y)
      if (a.hom_maps[x][y] != b.hom_maps[x][y]) return false;
  return true;
}

// Does the morphism have a two-sided inverse?  Solved exactly as a
// linear system in the coordinates of the candidate inverse.
inline bool is_invertible_mor(const CatPresentation& c, Obj a, Obj b, const Vec& f) {
  std::size_t fwd = c.hom_dim(a, b), bwd = c.hom_dim(b, a);
  std::size_t da = c.hom_dim(a, a), db = c.hom_dim(b, b);
  // unknown v in Hom(b,a): v∘f = id_a and f∘v = id_b
  Matrix sys(c.field, da + db, bwd);
  for (std::size_t j = 0; j < bwd; ++j) {
    Vec basis = vec_unit(c.field, bwd, j);
    Vec vf = c.compose_vec(a, b, a, f, basis);   // v∘f
    Vec fv = c.compose_vec(b, a, b, basis, f);   // f∘v
    for (std::size_t i = 0; i < da; ++i) sys.at(i, j) = vf[i];
    for (std::size_t i = 0; i < db; ++i) sys.at(da + i, j) = fv[i];
  }
  Vec rhs = c.id(a);
  rhs.insert(rhs.end(), c.id(b).begin(), c.id(b).end());
  (void)fwd;
  return solve(sys, rhs).has_value();
}

}  // namespace dycoh

#endif
