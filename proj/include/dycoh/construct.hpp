#ifndef DYCOH_CONSTRUCT_HPP
#define DYCOH_CONSTRUCT_HPP

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "dycoh/presentation.hpp"

// Builders: group categories, full subcategories with their inclusion
// functors, functor composition, and the category unitalization.

namespace dycoh {

inline FunctorPresentation identity_functor(std::shared_ptr<const CatPresentation> c) {
  FunctorPresentation F;
  F.source = c;
  F.target = c;
  F.name = "id_" + c->name;
  std::size_t n = c->n_objects();
  F.object_map.resize(n);
  for (Obj x = 0; x < n; ++x) F.object_map[x] = x;
  F.hom_maps.assign(n, std::vector<Matrix>());
  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y)
      F.hom_maps[x].push_back(Matrix::identity(c->field, c->hom_dim(x, y)));
  return F;
}

// Skeletal strict presentation of Vec_G: objects are the group
// elements, all hom spaces are k·id on the diagonal, ⊗ is the group
// product.  The group axioms are verified first.
inline CatPresentation make_group_category(const FieldSpec& field,
                                           const std::vector<std::string>& names,
                                           const std::vector<std::vector<Obj>>& table,
                                           const std::string& cat_name = "VecG") {
  std::size_t n = names.size();
  if (table.size() != n)
    throw_error(Error::Kind::Structure, "group table size mismatch");
  for (const auto& row : table) {
    if (row.size() != n)
      throw_error(Error::Kind::Structure, "group table size mismatch");
    for (Obj o : row)
      if (o >= n) throw_error(Error::Kind::Structure, "group table index out of range");
  }
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b)
      for (Obj c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw_error(Error::Kind::Structure, "group table not associative at (" +
                                                  names[a] + ", " + names[b] + ", " +
                                                  names[c] + ")");
  Obj e = n;
  for (Obj cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (Obj a = 0; a < n; ++a)
      if (table[cand][a] != a || table[a][cand] != a) ok = false;
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e == n) throw_error(Error::Kind::Structure, "group table has no identity");
  for (Obj a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (Obj b = 0; b < n; ++b)
      if (table[a][b] == e && table[b][a] == e) has_inverse = true;
    if (!has_inverse)
      throw_error(Error::Kind::Structure, "group table has no inverse for " + names[a]);
  }

  CatPresentation c;
  c.field = field;
  c.name = cat_name;
  c.objects = names;
  c.tensor_obj_table = table;
  c.hom.assign(n, std::vector<std::vector<std::string>>(n));
  for (Obj x = 0; x < n; ++x) c.hom[x][x] = {"id_" + names[x]};
  c.identity_coords.assign(n, Vec{});
  for (Obj x = 0; x < n; ++x) c.identity_coords[x] = {Scalar::one(field)};
  c.compose.assign(
      n, std::vector<std::vector<StructTable>>(n, std::vector<StructTable>(n)));
  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y)
      for (Obj z = 0; z < n; ++z) {
        StructTable t = StructTable::zeros(field, c.hom_dim(y, z), c.hom_dim(x, y),
                                           c.hom_dim(x, z));
        if (x == y && y == z) t.at(0, 0) = {Scalar::one(field)};
        c.compose[x][y][z] = std::move(t);
      }
  c.tensor_mor.assign(
      n, std::vector<std::vector<std::vector<StructTable>>>(
             n, std::vector<std::vector<StructTable>>(n, std::vector<StructTable>(n))));
  for (Obj x = 0; x < n; ++x)
    for (Obj x2 = 0; x2 < n; ++x2)
      for (Obj y = 0; y < n; ++y)
        for (Obj y2 = 0; y2 < n; ++y2) {
          StructTable t = StructTable::zeros(
              field, c.hom_dim(x, x2), c.hom_dim(y, y2),
              c.hom_dim(c.tensor_obj(x, y), c.tensor_obj(x2, y2)));
          if (x == x2 && y == y2) t.at(0, 0) = {Scalar::one(field)};
          c.tensor_mor[x][x2][y][y2] = std::move(t);
        }
  // The presentation is used semigroupally; no unit marker even though
  // the group identity happens to be a strict unit.
  return c;
}

// Full subcategory on a ⊗-closed object subset, with index order
// inherited from the ambient presentation.
inline CatPresentation restrict_full_subcategory(const CatPresentation& c,
                                                 std::vector<Obj> subset,
                                                 const std::string& name) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (subset.empty())
    throw_error(Error::Kind::Precondition, "subcategory object set is empty");
  std::vector<std::size_t> pos(c.n_objects(), c.n_objects());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= c.n_objects())
      throw_error(Error::Kind::Precondition, "subcategory object out of range");
    pos[subset[i]] = i;
  }
  for (Obj a : subset)
    for (Obj b : subset) {
      Obj t = c.tensor_obj(a, b);
      if (pos[t] == c.n_objects())
        throw_error(Error::Kind::Precondition,
                    "object set not closed under ⊗: " + c.objects[a] + "⊗" +
                        c.objects[b] + " = " + c.objects[t] + " is outside");
    }

  std::size_t m = subset.size();
  CatPresentation r;
  r.field = c.field;
  r.name = name;
  for (Obj a : subset) r.objects.push_back(c.objects[a]);
  r.tensor_obj_table.assign(m, std::vector<Obj>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      r.tensor_obj_table[i][j] = pos[c.tensor_obj(subset[i], subset[j])];
  r.hom.assign(m, std::vector<std::vector<std::string>>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) r.hom[i][j] = c.hom[subset[i]][subset[j]];
  for (std::size_t i = 0; i < m; ++i)
    r.identity_coords.push_back(c.identity_coords[subset[i]]);
  r.compose.assign(
      m, std::vector<std::vector<StructTable>>(m, std::vector<StructTable>(m)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        r.compose[i][j][k] = c.compose[subset[i]][subset[j]][subset[k]];
  r.tensor_mor.assign(
      m, std::vector<std::vector<std::vector<StructTable>>>(
             m, std::vector<std::vector<StructTable>>(m, std::vector<StructTable>(m))));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l)
          r.tensor_mor[i][j][k][l] =
              c.tensor_mor[subset[i]][subset[j]][subset[k]][subset[l]];
  if (!c.is_strict()) {
    std::vector<std::vector<std::vector<Vec>>> assoc(
        m, std::vector<std::vector<Vec>>(m, std::vector<Vec>(m)));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k)
          assoc[i][j][k] = (*c.associator)[subset[i]][subset[j]][subset[k]];
    r.associator = std::move(assoc);
  }
  if (c.unit && pos[c.unit->object] != c.n_objects())
    r.unit = UnitData{pos[c.unit->object], c.unit->adjoined};
  return r;
}

// Fully faithful inclusion of the full subcategory on `subset`.
inline FunctorPresentation inclusion_functor(std::shared_ptr<const CatPresentation> c,
                                             std::vector<Obj> subset,
                                             const std::string& name = "") {
  auto src = std::make_shared<CatPresentation>(
      restrict_full_subcategory(*c, subset, c->name + "_sub"));
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  FunctorPresentation F;
  F.source = src;
  F.target = c;
  F.name = name.empty() ? "incl_" + c->name : name;
  F.object_map = subset;
  std::size_t m = subset.size();
  F.hom_maps.assign(m, std::vector<Matrix>());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      F.hom_maps[i].push_back(Matrix::identity(c->field, src->hom_dim(i, j)));
  return F;
}

// g∘f as a presentation (both strict or with composable phi data).
inline FunctorPresentation compose_functors(const FunctorPresentation& g,
                                            const FunctorPresentation& f) {
  if (f.target->field != g.source->field)
    throw_error(Error::Kind::FieldMismatch, "functor composition field mismatch");
  FunctorPresentation h;
  h.source = f.source;
  h.target = g.target;
  h.name = g.name + "∘" + f.name;
  std::size_t n = f.source->n_objects();
  for (Obj x = 0; x < n; ++x) h.object_map.push_back(g.obj(f.obj(x)));
  h.hom_maps.assign(n, std::vector<Matrix>());
  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y)
      h.hom_maps[x].push_back(
          g.hom_maps[f.obj(x)][f.obj(y)].multiply(f.hom_maps[x][y]));
  if (!f.is_strict() || !g.is_strict())
    throw_error(Error::Kind::Unsupported,
                "composition of non-strict functor presentations is not supported");
  return h;
}

struct Unitalization {
  std::shared_ptr<const CatPresentation> category;  // C^u
  FunctorPresentation inclusion;                    // ι: C -> C^u
};

// Freely adjoin a unit object: one new object 1 with End(1) = k·id and
// zero hom spaces to and from everything else; 1⊗X = X⊗1 = X and
// id_1⊗f = f⊗id_1 = f.  End(1) is fixed to the minimal choice k·id.
inline CatPresentation unitalize_category(const CatPresentation& c) {
  if (!c.is_strict())
    throw_error(Error::Kind::Precondition,
                "unitalize_category requires a strict presentation");
  if (c.unit && c.unit->adjoined)
    throw_error(Error::Kind::Precondition,
                "category " + c.name + " already has a freely-adjoined unit");
  std::size_t n = c.n_objects();
  Obj u = n;

  CatPresentation r;
  r.field = c.field;
  r.name = c.name + "_u";
  r.objects = c.objects;
  std::string unit_name = "one";
  while (std::find(r.objects.begin(), r.objects.end(), unit_name) != r.objects.end())
    unit_name += "_";
  r.objects.push_back(unit_name);
  std::size_t m = n + 1;

  r.tensor_obj_table.assign(m, std::vector<Obj>(m));
  for (Obj x = 0; x < m; ++x)
    for (Obj y = 0; y < m; ++y) {
      if (x == u)
        r.tensor_obj_table[x][y] = y;
      else if (y == u)
        r.tensor_obj_table[x][y] = x;
      else
        r.tensor_obj_table[x][y] = c.tensor_obj(x, y);
    }

  r.hom.assign(m, std::vector<std::vector<std::string>>(m));
  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y) r.hom[x][y] = c.hom[x][y];
  std::string unit_id = "id_" + unit_name;
  r.hom[u][u] = {unit_id};

  r.identity_coords = c.identity_coords;
  r.identity_coords.push_back({Scalar::one(c.field)});

  r.compose.assign(
      m, std::vector<std::vector<StructTable>>(m, std::vector<StructTable>(m)));
  for (Obj x = 0; x < m; ++x)
    for (Obj y = 0; y < m; ++y)
      for (Obj z = 0; z < m; ++z) {
        std::size_t da = r.hom[y][z].size(), db = r.hom[x][y].size(),
                    dout = r.hom[x][z].size();
        if (x < n && y < n && z < n) {
          r.compose[x][y][z] = c.compose[x][y][z];
        } else {
          StructTable t = StructTable::zeros(c.field, da, db, dout);
          if (x == u && y == u && z == u) t.at(0, 0) = {Scalar::one(c.field)};
          r.compose[x][y][z] = std::move(t);
        }
      }

  r.tensor_mor.assign(
      m, std::vector<std::vector<std::vector<StructTable>>>(
             m, std::vector<std::vector<StructTable>>(m, std::vector<StructTable>(m))));
  for (Obj x = 0; x < m; ++x)
    for (Obj x2 = 0; x2 < m; ++x2)
      for (Obj y = 0; y < m; ++y)
        for (Obj y2 = 0; y2 < m; ++y2) {
          std::size_t da = r.hom[x][x2].size(), db = r.hom[y][y2].size();
          std::size_t dout =
              r.hom[r.tensor_obj_table[x][y]][r.tensor_obj_table[x2][y2]].size();
          if (x < n && x2 < n && y < n && y2 < n) {
            r.tensor_mor[x][x2][y][y2] = c.tensor_mor[x][x2][y][y2];
            continue;
          }
          StructTable t = StructTable::zeros(c.field, da, db, dout);
          if (x == u && x2 == u && da == 1) {
            // id_1 ⊗ f = f
            for (std::size_t g = 0; g < db; ++g) t.at(0, g) = vec_unit(c.field, dout, g);
          } else if (y == u && y2 == u && db == 1) {
            // f ⊗ id_1 = f
            for (std::size_t f = 0; f < da; ++f) t.at(f, 0) = vec_unit(c.field, dout, f);
          }
          r.tensor_mor[x][x2][y][y2] = std::move(t);
        }

  r.unit = UnitData{u, /*adjoined=*/true};
  return r;
}

inline Unitalization unitalize_with_inclusion(std::shared_ptr<const CatPresentation> c) {
  auto cu = std::make_shared<CatPresentation>(unitalize_category(*c));
  FunctorPresentation iota;
  iota.source = c;
  iota.target = cu;
  iota.name = "iota_" + c->name;
  std::size_t n = c->n_objects();
  for (Obj x = 0; x < n; ++x) iota.object_map.push_back(x);
  iota.hom_maps.assign(n, std::vector<Matrix>());
  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y)
      iota.hom_maps[x].push_back(Matrix::identity(c->field, c->hom_dim(x, y)));
  return Unitalization{cu, std::move(iota)};
}

}  // namespace dycoh

#endif
