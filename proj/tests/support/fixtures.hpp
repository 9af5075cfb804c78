#ifndef DYCOH_TESTS_FIXTURES_HPP
#define DYCOH_TESTS_FIXTURES_HPP

#include <memory>
#include <string>
#include <vector>

#include "dycoh/construct.hpp"
#include "dycoh/presentation.hpp"

// Desk-scale fixture categories used across the suites:
//   - Vec_G for G in {Z/2, Z/3, Z/2 x Z/2}
//   - the null-semigroup category on {a, b} (all products b)
//   - the one-object category with End = k[eps]/(eps^2)
//   - the one-object category with End = k x k (two idempotents)

namespace dycoh::test {

inline std::vector<std::vector<Obj>> z2_table() { return {{0, 1}, {1, 0}}; }

inline std::vector<std::vector<Obj>> z3_table() {
  return {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
}

inline std::vector<std::vector<Obj>> z2z2_table() {
  // elements e, a, b, c with a^2 = b^2 = e, ab = c
  return {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
}

inline std::shared_ptr<const CatPresentation> vec_z2(const FieldSpec& f) {
  return std::make_shared<CatPresentation>(
      make_group_category(f, {"e", "g"}, z2_table(), "VecZ2"));
}

inline std::shared_ptr<const CatPresentation> vec_z3(const FieldSpec& f) {
  return std::make_shared<CatPresentation>(
      make_group_category(f, {"e", "g", "h"}, z3_table(), "VecZ3"));
}

inline std::shared_ptr<const CatPresentation> vec_z2z2(const FieldSpec& f) {
  return std::make_shared<CatPresentation>(
      make_group_category(f, {"e", "a", "b", "c"}, z2z2_table(), "VecZ2Z2"));
}

// Scalar hom spaces on the diagonal, ⊗ given by an arbitrary
// (not necessarily group) object table.
inline CatPresentation scalar_semigroup_category(const FieldSpec& field,
                                                 const std::vector<std::string>& names,
                                                 const std::vector<std::vector<Obj>>& table,
                                                 const std::string& cat_name) {
  std::size_t n = names.size();
  CatPresentation c;
  c.field = field;
  c.name = cat_name;
  c.objects = names;
  c.tensor_obj_table = table;
  c.hom.assign(n, std::vector<std::vector<std::string>>(n));
  for (Obj x = 0; x < n; ++x) c.hom[x][x] = {"id_" + names[x]};
  for (Obj x = 0; x < n; ++x) c.identity_coords.push_back({Scalar::one(field)});
  c.compose.assign(n,
                   std::vector<std::vector<StructTable>>(n, std::vector<StructTable>(n)));
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
  return c;
}

inline std::shared_ptr<const CatPresentation> null_semigroup(const FieldSpec& f) {
  return std::make_shared<CatPresentation>(
      scalar_semigroup_category(f, {"a", "b"}, {{1, 1}, {1, 1}}, "NullSg"));
}

// One object X with X⊗X = X and End(X) a commutative unital algebra;
// both ∘ and ⊗ on morphisms are the algebra product.
inline CatPresentation one_object_category(const FieldSpec& field,
                                           const std::vector<std::string>& basis,
                                           const std::vector<std::vector<Vec>>& mul,
                                           const Vec& unit_coords,
                                           const std::string& cat_name) {
  std::size_t d = basis.size();
  CatPresentation c;
  c.field = field;
  c.name = cat_name;
  c.objects = {"x"};
  c.tensor_obj_table = {{0}};
  c.hom.assign(1, std::vector<std::vector<std::string>>(1));
  c.hom[0][0] = basis;
  c.identity_coords = {unit_coords};
  StructTable t = StructTable::zeros(field, d, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) t.at(i, j) = mul[i][j];
  c.compose.assign(1, {{t}});
  c.tensor_mor.assign(1, {{{{t}}}});
  return c;
}

inline std::shared_ptr<const CatPresentation> epsilon_line(const FieldSpec& f) {
  Scalar one = Scalar::one(f), zero = Scalar::zero(f);
  std::vector<std::vector<Vec>> mul = {
      {{one, zero}, {zero, one}},   // id*id = id, id*eps = eps
      {{zero, one}, {zero, zero}},  // eps*id = eps, eps*eps = 0
  };
  return std::make_shared<CatPresentation>(
      one_object_category(f, {"id_x", "eps"}, mul, {one, zero}, "EpsLine"));
}

inline std::shared_ptr<const CatPresentation> two_idem(const FieldSpec& f) {
  Scalar one = Scalar::one(f), zero = Scalar::zero(f);
  std::vector<std::vector<Vec>> mul = {
      {{one, zero}, {zero, zero}},  // u*u = u, u*v = 0
      {{zero, zero}, {zero, one}},  // v*u = 0, v*v = v
  };
  return std::make_shared<CatPresentation>(
      one_object_category(f, {"u", "v"}, mul, {one, one}, "TwoIdem"));
}

}  // namespace dycoh::test

#endif
