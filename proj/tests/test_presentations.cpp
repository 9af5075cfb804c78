#include <catch2/catch_amalgamated.hpp>

#include "dycoh/construct.hpp"
#include "dycoh/validate.hpp"
#include "support/fixtures.hpp"

using namespace dycoh;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime_field(2);
const FieldSpec F3 = FieldSpec::prime_field(3);

bool has_axiom(const ValidationReport& r, const std::string& axiom) {
  for (const auto& v : r.violations)
    if (v.axiom == axiom) return true;
  return false;
}
}  // namespace

TEST_CASE("group categories validate for every fixture group and field") {
  for (const FieldSpec& f : {Q, F2, F3}) {
    CHECK(validate_category(*test::vec_z2(f)).ok());
    CHECK(validate_category(*test::vec_z3(f)).ok());
    CHECK(validate_category(*test::vec_z2z2(f)).ok());
  }
}

TEST_CASE("non-group scalar fixtures validate") {
  CHECK(validate_category(*test::null_semigroup(Q)).ok());
  CHECK(validate_category(*test::epsilon_line(Q)).ok());
  CHECK(validate_category(*test::two_idem(Q)).ok());
  CHECK(validate_category(*test::epsilon_line(F2)).ok());
}

TEST_CASE("non-associative tensor table is reported with the oracle witness") {
  // a*a = b, a*b = a, b*a = b, b*b = b
  std::vector<std::vector<Obj>> table = {{1, 0}, {1, 1}};
  // oracle: recompute both associations directly
  auto mul = [&](Obj x, Obj y) { return table[x][y]; };
  REQUIRE(mul(mul(0, 0), 0) != mul(0, mul(0, 0)));
  auto c = test::scalar_semigroup_category(Q, {"a", "b"}, table, "Broken");
  auto rep = validate_category(c);
  REQUIRE_FALSE(rep.ok());
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.axiom == "tensor-associativity" && v.witness.find("(a, a, a)") != std::string::npos)
      found = true;
  CHECK(found);
}

TEST_CASE("broken interchange is caught") {
  auto eps = *test::epsilon_line(Q);
  // corrupt eps⊗eps: set it to id instead of 0
  eps.tensor_mor[0][0][0][0].at(1, 1) = {Scalar::one(Q), Scalar::zero(Q)};
  // oracle: (id∘eps)⊗(eps∘id) vs (id⊗eps)∘(eps⊗id), evaluated from the tables
  Vec e = vec_unit(Q, 2, 1);
  Vec lhs = eps.tensor_vec(0, 0, 0, 0, e, e);                      // corrupted: id
  Vec rhs = eps.compose_vec(0, 0, 0, eps.tensor_vec(0, 0, 0, 0, e, eps.id(0)),
                            eps.tensor_vec(0, 0, 0, 0, eps.id(0), e));  // eps∘eps = 0
  REQUIRE(lhs != rhs);
  auto rep = validate_category(eps);
  CHECK(has_axiom(rep, "interchange"));
}

TEST_CASE("explicit identity associator validates and a scaled one fails the pentagon") {
  auto base = *test::vec_z2(Q);
  std::size_t n = base.n_objects();
  std::vector<std::vector<std::vector<Vec>>> assoc(
      n, std::vector<std::vector<Vec>>(n, std::vector<Vec>(n)));
  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y)
      for (Obj z = 0; z < n; ++z) assoc[x][y][z] = {Scalar::one(Q)};
  base.associator = assoc;
  CHECK(validate_category(base).ok());

  base.associator.value()[1][1][1] = {Scalar::from_int(Q, 2)};
  auto rep = validate_category(base);
  CHECK(has_axiom(rep, "pentagon"));
}

TEST_CASE("group table checks") {
  CHECK_THROWS_WITH(make_group_category(Q, {"a", "b"}, {{1, 0}, {1, 1}}),
                    Catch::Matchers::ContainsSubstring("not associative"));
  CHECK_THROWS_WITH(make_group_category(Q, {"a", "b"}, {{1, 1}, {1, 1}}),
                    Catch::Matchers::ContainsSubstring("no identity"));
  // monoid without inverses: {e, z} with z*z = z
  CHECK_THROWS_WITH(make_group_category(Q, {"e", "z"}, {{0, 1}, {1, 1}}),
                    Catch::Matchers::ContainsSubstring("no inverse"));
}

TEST_CASE("identity functor and inclusion into the unitalization validate") {
  for (const FieldSpec& f : {Q, F2}) {
    auto c = test::vec_z2(f);
    CHECK(validate_functor(identity_functor(c)).ok());
    auto uni = unitalize_with_inclusion(c);
    CHECK(validate_category(*uni.category).ok());
    CHECK(validate_functor(uni.inclusion).ok());
  }
}

TEST_CASE("scaled hom map breaks composition preservation") {
  auto c = test::vec_z2(Q);
  auto F = identity_functor(c);
  Matrix two(Q, 1, 1);
  two.at(0, 0) = Scalar::from_int(Q, 2);
  F.hom_maps[1][1] = two;
  // oracle: F(id_g ∘ id_g) = 2·id but F(id_g)∘F(id_g) = 4·id
  Vec idg = vec_unit(Q, 1, 0);
  Vec lhs = F.apply(1, 1, c->compose_vec(1, 1, 1, idg, idg));
  Vec rhs = c->compose_vec(1, 1, 1, F.apply(1, 1, idg), F.apply(1, 1, idg));
  REQUIRE(lhs != rhs);
  auto rep = validate_functor(F);
  CHECK(has_axiom(rep, "functor-composition"));
}

TEST_CASE("unitalization by example") {
  SECTION("Vec_Z2") {
    auto cu = unitalize_category(*test::vec_z2(F2));
    REQUIRE(cu.n_objects() == 3);
    CHECK(cu.objects[2] == "one");
    REQUIRE(cu.unit.has_value());
    CHECK(cu.unit->adjoined);
    CHECK(cu.hom_dim(2, 0) == 0);
    CHECK(cu.hom_dim(0, 2) == 0);
    CHECK(cu.hom_dim(2, 2) == 1);
    CHECK(cu.tensor_obj(2, 1) == 1);
    CHECK(cu.tensor_obj(1, 2) == 1);
    CHECK(validate_category(cu).ok());
  }
  SECTION("epsilon line keeps its End algebra") {
    auto cu = unitalize_category(*test::epsilon_line(Q));
    REQUIRE(cu.n_objects() == 2);
    CHECK(cu.hom_dim(0, 0) == 2);
    CHECK(cu.hom_dim(0, 1) == 0);
    CHECK(cu.hom_dim(1, 0) == 0);
    // id_1 ⊗ eps = eps
    Vec eps = vec_unit(Q, 2, 1);
    CHECK(cu.tensor_vec(1, 1, 0, 0, cu.id(1), eps) == eps);
    CHECK(validate_category(cu).ok());
  }
  SECTION("null semigroup gains a unit row and column") {
    auto cu = unitalize_category(*test::null_semigroup(Q));
    REQUIRE(cu.n_objects() == 3);
    CHECK(cu.tensor_obj(2, 0) == 0);
    CHECK(cu.tensor_obj(0, 2) == 0);
    CHECK(cu.tensor_obj(0, 1) == 1);
    CHECK(validate_category(cu).ok());
  }
  SECTION("unitalization validates whenever the input does") {
    for (const FieldSpec& f : {Q, F2, F3}) {
      for (auto c : {test::vec_z2(f), test::vec_z3(f), test::vec_z2z2(f),
                     test::null_semigroup(f), test::epsilon_line(f), test::two_idem(f)}) {
        REQUIRE(validate_category(*c).ok());
        CHECK(validate_category(unitalize_category(*c)).ok());
      }
    }
  }
  SECTION("double unitalization is refused") {
    auto cu = unitalize_category(*test::vec_z2(F2));
    CHECK_THROWS_WITH(unitalize_category(cu),
                      Catch::Matchers::ContainsSubstring("freely-adjoined unit"));
  }
}

TEST_CASE("inclusion functors") {
  auto c = test::vec_z2(F2);
  auto uni = unitalize_with_inclusion(c);

  SECTION("canonical iota has identity hom maps on shared hom spaces") {
    auto inc = inclusion_functor(uni.category, {0, 1});
    CHECK(validate_functor(inc).ok());
    for (Obj x = 0; x < 2; ++x)
      for (Obj y = 0; y < 2; ++y)
        CHECK(inc.hom_maps[x][y] == Matrix::identity(F2, c->hom_dim(x, y)));
    CHECK(inc.source->objects == c->objects);
  }
  SECTION("full subset gives the identity on objects") {
    auto inc = inclusion_functor(c, {0, 1});
    CHECK(inc.object_map == std::vector<Obj>{0, 1});
    CHECK(validate_functor(inc).ok());
  }
  SECTION("non-closed subset errors with witness pair") {
    CHECK_THROWS_WITH(inclusion_functor(c, {1}),
                      Catch::Matchers::ContainsSubstring("g⊗g"));
  }
}
