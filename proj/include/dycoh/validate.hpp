#ifndef DYCOH_VALIDATE_HPP
#define DYCOH_VALIDATE_HPP

#include <string>
#include <vector>

#include "dycoh/presentation.hpp"

// Axiom checkers.  Every check exhausts basis tuples; by multilinearity
// of all structure maps this decides the axiom on the whole space.
// Violations are collected with concrete witnesses, in deterministic
// loop order, never thrown.

namespace dycoh {

struct Violation {
  std::string axiom;
  std::string witness;
};

struct ValidationReport {
  std::string subject;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

namespace detail {

inline std::string tuple_str(const CatPresentation& c, std::initializer_list<Obj> xs) {
  std::string s = "(";
  bool first = true;
  for (Obj x : xs) {
    if (!first) s += ", ";
    s += c.objects[x];
    first = false;
  }
  return s + ")";
}

inline std::string sides_str(const Vec& lhs, const Vec& rhs) {
  return " lhs=" + vec_str(lhs) + " rhs=" + vec_str(rhs);
}

}  // namespace detail

inline ValidationReport validate_category(const CatPresentation& c) {
  c.check_shapes();
  ValidationReport rep;
  rep.subject = "category " + c.name;
  std::size_t n = c.n_objects();
  auto violate = [&](const std::string& axiom, const std::string& witness) {
    rep.violations.push_back({axiom, witness});
  };

  // unit laws of composition
  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y)
      for (std::size_t fi = 0; fi < c.hom_dim(x, y); ++fi) {
        Vec f = vec_unit(c.field, c.hom_dim(x, y), fi);
        Vec left = c.compose_vec(x, x, y, c.id(x), f);
        if (left != f)
          violate("composition-identity",
                  "f∘id != f at " + detail::tuple_str(c, {x, y}) + " basis " +
                      c.hom[x][y][fi] + detail::sides_str(left, f));
        Vec right = c.compose_vec(x, y, y, f, c.id(y));
        if (right != f)
          violate("composition-identity",
                  "id∘f != f at " + detail::tuple_str(c, {x, y}) + " basis " +
                      c.hom[x][y][fi] + detail::sides_str(right, f));
      }

  // associativity of composition
  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y)
      for (Obj z = 0; z < n; ++z)
        for (Obj w = 0; w < n; ++w)
          for (std::size_t fi = 0; fi < c.hom_dim(x, y); ++fi)
            for (std::size_t gi = 0; gi < c.hom_dim(y, z); ++gi)
              for (std::size_t hi = 0; hi < c.hom_dim(z, w); ++hi) {
                Vec f = vec_unit(c.field, c.hom_dim(x, y), fi);
                Vec g = vec_unit(c.field, c.hom_dim(y, z), gi);
                Vec h = vec_unit(c.field, c.hom_dim(z, w), hi);
                Vec gf = c.compose_vec(x, y, z, f, g);
                Vec lhs = c.compose_vec(x, z, w, gf, h);
                Vec hg = c.compose_vec(y, z, w, g, h);
                Vec rhs = c.compose_vec(x, y, w, f, hg);
                if (lhs != rhs)
                  violate("composition-associativity",
                          "witness " + detail::tuple_str(c, {x, y, z, w}) + " basis (" +
                              c.hom[x][y][fi] + ", " + c.hom[y][z][gi] + ", " +
                              c.hom[z][w][hi] + ")" + detail::sides_str(lhs, rhs));
              }

  // bifunctor: identities tensor to identities
  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y) {
      Obj xy = c.tensor_obj(x, y);
      Vec t = c.tensor_vec(x, x, y, y, c.id(x), c.id(y));
      if (t != c.id(xy))
        violate("tensor-identity", "id⊗id != id at " + detail::tuple_str(c, {x, y}) +
                                       detail::sides_str(t, c.id(xy)));
    }

  // bifunctor: interchange law
  for (Obj x = 0; x < n; ++x)
    for (Obj x2 = 0; x2 < n; ++x2)
      for (Obj x3 = 0; x3 < n; ++x3)
        for (Obj y = 0; y < n; ++y)
          for (Obj y2 = 0; y2 < n; ++y2)
            for (Obj y3 = 0; y3 < n; ++y3) {
              std::size_t df = c.hom_dim(x, x2), df2 = c.hom_dim(x2, x3);
              std::size_t dg = c.hom_dim(y, y2), dg2 = c.hom_dim(y2, y3);
              if (!df || !df2 || !dg || !dg2) continue;
              for (std::size_t fi = 0; fi < df; ++fi)
                for (std::size_t f2i = 0; f2i < df2; ++f2i)
                  for (std::size_t gi = 0; gi < dg; ++gi)
                    for (std::size_t g2i = 0; g2i < dg2; ++g2i) {
                      Vec f = vec_unit(c.field, df, fi);
                      Vec f2 = vec_unit(c.field, df2, f2i);
                      Vec g = vec_unit(c.field, dg, gi);
                      Vec g2 = vec_unit(c.field, dg2, g2i);
                      Vec ff = c.compose_vec(x, x2, x3, f, f2);
                      Vec gg = c.compose_vec(y, y2, y3, g, g2);
                      Vec lhs = c.tensor_vec(x, x3, y, y3, ff, gg);
                      Vec fg = c.tensor_vec(x, x2, y, y2, f, g);
                      Vec f2g2 = c.tensor_vec(x2, x3, y2, y3, f2, g2);
                      Vec rhs = c.compose_vec(c.tensor_obj(x, y), c.tensor_obj(x2, y2),
                                              c.tensor_obj(x3, y3), fg, f2g2);
                      if (lhs != rhs)
                        violate("interchange",
                                "witness " + detail::tuple_str(c, {x, x2, x3, y, y2, y3}) +
                                    " basis (" + c.hom[x][x2][fi] + ", " + c.hom[x2][x3][f2i] +
                                    ", " + c.hom[y][y2][gi] + ", " + c.hom[y2][y3][g2i] + ")" +
                                    detail::sides_str(lhs, rhs));
                    }
            }

  if (c.is_strict()) {
    // object tensor associativity; with a = id the pentagon is vacuous
    for (Obj x = 0; x < n; ++x)
      for (Obj y = 0; y < n; ++y)
        for (Obj z = 0; z < n; ++z) {
          Obj lhs = c.tensor_obj(c.tensor_obj(x, y), z);
          Obj rhs = c.tensor_obj(x, c.tensor_obj(y, z));
          if (lhs != rhs)
            violate("tensor-associativity",
                    "witness " + detail::tuple_str(c, {x, y, z}) + " (X⊗Y)⊗Z=" +
                        c.objects[lhs] + " X⊗(Y⊗Z)=" + c.objects[rhs]);
        }
    // naturality of the identity associator = tensor associativity on morphisms
    for (Obj x = 0; x < n; ++x)
      for (Obj x2 = 0; x2 < n; ++x2)
        for (Obj y = 0; y < n; ++y)
          for (Obj y2 = 0; y2 < n; ++y2)
            for (Obj z = 0; z < n; ++z)
              for (Obj z2 = 0; z2 < n; ++z2) {
                std::size_t df = c.hom_dim(x, x2), dg = c.hom_dim(y, y2),
                            dh = c.hom_dim(z, z2);
                if (!df || !dg || !dh) continue;
                if (c.tensor_obj(c.tensor_obj(x, y), z) !=
                        c.tensor_obj(x, c.tensor_obj(y, z)) ||
                    c.tensor_obj(c.tensor_obj(x2, y2), z2) !=
                        c.tensor_obj(x2, c.tensor_obj(y2, z2)))
                  continue;  // already reported above
                for (std::size_t fi = 0; fi < df; ++fi)
                  for (std::size_t gi = 0; gi < dg; ++gi)
                    for (std::size_t hi = 0; hi < dh; ++hi) {
                      Vec f = vec_unit(c.field, df, fi);
                      Vec g = vec_unit(c.field, dg, gi);
                      Vec h = vec_unit(c.field, dh, hi);
                      Vec fg = c.tensor_vec(x, x2, y, y2, f, g);
                      Vec lhs = c.tensor_vec(c.tensor_obj(x, y), c.tensor_obj(x2, y2), z,
                                             z2, fg, h);
                      Vec gh = c.tensor_vec(y, y2, z, z2, g, h);
                      Vec rhs = c.tensor_vec(x, x2, c.tensor_obj(y, z),
                                             c.tensor_obj(y2, z2), f, gh);
                      if (lhs != rhs)
                        violate("tensor-associativity-morphisms",
                                "witness " + detail::tuple_str(c, {x, y, z}) + "->" +
                                    detail::tuple_str(c, {x2, y2, z2}) + " basis (" +
                                    c.hom[x][x2][fi] + ", " + c.hom[y][y2][gi] + ", " +
                                    c.hom[z][z2][hi] + ")" + detail::sides_str(lhs, rhs));
                    }
              }
  } else {
    const auto& assoc = *c.associator;
    // invertibility
    for (Obj x = 0; x < n; ++x)
      for (Obj y = 0; y < n; ++y)
        for (Obj z = 0; z < n; ++z) {
          Obj src = c.tensor_obj(x, c.tensor_obj(y, z));
          Obj dst = c.tensor_obj(c.tensor_obj(x, y), z);
          if (!is_invertible_mor(c, src, dst, assoc[x][y][z]))
            violate("associator-invertibility",
                    "a not invertible at " + detail::tuple_str(c, {x, y, z}));
        }
    // naturality in all three slots at once (basis morphisms, identities elsewhere)
    for (Obj x = 0; x < n; ++x)
      for (Obj y = 0; y < n; ++y)
        for (Obj z = 0; z < n; ++z)
          for (int slot = 0; slot < 3; ++slot) {
            Obj s[3] = {x, y, z};
            for (Obj target = 0; target < n; ++target) {
              Obj t[3] = {x, y, z};
              t[slot] = target;
              std::size_t dm = c.hom_dim(s[slot], target);
              for (std::size_t mi = 0; mi < dm; ++mi) {
                Mor f[3];
                for (int k = 0; k < 3; ++k)
                  f[k] = Mor{s[k], t[k],
                             k == slot ? vec_unit(c.field, dm, mi) : c.id(s[k])};
                // left-parenthesized and right-parenthesized tensor of (f0,f1,f2)
                Mor right = tensor_fold(
                    c, std::vector<Mor>{f[0], tensor_fold(c, std::vector<Mor>{f[1], f[2]})});
                Mor left = tensor_fold(
                    c, std::vector<Mor>{tensor_fold(c, std::vector<Mor>{f[0], f[1]}), f[2]});
                Vec lhs = c.compose_vec(right.src, right.tgt,
                                        c.tensor_obj(c.tensor_obj(t[0], t[1]), t[2]),
                                        right.coords, assoc[t[0]][t[1]][t[2]]);
                Vec rhs = c.compose_vec(right.src, left.src, left.tgt,
                                        assoc[s[0]][s[1]][s[2]], left.coords);
                if (lhs != rhs)
                  violate("associator-naturality",
                          "slot " + std::to_string(slot) + " witness " +
                              detail::tuple_str(c, {x, y, z}) + "->" +
                              detail::tuple_str(c, {t[0], t[1], t[2]}) +
                              detail::sides_str(lhs, rhs));
              }
            }
          }
    // pentagon
    for (Obj x = 0; x < n; ++x)
      for (Obj y = 0; y < n; ++y)
        for (Obj z = 0; z < n; ++z)
          for (Obj w = 0; w < n; ++w) {
            Obj yz = c.tensor_obj(y, z), zw = c.tensor_obj(z, w);
            Obj xy = c.tensor_obj(x, y);
            Obj src = c.tensor_obj(x, c.tensor_obj(y, zw));
            Obj mid1 = c.tensor_obj(x, c.tensor_obj(yz, w));
            Obj mid2 = c.tensor_obj(c.tensor_obj(x, yz), w);
            Obj dst = c.tensor_obj(c.tensor_obj(xy, z), w);
            Obj mid3 = c.tensor_obj(c.tensor_obj(x, y), zw);
            // long side: (a_{xyz}⊗id_w) ∘ a_{x,y⊗z,w} ∘ (id_x⊗a_{yzw})
            Vec step1 = c.tensor_vec(x, x, c.tensor_obj(y, zw), c.tensor_obj(yz, w),
                                     c.id(x), assoc[y][z][w]);
            Vec step2 = assoc[x][yz][w];
            Vec step3 = c.tensor_vec(c.tensor_obj(x, yz), c.tensor_obj(xy, z), w, w,
                                     assoc[x][y][z], c.id(w));
            Vec lhs = c.compose_vec(src, mid1, mid2, step1, step2);
            lhs = c.compose_vec(src, mid2, dst, lhs, step3);
            // short side: a_{x⊗y,z,w} ∘ a_{x,y,z⊗w}
            Vec rhs = c.compose_vec(src, mid3, dst, assoc[x][y][zw], assoc[xy][z][w]);
            if (lhs != rhs)
              violate("pentagon", "witness " + detail::tuple_str(c, {x, y, z, w}) +
                                      detail::sides_str(lhs, rhs));
          }
  }

  if (c.unit) {
    Obj u = c.unit->object;
    if (!c.is_strict())
      violate("unit-strictness", "unit markers are supported on strict presentations only");
    for (Obj x = 0; x < n; ++x) {
      if (c.tensor_obj(u, x) != x || c.tensor_obj(x, u) != x)
        violate("unit-object", "1⊗X or X⊗1 differs from X at X=" + c.objects[x]);
    }
    for (Obj x = 0; x < n; ++x)
      for (Obj y = 0; y < n; ++y)
        for (std::size_t fi = 0; fi < c.hom_dim(x, y); ++fi) {
          if (c.tensor_obj(u, x) != x || c.tensor_obj(u, y) != y ||
              c.tensor_obj(x, u) != x || c.tensor_obj(y, u) != y)
            continue;
          Vec f = vec_unit(c.field, c.hom_dim(x, y), fi);
          Vec lf = c.tensor_vec(u, u, x, y, c.id(u), f);
          Vec rf = c.tensor_vec(x, y, u, u, f, c.id(u));
          if (lf != f)
            violate("unit-morphisms", "id_1⊗f != f at basis " + c.hom[x][y][fi] +
                                          detail::sides_str(lf, f));
          if (rf != f)
            violate("unit-morphisms", "f⊗id_1 != f at basis " + c.hom[x][y][fi] +
                                          detail::sides_str(rf, f));
        }
  }

  return rep;
}

inline ValidationReport validate_functor(const FunctorPresentation& F) {
  if (F.source->field != F.target->field)
    throw_error(Error::Kind::FieldMismatch,
                "functor " + F.name + ": source and target fields differ");
  F.check_shapes();
  const CatPresentation& C = *F.source;
  const CatPresentation& D = *F.target;
  ValidationReport rep;
  rep.subject = "functor " + F.name;
  std::size_t n = C.n_objects();
  auto violate = [&](const std::string& axiom, const std::string& witness) {
    rep.violations.push_back({axiom, witness});
  };

  for (Obj x = 0; x < n; ++x) {
    Vec fid = F.apply(x, x, C.id(x));
    if (fid != D.id(F.obj(x)))
      violate("functor-identity", "F(id) != id at X=" + C.objects[x] +
                                      detail::sides_str(fid, D.id(F.obj(x))));
  }

  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y)
      for (Obj z = 0; z < n; ++z)
        for (std::size_t fi = 0; fi < C.hom_dim(x, y); ++fi)
          for (std::size_t gi = 0; gi < C.hom_dim(y, z); ++gi) {
            Vec f = vec_unit(C.field, C.hom_dim(x, y), fi);
            Vec g = vec_unit(C.field, C.hom_dim(y, z), gi);
            Vec lhs = F.apply(x, z, C.compose_vec(x, y, z, f, g));
            Vec rhs = D.compose_vec(F.obj(x), F.obj(y), F.obj(z), F.apply(x, y, f),
                                    F.apply(y, z, g));
            if (lhs != rhs)
              violate("functor-composition",
                      "F(g∘f) != F(g)∘F(f) at basis (" + C.hom[x][y][fi] + ", " +
                          C.hom[y][z][gi] + ")" + detail::sides_str(lhs, rhs));
          }

  if (F.is_strict()) {
    for (Obj x = 0; x < n; ++x)
      for (Obj y = 0; y < n; ++y) {
        Obj lhs = F.obj(C.tensor_obj(x, y));
        Obj rhs = D.tensor_obj(F.obj(x), F.obj(y));
        if (lhs != rhs)
          violate("strict-tensor-objects",
                  "F(X⊗Y) != FX⊗FY at " + detail::tuple_str(C, {x, y}) + ": " +
                      D.objects[lhs] + " vs " + D.objects[rhs]);
      }
    for (Obj x = 0; x < n; ++x)
      for (Obj x2 = 0; x2 < n; ++x2)
        for (Obj y = 0; y < n; ++y)
          for (Obj y2 = 0; y2 < n; ++y2) {
            std::size_t df = C.hom_dim(x, x2), dg = C.hom_dim(y, y2);
            if (!df || !dg) continue;
            if (F.obj(C.tensor_obj(x, y)) != D.tensor_obj(F.obj(x), F.obj(y)) ||
                F.obj(C.tensor_obj(x2, y2)) != D.tensor_obj(F.obj(x2), F.obj(y2)))
              continue;
            for (std::size_t fi = 0; fi < df; ++fi)
              for (std::size_t gi = 0; gi < dg; ++gi) {
                Vec f = vec_unit(C.field, df, fi);
                Vec g = vec_unit(C.field, dg, gi);
                Vec lhs = F.apply(C.tensor_obj(x, y), C.tensor_obj(x2, y2),
                                  C.tensor_vec(x, x2, y, y2, f, g));
                Vec rhs = D.tensor_vec(F.obj(x), F.obj(x2), F.obj(y), F.obj(y2),
                                       F.apply(x, x2, f), F.apply(y, y2, g));
                if (lhs != rhs)
                  violate("strict-tensor-morphisms",
                          "F(f⊗g) != Ff⊗Fg at basis (" + C.hom[x][x2][fi] + ", " +
                              C.hom[y][y2][gi] + ")" + detail::sides_str(lhs, rhs));
              }
          }
  } else {
    const auto& phi = *F.phi;
    for (Obj x = 0; x < n; ++x)
      for (Obj y = 0; y < n; ++y) {
        Obj src = D.tensor_obj(F.obj(x), F.obj(y));
        Obj dst = F.obj(C.tensor_obj(x, y));
        if (!is_invertible_mor(D, src, dst, phi[x][y]))
          violate("phi-invertibility", "Φ not invertible at " + detail::tuple_str(C, {x, y}));
      }
    // naturality of Φ
    for (Obj x = 0; x < n; ++x)
      for (Obj x2 = 0; x2 < n; ++x2)
        for (Obj y = 0; y < n; ++y)
          for (Obj y2 = 0; y2 < n; ++y2) {
            std::size_t df = C.hom_dim(x, x2), dg = C.hom_dim(y, y2);
            if (!df || !dg) continue;
            for (std::size_t fi = 0; fi < df; ++fi)
              for (std::size_t gi = 0; gi < dg; ++gi) {
                Vec f = vec_unit(C.field, df, fi);
                Vec g = vec_unit(C.field, dg, gi);
                Obj sFF = D.tensor_obj(F.obj(x), F.obj(y));
                Obj tFF = D.tensor_obj(F.obj(x2), F.obj(y2));
                Vec FfFg = D.tensor_vec(F.obj(x), F.obj(x2), F.obj(y), F.obj(y2),
                                        F.apply(x, x2, f), F.apply(y, y2, g));
                Vec lhs = D.compose_vec(sFF, tFF, F.obj(C.tensor_obj(x2, y2)), FfFg,
                                        phi[x2][y2]);
                Vec Ffg = F.apply(C.tensor_obj(x, y), C.tensor_obj(x2, y2),
                                  C.tensor_vec(x, x2, y, y2, f, g));
                Vec rhs = D.compose_vec(sFF, F.obj(C.tensor_obj(x, y)),
                                        F.obj(C.tensor_obj(x2, y2)), phi[x][y], Ffg);
                if (lhs != rhs)
                  violate("phi-naturality",
                          "witness basis (" + C.hom[x][x2][fi] + ", " + C.hom[y][y2][gi] +
                              ")" + detail::sides_str(lhs, rhs));
              }
          }
    // hexagon axiom relating Φ and the two associators
    auto assoc_src = [&](Obj x, Obj y, Obj z) -> Mor {
      Obj s = C.tensor_obj(x, C.tensor_obj(y, z));
      Obj t = C.tensor_obj(C.tensor_obj(x, y), z);
      if (C.is_strict()) return Mor{s, t, C.id(s)};
      return Mor{s, t, (*C.associator)[x][y][z]};
    };
    auto assoc_tgt = [&](Obj x, Obj y, Obj z) -> Mor {
      Obj s = D.tensor_obj(x, D.tensor_obj(y, z));
      Obj t = D.tensor_obj(D.tensor_obj(x, y), z);
      if (D.is_strict()) return Mor{s, t, D.id(s)};
      return Mor{s, t, (*D.associator)[x][y][z]};
    };
    for (Obj x = 0; x < n; ++x)
      for (Obj y = 0; y < n; ++y)
        for (Obj z = 0; z < n; ++z) {
          Obj fx = F.obj(x), fy = F.obj(y), fz = F.obj(z);
          Obj yz = C.tensor_obj(y, z), xy = C.tensor_obj(x, y);
          // F(a) ∘ Φ_{x,y⊗z} ∘ (id⊗Φ_{yz}) : Fx⊗(Fy⊗Fz) -> F((x⊗y)⊗z)
          Mor a_src = assoc_src(x, y, z);
          Obj start = D.tensor_obj(fx, D.tensor_obj(fy, fz));
          Vec s1 = D.tensor_vec(fx, fx, D.tensor_obj(fy, fz), F.obj(yz), D.id(fx),
                                phi[y][z]);
          Obj after1 = D.tensor_obj(fx, F.obj(yz));
          Vec s2 = phi[x][yz];
          Obj after2 = F.obj(C.tensor_obj(x, yz));
          Vec Fa = F.apply(a_src.src, a_src.tgt, a_src.coords);
          Vec lhs = D.compose_vec(start, after1, after2, s1, s2);
          lhs = D.compose_vec(start, after2, F.obj(a_src.tgt), lhs, Fa);
          // Φ_{x⊗y,z} ∘ (Φ_{xy}⊗id) ∘ a_{Fx,Fy,Fz}
          Mor aD = assoc_tgt(fx, fy, fz);
          Vec t1 = D.tensor_vec(D.tensor_obj(fx, fy), F.obj(xy), fz, fz, phi[x][y],
                                D.id(fz));
          Obj mid = D.tensor_obj(D.tensor_obj(fx, fy), fz);
          Obj after_t1 = D.tensor_obj(F.obj(xy), fz);
          Vec rhs = D.compose_vec(start, mid, after_t1, aD.coords, t1);
          rhs = D.compose_vec(start, after_t1, F.obj(C.tensor_obj(xy, z)), rhs,
                              phi[xy][z]);
          if (lhs != rhs)
            violate("hexagon", "witness " + detail::tuple_str(C, {x, y, z}) +
                                   detail::sides_str(lhs, rhs));
        }
  }

  return rep;
}

}  // namespace dycoh

#endif
