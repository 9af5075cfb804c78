#ifndef DYCOH_HOCHSCHILD_HPP
#define DYCOH_HOCHSCHILD_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dycoh/dy.hpp"  // TupleIndex, CohomologyEntry scaffolding
#include "dycoh/linalg.hpp"
#include "dycoh/validate.hpp"

// Hochschild complex of a finite-dimensional, possibly non-unital
// algebra with bimodule coefficients.  Cochains are multilinear value
// tables on basis tuples.  Includes currying, the constructive
// normalization of cocycles at unit arguments, algebra unitalization
// and the ι*/π* pullbacks.

namespace dycoh {

struct AlgebraPresentation {
  FieldSpec field;
  std::string name;
  std::vector<std::string> basis;
  std::vector<std::vector<Vec>> mul;  // mul[i][j] = coordinates of b_i b_j
  std::optional<Vec> unit_coords;

  std::size_t dim() const { return basis.size(); }

  Vec mul_vec(const Vec& a, const Vec& b) const {
    Vec out = vec_zero(field, dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (b[j].is_zero()) continue;
        Scalar c = a[i] * b[j];
        for (std::size_t k = 0; k < dim(); ++k)
          if (!mul[i][j][k].is_zero()) out[k] = out[k] + c * mul[i][j][k];
      }
    }
    return out;
  }

  void check_shapes() const {
    auto fail = [&](const std::string& t) {
      throw_error(Error::Kind::Structure, "algebra " + name + ": malformed " + t);
    };
    if (mul.size() != dim()) fail("mul");
    for (const auto& row : mul) {
      if (row.size() != dim()) fail("mul");
      for (const Vec& cell : row)
        if (cell.size() != dim()) fail("mul");
    }
    if (unit_coords && unit_coords->size() != dim()) fail("unit");
  }
};

struct BimodulePresentation {
  std::shared_ptr<const AlgebraPresentation> algebra;
  std::string name;
  std::vector<std::string> basis;
  std::vector<std::vector<Vec>> left_action;   // [a][m] -> M coords
  std::vector<std::vector<Vec>> right_action;  // [m][a] -> M coords

  std::size_t dim() const { return basis.size(); }
  const FieldSpec& field() const { return algebra->field; }

  Vec left_vec(const Vec& a, const Vec& m) const {
    Vec out = vec_zero(field(), dim());
    for (std::size_t i = 0; i < algebra->dim(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (m[j].is_zero()) continue;
        Scalar c = a[i] * m[j];
        for (std::size_t k = 0; k < dim(); ++k)
          if (!left_action[i][j][k].is_zero()) out[k] = out[k] + c * left_action[i][j][k];
      }
    }
    return out;
  }

  Vec right_vec(const Vec& m, const Vec& a) const {
    Vec out = vec_zero(field(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      if (m[j].is_zero()) continue;
      for (std::size_t i = 0; i < algebra->dim(); ++i) {
        if (a[i].is_zero()) continue;
        Scalar c = m[j] * a[i];
        for (std::size_t k = 0; k < dim(); ++k)
          if (!right_action[j][i][k].is_zero())
            out[k] = out[k] + c * right_action[j][i][k];
      }
    }
    return out;
  }

  void check_shapes() const {
    auto fail = [&](const std::string& t) {
      throw_error(Error::Kind::Structure, "bimodule " + name + ": malformed " + t);
    };
    if (left_action.size() != algebra->dim()) fail("left");
    for (const auto& row : left_action) {
      if (row.size() != dim()) fail("left");
      for (const Vec& cell : row)
        if (cell.size() != dim()) fail("left");
    }
    if (right_action.size() != dim()) fail("right");
    for (const auto& row : right_action) {
      if (row.size() != algebra->dim()) fail("right");
      for (const Vec& cell : row)
        if (cell.size() != dim()) fail("right");
    }
  }
};

struct HochCochain {
  std::shared_ptr<const BimodulePresentation> module;
  int degree = 0;                 // n >= 0; degree 0 is a single M element
  std::vector<Vec> values;        // basis-tuple rank -> M coordinates

  bool is_zero() const {
    for (const Vec& v : values)
      if (!vec_is_zero(v)) return false;
    return true;
  }

  bool operator==(const HochCochain& o) const {
    return degree == o.degree && values == o.values;
  }
};

inline ValidationReport validate_algebra(const AlgebraPresentation& a) {
  a.check_shapes();
  ValidationReport rep;
  rep.subject = "algebra " + a.name;
  std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec lhs = a.mul_vec(a.mul[i][j], vec_unit(a.field, d, k));
        Vec rhs = a.mul_vec(vec_unit(a.field, d, i), a.mul[j][k]);
        if (lhs != rhs)
          rep.violations.push_back(
              {"algebra-associativity", "witness (" + a.basis[i] + ", " + a.basis[j] +
                                            ", " + a.basis[k] + ") lhs=" + vec_str(lhs) +
                                            " rhs=" + vec_str(rhs)});
      }
  if (a.unit_coords) {
    for (std::size_t i = 0; i < d; ++i) {
      Vec e = vec_unit(a.field, d, i);
      if (a.mul_vec(*a.unit_coords, e) != e || a.mul_vec(e, *a.unit_coords) != e)
        rep.violations.push_back({"algebra-unit", "unit fails at basis " + a.basis[i]});
    }
  }
  return rep;
}

inline ValidationReport validate_bimodule(const BimodulePresentation& m) {
  m.check_shapes();
  ValidationReport rep;
  rep.subject = "bimodule " + m.name;
  const AlgebraPresentation& a = *m.algebra;
  std::size_t da = a.dim(), dm = m.dim();
  auto ea = [&](std::size_t i) { return vec_unit(a.field, da, i); };
  auto em = [&](std::size_t i) { return vec_unit(a.field, dm, i); };
  // (ab)m = a(bm), m(ab) = (ma)b, (am)b = a(mb); the unit need not act
  // as the identity
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < dm; ++k) {
        if (m.left_vec(a.mul[i][j], em(k)) != m.left_vec(ea(i), m.left_vec(ea(j), em(k))))
          rep.violations.push_back({"bimodule-left-associativity",
                                    "witness (" + a.basis[i] + ", " + a.basis[j] + ", " +
                                        m.basis[k] + ")"});
        if (m.right_vec(em(k), a.mul[i][j]) !=
            m.right_vec(m.right_vec(em(k), ea(i)), ea(j)))
          rep.violations.push_back({"bimodule-right-associativity",
                                    "witness (" + m.basis[k] + ", " + a.basis[i] + ", " +
                                        a.basis[j] + ")"});
        if (m.right_vec(m.left_vec(ea(i), em(k)), ea(j)) !=
            m.left_vec(ea(i), m.right_vec(em(k), ea(j))))
          rep.violations.push_back({"bimodule-middle-associativity",
                                    "witness (" + a.basis[i] + ", " + m.basis[k] + ", " +
                                        a.basis[j] + ")"});
      }
  return rep;
}

namespace hoch {

inline TupleIndex tuples(const HochCochain& f) {
  return TupleIndex(f.module->algebra->dim(), static_cast<std::size_t>(f.degree));
}

inline HochCochain zero_cochain(std::shared_ptr<const BimodulePresentation> m, int n) {
  HochCochain f;
  f.module = m;
  f.degree = n;
  TupleIndex ti(m->algebra->dim(), static_cast<std::size_t>(n));
  f.values.assign(ti.count(), vec_zero(m->field(), m->dim()));
  return f;
}

// Full multilinear evaluation at coordinate-vector arguments.
inline Vec evaluate(const HochCochain& f, std::span<const Vec> args) {
  if (args.size() != static_cast<std::size_t>(f.degree))
    throw_error(Error::Kind::Dimension, "cochain arity mismatch in evaluation");
  const BimodulePresentation& m = *f.module;
  std::size_t da = m.algebra->dim();
  Vec out = vec_zero(m.field(), m.dim());
  TupleIndex ti(da, args.size());
  for (std::size_t r = 0; r < ti.count(); ++r) {
    std::vector<Obj> t = ti.decode(r);
    Scalar c = Scalar::one(m.field());
    bool zero = false;
    for (std::size_t i = 0; i < t.size() && !zero; ++i) {
      if (args[i][t[i]].is_zero())
        zero = true;
      else
        c = c * args[i][t[i]];
    }
    if (zero) continue;
    out = vec_add(out, vec_scale(c, f.values[r]));
  }
  return out;
}

// (df)(a_0,...,a_n) = a_0 f(a_1..a_n)
//                     + Σ_{i=1..n} (-1)^i f(a_0,..,a_{i-1}a_i,..,a_n)
//                     + (-1)^{n+1} f(a_0..a_{n-1}) a_n
// For n = 0: (dh)(a) = a·h - h·a.
inline HochCochain differential(const HochCochain& f) {
  const BimodulePresentation& m = *f.module;
  std::size_t da = m.algebra->dim();
  int n = f.degree;
  HochCochain out = zero_cochain(f.module, n + 1);
  TupleIndex to(da, static_cast<std::size_t>(n + 1));
  TupleIndex from(da, static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < to.count(); ++r) {
    std::vector<Obj> t = to.decode(r);
    Vec acc = m.left_vec(vec_unit(m.field(), da, t[0]),
                         f.values[from.encode(std::vector<Obj>(t.begin() + 1, t.end()))]);
    int sign = -1;
    for (int i = 1; i <= n; ++i) {
      std::vector<Vec> args;
      args.reserve(static_cast<std::size_t>(n));
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (static_cast<int>(j) == i - 1) {
          args.push_back(m.algebra->mul[t[j]][t[j + 1]]);
          ++j;
        } else {
          args.push_back(vec_unit(m.field(), da, t[j]));
        }
      }
      Vec term = evaluate(f, args);
      acc = sign > 0 ? vec_add(acc, term) : vec_sub(acc, term);
      sign = -sign;
    }
    Vec last = m.right_vec(
        f.values[from.encode(std::vector<Obj>(t.begin(), t.end() - 1))],
        vec_unit(m.field(), da, t.back()));
    acc = sign > 0 ? vec_add(acc, last) : vec_sub(acc, last);
    out.values[r] = std::move(acc);
  }
  return out;
}

inline HochCochain add(const HochCochain& f, const HochCochain& g) {
  HochCochain out = f;
  for (std::size_t r = 0; r < out.values.size(); ++r)
    out.values[r] = vec_add(out.values[r], g.values[r]);
  return out;
}

inline HochCochain scale(const Scalar& c, const HochCochain& f) {
  HochCochain out = f;
  for (auto& v : out.values) v = vec_scale(c, v);
  return out;
}

// The (A,A)-bimodule Hom_k(A, M) with (a·g)(b) = a·g(b) and
// (g·a)(b) = g(ab) - g(a)·b.  Basis index (a, m) ↦ a·dimM + m.
inline BimodulePresentation hom_bimodule(const BimodulePresentation& m) {
  const AlgebraPresentation& A = *m.algebra;
  std::size_t da = A.dim(), dm = m.dim(), dh = da * dm;
  BimodulePresentation h;
  h.algebra = m.algebra;
  h.name = "Hom(" + A.name + "," + m.name + ")";
  h.basis.reserve(dh);
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t k = 0; k < dm; ++k) h.basis.push_back(A.basis[a] + "->" + m.basis[k]);
  auto idx = [&](std::size_t a, std::size_t k) { return a * dm + k; };
  h.left_action.assign(da, std::vector<Vec>(dh, vec_zero(A.field, dh)));
  h.right_action.assign(dh, std::vector<Vec>(da, vec_zero(A.field, dh)));
  for (std::size_t x = 0; x < da; ++x)
    for (std::size_t a = 0; a < da; ++a)
      for (std::size_t k = 0; k < dm; ++k) {
        // x · e_{(a,k)}: b ↦ δ_{ab} (x·m_k)
        Vec xm = m.left_vec(vec_unit(A.field, da, x), vec_unit(A.field, dm, k));
        Vec& cell = h.left_action[x][idx(a, k)];
        for (std::size_t k2 = 0; k2 < dm; ++k2) cell[idx(a, k2)] = xm[k2];
        // e_{(a,k)} · x: b ↦ [x b]_a m_k − δ_{xa} (m_k · b)
        Vec& rcell = h.right_action[idx(a, k)][x];
        for (std::size_t b = 0; b < da; ++b) {
          const Scalar& coeff = A.mul[x][b][a];
          if (!coeff.is_zero()) rcell[idx(b, k)] = rcell[idx(b, k)] + coeff;
          if (x == a) {
            Vec mb = m.right_vec(vec_unit(A.field, dm, k), vec_unit(A.field, da, b));
            for (std::size_t k2 = 0; k2 < dm; ++k2)
              rcell[idx(b, k2)] = rcell[idx(b, k2)] - mb[k2];
          }
        }
      }
  return h;
}

// Γ(f)(a_1,...,a_{n-1})(a_n) = f(a_1,...,a_n); hb must be the
// hom_bimodule of f's coefficients.
inline HochCochain curry(const HochCochain& f,
                         std::shared_ptr<const BimodulePresentation> hb) {
  if (f.degree < 1)
    throw_error(Error::Kind::Precondition, "curry needs degree >= 1");
  const BimodulePresentation& m = *f.module;
  std::size_t da = m.algebra->dim(), dm = m.dim();
  if (hb->dim() != da * dm || hb->algebra != m.algebra)
    throw_error(Error::Kind::Dimension, "hom-bimodule carrier mismatch in curry");
  HochCochain out = zero_cochain(hb, f.degree - 1);
  TupleIndex lo(da, static_cast<std::size_t>(f.degree - 1));
  for (std::size_t r = 0; r < lo.count(); ++r) {
    std::vector<Obj> t = lo.decode(r);
    Vec cell = vec_zero(m.field(), da * dm);
    for (std::size_t a = 0; a < da; ++a) {
      std::vector<Obj> full = t;
      full.push_back(a);
      const Vec& v = f.values[TupleIndex(da, full.size()).encode(full)];
      for (std::size_t k = 0; k < dm; ++k) cell[a * dm + k] = v[k];
    }
    out.values[r] = std::move(cell);
  }
  return out;
}

inline HochCochain uncurry(const HochCochain& g,
                           std::shared_ptr<const BimodulePresentation> m) {
  std::size_t da = m->algebra->dim(), dm = m->dim();
  if (g.module->dim() != da * dm || g.module->algebra != m->algebra)
    throw_error(Error::Kind::Dimension, "hom-bimodule carrier mismatch in uncurry");
  HochCochain out = zero_cochain(m, g.degree + 1);
  TupleIndex hi(da, static_cast<std::size_t>(g.degree + 1));
  TupleIndex lo(da, static_cast<std::size_t>(g.degree));
  for (std::size_t r = 0; r < hi.count(); ++r) {
    std::vector<Obj> t = hi.decode(r);
    Obj a = t.back();
    t.pop_back();
    const Vec& cell = g.values[lo.encode(t)];
    Vec v = vec_zero(m->field(), dm);
    for (std::size_t k = 0; k < dm; ++k) v[k] = cell[a * dm + k];
    out.values[r] = std::move(v);
  }
  return out;
}

}  // namespace hoch

struct NormalizationResult {
  HochCochain h;        // degree n-1
  int sign = 1;         // f + sign·dh vanishes at unit arguments
  HochCochain corrected;
};

namespace hoch {

namespace detail {

// Returns h with (f + dh)(a_1..a_n) = 0 whenever some a_i = 1; the
// recursion follows the currying of the cocycle, with the degree-1
// base case h = -(1·f(1) - f(1)·1).
inline HochCochain normalize_rec(const HochCochain& f) {
  const BimodulePresentation& m = *f.module;
  const AlgebraPresentation& A = *m.algebra;
  const Vec& one = *A.unit_coords;
  int n = f.degree;
  if (n == 1) {
    Vec f1 = evaluate(f, std::vector<Vec>{one});
    Vec h0 = vec_sub(m.left_vec(one, f1), m.right_vec(f1, one));
    HochCochain h = zero_cochain(f.module, 0);
    h.values[0] = vec_neg(h0);
    return h;
  }
  auto hb = std::make_shared<const BimodulePresentation>(hom_bimodule(m));
  HochCochain curried = curry(f, hb);
  HochCochain p = normalize_rec(curried);
  HochCochain g = uncurry(p, f.module);
  HochCochain f_prime = add(f, differential(g));
  // g'(a_1..a_{n-1}) = f'(a_1..a_{n-1}, 1) - 2 f'(a_1..a_{n-1}, 1)·1
  HochCochain g_prime = zero_cochain(f.module, n - 1);
  std::size_t da = A.dim();
  TupleIndex lo(da, static_cast<std::size_t>(n - 1));
  Scalar two = Scalar::from_int(m.field(), 2);
  for (std::size_t r = 0; r < lo.count(); ++r) {
    std::vector<Obj> t = lo.decode(r);
    std::vector<Vec> args;
    for (Obj a : t) args.push_back(vec_unit(m.field(), da, a));
    args.push_back(one);
    Vec v = evaluate(f_prime, args);
    g_prime.values[r] = vec_sub(v, vec_scale(two, m.right_vec(v, one)));
  }
  Scalar sgn = Scalar::from_int(m.field(), n % 2 == 0 ? 1 : -1);
  return add(g, scale(sgn, g_prime));
}

}  // namespace detail

// Does the cochain vanish whenever some argument equals the unit?  By
// multilinearity it is enough to substitute the unit in one slot and
// basis elements elsewhere.
inline bool vanishes_at_unit_arguments(const HochCochain& f) {
  const BimodulePresentation& m = *f.module;
  const AlgebraPresentation& A = *m.algebra;
  const Vec& one = *A.unit_coords;
  std::size_t da = A.dim();
  int n = f.degree;
  TupleIndex rest(da, static_cast<std::size_t>(n > 0 ? n - 1 : 0));
  for (int slot = 0; slot < n; ++slot)
    for (std::size_t r = 0; r < rest.count(); ++r) {
      std::vector<Obj> t = rest.decode(r);
      std::vector<Vec> args;
      std::size_t k = 0;
      for (int i = 0; i < n; ++i) {
        if (i == slot)
          args.push_back(one);
        else
          args.push_back(vec_unit(m.field(), da, t[k++]));
      }
      if (!vec_is_zero(evaluate(f, args))) return false;
    }
  return true;
}

// The normalization lemma made executable: given an n-cocycle over a
// unital algebra, produce h of degree n-1 whose correction makes the
// cocycle vanish at every unit argument.  The sign in front of dh is
// determined by direct evaluation, never assumed.
inline NormalizationResult normalize_cocycle(const HochCochain& f) {
  const AlgebraPresentation& A = *f.module->algebra;
  if (!A.unit_coords)
    throw_error(Error::Kind::Precondition,
                "normalization needs a unital algebra (no unit declared on " + A.name +
                    ")");
  if (f.degree < 1)
    throw_error(Error::Kind::Precondition, "normalization needs degree >= 1");
  if (!differential(f).is_zero())
    throw_error(Error::Kind::Precondition, "normalization input is not a cocycle");
  NormalizationResult res;
  res.h = detail::normalize_rec(f);
  HochCochain dh = differential(res.h);
  for (int sign : {+1, -1}) {
    HochCochain candidate =
        add(f, scale(Scalar::from_int(f.module->field(), sign), dh));
    if (vanishes_at_unit_arguments(candidate)) {
      res.sign = sign;
      res.corrected = std::move(candidate);
      return res;
    }
  }
  throw_error(Error::Kind::Internal,
              "normalization postcondition failed for both signs");
}

}  // namespace hoch

// A ⊕ k with product (a,λ)(b,μ) = (ab + λb + μa, λμ); the new unit is
// the appended basis vector, so ι is the coordinate inclusion and π
// drops the last coordinate.
inline AlgebraPresentation unitalize_algebra(const AlgebraPresentation& a) {
  std::size_t d = a.dim();
  AlgebraPresentation u;
  u.field = a.field;
  u.name = a.name + "_u";
  u.basis = a.basis;
  std::string unit_name = "one";
  while (std::find(u.basis.begin(), u.basis.end(), unit_name) != u.basis.end())
    unit_name += "_";
  u.basis.push_back(unit_name);
  std::size_t du = d + 1;
  u.mul.assign(du, std::vector<Vec>(du, vec_zero(a.field, du)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) u.mul[i][j][k] = a.mul[i][j][k];
  for (std::size_t i = 0; i < d; ++i) {
    u.mul[i][d][i] = Scalar::one(a.field);  // a·1 = a
    u.mul[d][i][i] = Scalar::one(a.field);  // 1·a = a
  }
  u.mul[d][d][d] = Scalar::one(a.field);
  u.unit_coords = vec_unit(a.field, du, d);
  return u;
}

// Extend M to an (A^u, A^u)-bimodule by letting the new unit act as
// the identity.
inline BimodulePresentation extend_bimodule_to_unitalization(
    const BimodulePresentation& m, std::shared_ptr<const AlgebraPresentation> a_u) {
  std::size_t d = m.algebra->dim(), dm = m.dim();
  if (a_u->dim() != d + 1)
    throw_error(Error::Kind::Dimension, "unitalized algebra dimension mismatch");
  BimodulePresentation out;
  out.algebra = a_u;
  out.name = m.name + "_u";
  out.basis = m.basis;
  out.left_action.assign(d + 1, std::vector<Vec>(dm, vec_zero(m.field(), dm)));
  out.right_action.assign(dm, std::vector<Vec>(d + 1, vec_zero(m.field(), dm)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < dm; ++k) {
      out.left_action[i][k] = m.left_action[i][k];
      out.right_action[k][i] = m.right_action[k][i];
    }
  for (std::size_t k = 0; k < dm; ++k) {
    out.left_action[d][k] = vec_unit(m.field(), dm, k);
    out.right_action[k][d] = vec_unit(m.field(), dm, k);
  }
  return out;
}

namespace hoch {

// ι*: restrict the value table to old-basis tuples.
inline HochCochain iota_pullback(const HochCochain& f,
                                 std::shared_ptr<const BimodulePresentation> m) {
  std::size_t da = m->algebra->dim();
  std::size_t dau = f.module->algebra->dim();
  if (dau != da + 1)
    throw_error(Error::Kind::Dimension, "iota pullback expects a unitalized source");
  HochCochain out = zero_cochain(m, f.degree);
  TupleIndex lo(da, static_cast<std::size_t>(f.degree));
  TupleIndex hi(dau, static_cast<std::size_t>(f.degree));
  for (std::size_t r = 0; r < lo.count(); ++r) {
    std::vector<Obj> t = lo.decode(r);
    out.values[r] = f.values[hi.encode(t)];
  }
  return out;
}

// π*: project each argument back to A (the unit coordinate is killed).
inline HochCochain pi_pullback(const HochCochain& f,
                               std::shared_ptr<const BimodulePresentation> m_u) {
  std::size_t da = f.module->algebra->dim();
  std::size_t dau = m_u->algebra->dim();
  if (dau != da + 1)
    throw_error(Error::Kind::Dimension, "pi pullback expects a unitalized target");
  HochCochain out = zero_cochain(m_u, f.degree);
  TupleIndex hi(dau, static_cast<std::size_t>(f.degree));
  TupleIndex lo(da, static_cast<std::size_t>(f.degree));
  for (std::size_t r = 0; r < hi.count(); ++r) {
    std::vector<Obj> t = hi.decode(r);
    bool hits_unit = false;
    for (Obj x : t)
      if (x == da) hits_unit = true;
    if (hits_unit) continue;  // projection kills the unit coordinate
    out.values[r] = f.values[lo.encode(t)];
  }
  return out;
}

}  // namespace hoch

struct HochOptions {
  int degree_cap = 3;  // max materialized cochain degree for the complex
  std::size_t max_entries = 2000000;
};

struct HochCohomologyEntry {
  int degree = 0;
  std::size_t dim_cochains = 0;
  std::size_t rank_d = 0;
  std::size_t dim_cocycles = 0;
  std::size_t dim_coboundaries = 0;
  std::size_t dim_H = 0;
  std::vector<HochCochain> representatives;
};

// Memoized Hochschild complex: every multilinear value table is a
// cochain, so the ambient spaces need no kernel computation and the
// differentials are assembled column by column.
class HochComplex {
 public:
  explicit HochComplex(std::shared_ptr<const BimodulePresentation> m,
                       HochOptions opts = {})
      : m_(std::move(m)), opts_(opts) {}

  const std::shared_ptr<const BimodulePresentation>& module() const { return m_; }
  const FieldSpec& field() const { return m_->field(); }

  std::size_t dim(int n) const {
    std::size_t d = m_->dim();
    std::size_t da = m_->algebra->dim();
    for (int i = 0; i < n; ++i) d *= da;
    return d;
  }

  Vec flatten(const HochCochain& f) const {
    Vec out = vec_zero(field(), dim(f.degree));
    std::size_t dm = m_->dim();
    for (std::size_t r = 0; r < f.values.size(); ++r)
      for (std::size_t k = 0; k < dm; ++k) out[r * dm + k] = f.values[r][k];
    return out;
  }

  HochCochain unflatten(int n, const Vec& v) const {
    HochCochain f = hoch::zero_cochain(m_, n);
    std::size_t dm = m_->dim();
    for (std::size_t r = 0; r < f.values.size(); ++r)
      for (std::size_t k = 0; k < dm; ++k) f.values[r][k] = v[r * dm + k];
    return f;
  }

  const Matrix& differential_matrix(int n) {
    auto it = diff_.find(n);
    if (it != diff_.end()) return it->second;
    if (n < 0 || n > opts_.degree_cap)
      throw_error(Error::Kind::Budget,
                  "Hochschild degree " + std::to_string(n) + " exceeds the cap " +
                      std::to_string(opts_.degree_cap));
    if (dim(n + 1) > opts_.max_entries)
      throw_error(Error::Kind::Budget, "Hochschild value table exceeds the budget");
    Matrix d(field(), dim(n + 1), dim(n));
    for (std::size_t col = 0; col < dim(n); ++col) {
      HochCochain basis = unflatten(n, vec_unit(field(), dim(n), col));
      Vec image = flatten(hoch::differential(basis));
      for (std::size_t row = 0; row < image.size(); ++row)
        if (!image[row].is_zero()) d.at(row, col) = image[row];
    }
    return diff_.emplace(n, std::move(d)).first->second;
  }

  // H^0 = ker d^0; higher degrees use the usual rank arithmetic.
  HochCohomologyEntry cohomology(int n) {
    if (n < 0 || n > opts_.degree_cap - 1)
      throw_error(Error::Kind::Budget,
                  "cohomology degree must lie in 0.." +
                      std::to_string(opts_.degree_cap - 1));
    HochCohomologyEntry e;
    e.degree = n;
    const Matrix& d = differential_matrix(n);
    e.dim_cochains = dim(n);
    e.rank_d = rank(d);
    e.dim_cocycles = e.dim_cochains - e.rank_d;
    Matrix cobound = n == 0 ? Matrix(field(), dim(0), 0) : differential_matrix(n - 1);
    e.dim_coboundaries = rank(cobound);
    e.dim_H = e.dim_cocycles - e.dim_coboundaries;
    std::vector<Vec> kept;
    Matrix span = cobound;
    for (const Vec& k : kernel_basis(d)) {
      if (kept.size() == e.dim_H) break;
      if (in_span(span, k)) continue;
      span = span.hcat(Matrix::from_columns(field(), {k}));
      kept.push_back(k);
    }
    if (kept.size() != e.dim_H)
      throw_error(Error::Kind::Internal, "representative selection failed");
    for (const Vec& k : kept) e.representatives.push_back(unflatten(n, k));
    return e;
  }

 private:
  std::shared_ptr<const BimodulePresentation> m_;
  HochOptions opts_;
  std::map<int, Matrix> diff_;
};

struct HochInducedMap {
  Matrix matrix;  // H^n(A^u, M) -> H^n(A, M)
  bool injective = false;
  bool surjective = false;
  HochCohomologyEntry source_cohomology;  // A^u side
  HochCohomologyEntry target_cohomology;  // A side

  HochInducedMap() : matrix(FieldSpec::rationals(), 0, 0) {}
};

// Matrix of ι* on cohomology in the chosen representative bases, with
// the bijectivity verdict.  `upstairs` must be the complex of the
// unitalized algebra with the same coefficients.
inline HochInducedMap iota_induced_map(HochComplex& upstairs, HochComplex& downstairs,
                                       int n) {
  if (upstairs.module()->algebra->dim() != downstairs.module()->algebra->dim() + 1)
    throw_error(Error::Kind::Precondition,
                "iota_induced_map expects the unitalization upstairs");
  HochInducedMap res;
  res.source_cohomology = upstairs.cohomology(n);
  res.target_cohomology = downstairs.cohomology(n);
  std::size_t src_dim = res.source_cohomology.dim_H;
  std::size_t dst_dim = res.target_cohomology.dim_H;
  std::vector<Vec> rep_cols;
  for (const HochCochain& rep : res.target_cohomology.representatives)
    rep_cols.push_back(downstairs.flatten(rep));
  Matrix reps = rep_cols.empty()
                    ? Matrix(downstairs.field(), downstairs.dim(n), 0)
                    : Matrix::from_columns(downstairs.field(), rep_cols);
  Matrix cobound = n == 0 ? Matrix(downstairs.field(), downstairs.dim(0), 0)
                          : downstairs.differential_matrix(n - 1);
  Matrix sysmat = reps.hcat(cobound);
  Matrix phi(downstairs.field(), dst_dim, src_dim);
  for (std::size_t j = 0; j < src_dim; ++j) {
    HochCochain mapped = hoch::iota_pullback(res.source_cohomology.representatives[j],
                                             downstairs.module());
    auto sol = solve(sysmat, downstairs.flatten(mapped));
    if (!sol)
      throw_error(Error::Kind::Internal,
                  "iota pullback of a cocycle is not a cocycle modulo coboundaries");
    for (std::size_t i = 0; i < dst_dim; ++i) phi.at(i, j) = (*sol)[i];
  }
  std::size_t rk = rank(phi);
  res.matrix = std::move(phi);
  res.injective = rk == src_dim;
  res.surjective = rk == dst_dim;
  return res;
}

// Stability of a per-degree family of subspaces under the four
// closures: argument insertion, adjacent-slot merge, left and right
// multiplication.  A closure is checked only when its target degree is
// present in the family (the Davydov-Yetter subcomplex lives in
// positive degrees, so its family has no degree 0).
struct StabilityReport {
  bool stable = true;
  std::string violation;  // empty when stable
};

struct StabilityOptions {
  // Algebra basis indices used for the insertion closure; nullopt
  // checks every basis element as in the definition.  The embedded DY
  // image is closed under insertion only at the unit (other objects
  // shift the End-block pattern), which is all the normalization
  // recursion ever inserts.
  std::optional<std::vector<std::size_t>> insertion_elements;
};

inline StabilityReport check_stability(
    const std::map<int, std::vector<HochCochain>>& family,
    std::shared_ptr<const BimodulePresentation> m, const StabilityOptions& sopts = {}) {
  StabilityReport rep;
  HochComplex cx(m, HochOptions{/*degree_cap=*/16, /*max_entries=*/4000000});
  std::map<int, Matrix> spans;
  for (const auto& [n, list] : family) {
    std::vector<Vec> cols;
    for (const HochCochain& f : list) cols.push_back(cx.flatten(f));
    spans.emplace(n, cols.empty() ? Matrix(m->field(), cx.dim(n), 0)
                                  : Matrix::from_columns(m->field(), cols));
  }
  std::size_t da = m->algebra->dim();
  auto fail = [&](int n, const std::string& cond, const std::string& witness) {
    rep.stable = false;
    rep.violation = "degree " + std::to_string(n) + " " + cond + " " + witness;
  };
  for (const auto& [n, list] : family) {
    for (std::size_t fi = 0; fi < list.size() && rep.stable; ++fi) {
      const HochCochain& f = list[fi];
      // (1) insertion: fix b in one slot
      std::vector<std::size_t> insert_with;
      if (sopts.insertion_elements) {
        insert_with = *sopts.insertion_elements;
      } else {
        for (std::size_t b = 0; b < da; ++b) insert_with.push_back(b);
      }
      if (n >= 1 && spans.count(n - 1)) {
        TupleIndex lo(da, static_cast<std::size_t>(n - 1));
        for (int slot = 0; slot < n && rep.stable; ++slot)
          for (std::size_t b : insert_with) {
            if (!rep.stable) break;
            HochCochain g = hoch::zero_cochain(m, n - 1);
            for (std::size_t r = 0; r < lo.count(); ++r) {
              std::vector<Obj> t = lo.decode(r);
              t.insert(t.begin() + slot, static_cast<Obj>(b));
              g.values[r] = f.values[TupleIndex(da, t.size()).encode(t)];
            }
            if (!in_span(spans.at(n - 1), cx.flatten(g)))
              fail(n, "evaluation-insertion",
                   "slot " + std::to_string(slot + 1) + " b=" + m->algebra->basis[b] +
                       " cochain #" + std::to_string(fi));
          }
      }
      if (spans.count(n + 1)) {
        TupleIndex hi(da, static_cast<std::size_t>(n + 1));
        // (2) merge of adjacent slots
        for (int i = 1; i <= n && rep.stable; ++i) {
          HochCochain g = hoch::zero_cochain(m, n + 1);
          for (std::size_t r = 0; r < hi.count(); ++r) {
            std::vector<Obj> t = hi.decode(r);
            std::vector<Vec> args;
            for (std::size_t j = 0; j < t.size(); ++j) {
              if (static_cast<int>(j) == i - 1) {
                args.push_back(m->algebra->mul[t[j]][t[j + 1]]);
                ++j;
              } else {
                args.push_back(vec_unit(m->field(), da, t[j]));
              }
            }
            g.values[r] = hoch::evaluate(f, args);
          }
          if (!in_span(spans.at(n + 1), cx.flatten(g)))
            fail(n, "slot-merge", "slots " + std::to_string(i) + "," +
                                      std::to_string(i + 1) + " cochain #" +
                                      std::to_string(fi));
        }
        // (3) left multiplication prepend
        if (rep.stable) {
          HochCochain g = hoch::zero_cochain(m, n + 1);
          TupleIndex lo(da, static_cast<std::size_t>(n));
          for (std::size_t r = 0; r < hi.count(); ++r) {
            std::vector<Obj> t = hi.decode(r);
            g.values[r] = m->left_vec(
                vec_unit(m->field(), da, t[0]),
                f.values[lo.encode(std::vector<Obj>(t.begin() + 1, t.end()))]);
          }
          if (!in_span(spans.at(n + 1), cx.flatten(g)))
            fail(n, "left-multiplication", "cochain #" + std::to_string(fi));
        }
        // (4) right multiplication append
        if (rep.stable) {
          HochCochain g = hoch::zero_cochain(m, n + 1);
          TupleIndex lo(da, static_cast<std::size_t>(n));
          for (std::size_t r = 0; r < hi.count(); ++r) {
            std::vector<Obj> t = hi.decode(r);
            g.values[r] = m->right_vec(
                f.values[lo.encode(std::vector<Obj>(t.begin(), t.end() - 1))],
                vec_unit(m->field(), da, t.back()));
          }
          if (!in_span(spans.at(n + 1), cx.flatten(g)))
            fail(n, "right-multiplication", "cochain #" + std::to_string(fi));
        }
      }
      if (!rep.stable) break;
    }
    if (!rep.stable) break;
  }
  return rep;
}

}  // namespace dycoh

#endif
