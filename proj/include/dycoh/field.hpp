#ifndef DYCOH_FIELD_HPP
#define DYCOH_FIELD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dycoh/error.hpp"

namespace dycoh {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Ground field: the rationals or a prime field F_p.  Moduli are
// restricted below 2^31 so residue products fit in uint64.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint64_t modulus = 0;  // meaningful iff kind == PrimeField

  static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }

  static FieldSpec prime_field(std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t{1} << 31) || !is_prime(p))
      throw_error(Error::Kind::Structure,
                  "field modulus must be a prime below 2^31, got " + std::to_string(p));
    return FieldSpec{Kind::PrimeField, p};
  }

  bool is_rationals() const { return kind == Kind::Rationals; }

  bool operator==(const FieldSpec& o) const {
    return kind == o.kind && modulus == o.modulus;
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  std::string str() const {
    return is_rationals() ? "Q" : "F" + std::to_string(modulus);
  }

  // Characteristic of the field (0 for the rationals).
  std::uint64_t characteristic() const { return is_rationals() ? 0 : modulus; }

  static bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }
};

namespace detail {

inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid; a must be nonzero mod p
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1)
    throw_error(Error::Kind::Precondition, "element not invertible mod " + std::to_string(p));
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace detail

// Exact field element.  Rationals are kept in lowest terms with a
// positive denominator (cpp_rational maintains that form); prime-field
// residues live in [0, p).
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()) {}

  static Scalar zero(const FieldSpec& f) { return Scalar(f); }

  static Scalar one(const FieldSpec& f) {
    Scalar s(f);
    if (f.is_rationals())
      s.rat_ = 1;
    else
      s.res_ = 1 % f.modulus;
    return s;
  }

  static Scalar from_int(const FieldSpec& f, long long v) {
    Scalar s(f);
    if (f.is_rationals()) {
      s.rat_ = v;
    } else {
      std::int64_t m = static_cast<std::int64_t>(f.modulus);
      std::int64_t r = static_cast<std::int64_t>(v % m);
      if (r < 0) r += m;
      s.res_ = static_cast<std::uint64_t>(r);
    }
    return s;
  }

  static Scalar from_rational(const FieldSpec& f, const BigInt& num, const BigInt& den) {
    if (den == 0) throw_error(Error::Kind::Precondition, "zero denominator");
    Scalar s(f);
    if (f.is_rationals()) {
      s.rat_ = BigRational(num) / BigRational(den);
    } else {
      BigInt p(f.modulus);
      BigInt n = num % p;
      if (n < 0) n += p;
      BigInt d = den % p;
      if (d < 0) d += p;
      if (d == 0)
        throw_error(Error::Kind::Precondition,
                    "denominator vanishes in " + f.str());
      std::uint64_t dn = d.convert_to<std::uint64_t>();
      std::uint64_t nn = n.convert_to<std::uint64_t>();
      s.res_ = mulmod(nn, detail::mod_inverse(dn, f.modulus), f.modulus);
    }
    return s;
  }

  const FieldSpec& field() const { return field_; }

  bool is_zero() const {
    return field_.is_rationals() ? rat_.is_zero() : res_ == 0;
  }
  bool is_one() const { return *this == one(field_); }

  Scalar operator+(const Scalar& o) const {
    check(o);
    Scalar s(field_);
    if (field_.is_rationals())
      s.rat_ = rat_ + o.rat_;
    else
      s.res_ = (res_ + o.res_) % field_.modulus;
    return s;
  }

  Scalar operator-(const Scalar& o) const {
    check(o);
    Scalar s(field_);
    if (field_.is_rationals())
      s.rat_ = rat_ - o.rat_;
    else
      s.res_ = (res_ + field_.modulus - o.res_) % field_.modulus;
    return s;
  }

  Scalar operator*(const Scalar& o) const {
    check(o);
    Scalar s(field_);
    if (field_.is_rationals())
      s.rat_ = rat_ * o.rat_;
    else
      s.res_ = mulmod(res_, o.res_, field_.modulus);
    return s;
  }

  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  Scalar operator-() const {
    Scalar s(field_);
    if (field_.is_rationals())
      s.rat_ = -rat_;
    else
      s.res_ = res_ == 0 ? 0 : field_.modulus - res_;
    return s;
  }

  Scalar inverse() const {
    if (is_zero()) throw_error(Error::Kind::Precondition, "division by zero");
    Scalar s(field_);
    if (field_.is_rationals())
      s.rat_ = 1 / rat_;
    else
      s.res_ = detail::mod_inverse(res_, field_.modulus);
    return s;
  }

  bool operator==(const Scalar& o) const {
    return field_ == o.field_ &&
           (field_.is_rationals() ? rat_ == o.rat_ : res_ == o.res_);
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Canonical string: "p/q" in lowest terms with q > 0 and "/1"
  // omitted; plain decimal residues over prime fields.
  std::string str() const {
    if (!field_.is_rationals()) return std::to_string(res_);
    BigInt num = boost::multiprecision::numerator(rat_);
    BigInt den = boost::multiprecision::denominator(rat_);
    std::string s = num.str();
    if (den != 1) s += "/" + den.str();
    return s;
  }

  const BigRational& rational_value() const {
    if (!field_.is_rationals())
      throw_error(Error::Kind::FieldMismatch, "not a rational scalar");
    return rat_;
  }

  std::uint64_t residue_value() const {
    if (field_.is_rationals())
      throw_error(Error::Kind::FieldMismatch, "not a prime-field scalar");
    return res_;
  }

 private:
  explicit Scalar(const FieldSpec& f) : field_(f) {}

  void check(const Scalar& o) const {
    if (field_ != o.field_)
      throw_error(Error::Kind::FieldMismatch,
                  "scalar fields differ: " + field_.str() + " vs " + o.field_.str());
  }

  static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p;  // p < 2^31, so the product fits
  }

  FieldSpec field_;
  BigRational rat_;
  std::uint64_t res_ = 0;
};

// Coordinate vector in some chosen basis.  Zero-dimensional spaces are
// first-class: the empty vector is their only element.
using Vec = std::vector<Scalar>;

inline Vec vec_zero(const FieldSpec& f, std::size_t n) {
  return Vec(n, Scalar::zero(f));
}

inline bool vec_is_zero(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw_error(Error::Kind::Dimension, "vector length mismatch in add");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw_error(Error::Kind::Dimension, "vector length mismatch in sub");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
  return r;
}

inline Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec r(v);
  for (auto& s : r) s = c * s;
  return r;
}

inline Vec vec_neg(const Vec& v) {
  Vec r(v);
  for (auto& s : r) s = -s;
  return r;
}

inline std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

// Unit coordinate vector e_i of length n.
inline Vec vec_unit(const FieldSpec& f, std::size_t n, std::size_t i) {
  Vec v = vec_zero(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

}  // namespace dycoh

#endif
