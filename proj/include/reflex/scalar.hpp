#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace reflex {

// Exact scalar in Q(i): re + im*i with both components canonical rationals
// (positive denominator, lowest terms). Equality is structural equality of
// the canonical form.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long value) : re_(value), im_(0) {}  // implicit by design
  explicit GaussianRational(mpq_class re, mpq_class im = mpq_class(0));

  static GaussianRational ratio(long num, long den);
  static GaussianRational i();

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  mpz_class re_num() const { return re_.get_num(); }
  mpz_class re_den() const { return re_.get_den(); }
  mpz_class im_num() const { return im_.get_num(); }
  mpz_class im_den() const { return im_.get_den(); }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }
  // |z|^2, a nonnegative rational; zero only for z = 0.
  mpq_class squared_modulus() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);
  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return cmp(a.re_, b.re_) == 0 && cmp(a.im_, b.im_) == 0;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  // Total order used only for canonical sorting of bases (Q(i) is not an
  // ordered field). Compares real parts, then imaginary parts.
  static int compare(const GaussianRational& a, const GaussianRational& b);

  // Text form: "a/b", "a/b+c/di", integer shorthand "2" for "2/1",
  // pure-imaginary "ci". Accepts the Unicode minus sign.
  static GaussianRational parse(std::string_view text);
  std::string str() const;

 private:
  mpq_class re_, im_;
};

}  // namespace reflex
