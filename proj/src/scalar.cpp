#include "reflex/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace reflex {

namespace {

// Strips spaces and maps the Unicode minus sign (U+2212) to '-'.
std::string normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    unsigned char c = static_cast<unsigned char>(text[k]);
    if (c == 0xE2 && k + 2 < text.size() &&
        static_cast<unsigned char>(text[k + 1]) == 0x88 &&
        static_cast<unsigned char>(text[k + 2]) == 0x92) {
      out.push_back('-');
      k += 2;
      continue;
    }
    if (std::isspace(c)) continue;
    out.push_back(text[k]);
  }
  return out;
}

[[noreturn]] void bad_scalar(std::string_view text, const char* why) {
  throw std::invalid_argument("bad scalar '" + std::string(text) + "': " + why);
}

// "[+-]digits[/digits]" with a strictly positive denominator.
mpq_class parse_rational(std::string_view tok, std::string_view whole) {
  if (tok.empty()) bad_scalar(whole, "empty rational term");
  bool negative = false;
  std::size_t pos = 0;
  if (tok[0] == '+' || tok[0] == '-') {
    negative = tok[0] == '-';
    pos = 1;
  }
  const std::size_t slash = tok.find('/', pos);
  const std::string_view num_part = tok.substr(pos, slash == std::string_view::npos ? std::string_view::npos : slash - pos);
  const std::string_view den_part = slash == std::string_view::npos ? std::string_view() : tok.substr(slash + 1);
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (!all_digits(num_part)) bad_scalar(whole, "malformed numerator");
  if (slash != std::string_view::npos && !all_digits(den_part)) bad_scalar(whole, "malformed denominator");
  mpz_class num(std::string(num_part), 10);
  mpz_class den = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den_part), 10);
  if (den == 0) bad_scalar(whole, "zero denominator");
  if (negative) num = -num;
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return GaussianRational(q);
}

GaussianRational GaussianRational::i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(i)");
  const mpq_class n = squared_modulus();
  return GaussianRational(re_ / n, -im_ / n);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  const mpq_class re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = re;
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

int GaussianRational::compare(const GaussianRational& a, const GaussianRational& b) {
  const int c = cmp(a.re_, b.re_);
  return c != 0 ? c : cmp(a.im_, b.im_);
}

GaussianRational GaussianRational::parse(std::string_view text) {
  const std::string s = normalize(text);
  if (s.empty()) bad_scalar(text, "empty");
  const bool imag_tail = s.back() == 'i';
  // A '+' or '-' past position 0 can only separate the two terms: signs of
  // numerators appear only at the start of a term.
  std::size_t split = std::string::npos;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  if (split != std::string::npos) {
    if (!imag_tail) bad_scalar(text, "two terms but no trailing 'i'");
    const mpq_class re = parse_rational(std::string_view(s).substr(0, split), text);
    std::string_view im_tok = std::string_view(s).substr(split, s.size() - split - 1);
    mpq_class im;
    if (im_tok == "+")
      im = 1;
    else if (im_tok == "-")
      im = -1;
    else
      im = parse_rational(im_tok, text);
    return GaussianRational(re, im);
  }
  if (imag_tail) {
    std::string_view tok = std::string_view(s).substr(0, s.size() - 1);
    mpq_class im;
    if (tok.empty() || tok == "+")
      im = 1;
    else if (tok == "-")
      im = -1;
    else
      im = parse_rational(tok, text);
    return GaussianRational(mpq_class(0), im);
  }
  return GaussianRational(parse_rational(s, text));
}

std::string GaussianRational::str() const {
  if (is_real()) return re_.get_str();
  std::string out;
  if (sgn(re_) != 0) {
    out = re_.get_str();
    if (sgn(im_) > 0) out += '+';
  }
  out += im_.get_str();
  out += 'i';
  return out;
}

}  // namespace reflex
