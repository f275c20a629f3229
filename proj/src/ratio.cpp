#include "kakutani/ratio.hpp"

#include <cctype>
#include <string>

#include "kakutani/error.hpp"

namespace kakutani {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SumNotOne: return "SumNotOne";
    case ErrorCode::NonPositivePart: return "NonPositivePart";
    case ErrorCode::Trivial: return "Trivial";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::CheckpointOutOfRange: return "CheckpointOutOfRange";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(ErrorCode::Parse, "malformed number '" + std::string(whole) + "'");
  Integer v(std::string(s), 10);
  return neg ? Integer(-v) : v;
}

Ratio parse_decimal(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    Integer ev = parse_integer(s.substr(e + 1), whole);
    if (!ev.fits_slong_p() || abs(ev) > 100000)
      throw Error(ErrorCode::Parse, "exponent out of range in '" + std::string(whole) + "'");
    exponent = ev.get_si();
    s = s.substr(0, e);
  }
  std::string_view int_part = s, frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty())
    throw Error(ErrorCode::Parse, "malformed number '" + std::string(whole) + "'");
  if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
    throw Error(ErrorCode::Parse, "malformed number '" + std::string(whole) + "'");

  std::string digits = std::string(int_part) + std::string(frac_part);
  Integer num(digits.empty() ? std::string("0") : digits, 10);
  exponent -= static_cast<long>(frac_part.size());
  Integer den = 1;
  if (exponent >= 0)
    num *= pow10(static_cast<unsigned long>(exponent));
  else
    den = pow10(static_cast<unsigned long>(-exponent));
  if (neg) num = -num;
  return Ratio(num, den);
}

}  // namespace

Ratio::Ratio(long num, long den) : q_(num, den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  q_.canonicalize();
}

Ratio::Ratio(const Integer& num, const Integer& den) : q_(num, den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  q_.canonicalize();
}

Ratio& Ratio::operator/=(const Ratio& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  q_ /= o.q_;
  return *this;
}

Ratio Ratio::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw Error(ErrorCode::Parse, "empty number");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(s.substr(0, slash), text);
    Integer den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
    return Ratio(num, den);
  }
  return parse_decimal(s, text);
}

std::string Ratio::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::size_t Ratio::hash() const {
  // Low limbs are enough to spread values across buckets.
  auto limb = [](const mpz_class& z) -> std::size_t {
    return mpz_size(z.get_mpz_t()) ? static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0)) : 0;
  };
  std::size_t h = limb(q_.get_num()) * 0x9E3779B97F4A7C15ull;
  h ^= limb(q_.get_den()) + 0x7F4A7C15ull + (h << 6) + (h >> 2);
  return h ^ static_cast<std::size_t>(sign() + 1);
}

Ratio pow2(long e) {
  Integer p = 1;
  unsigned long m = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), m);
  return e >= 0 ? Ratio(p, Integer(1)) : Ratio(Integer(1), p);
}

std::string to_decimal(const Ratio& r, int digits) {
  if (digits < 1) digits = 1;
  if (r.is_zero()) return "0";
  const bool neg = r.sign() < 0;
  const Integer num = abs(r.numerator());
  const Integer den = r.denominator();

  // e = floor(log10 |r|)
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  auto ge_pow10 = [&](long k) {  // |r| >= 10^k
    return k >= 0 ? num >= den * pow10(static_cast<unsigned long>(k))
                  : num * pow10(static_cast<unsigned long>(-k)) >= den;
  };
  while (ge_pow10(e + 1)) ++e;
  while (!ge_pow10(e)) --e;

  // mantissa = round_half_even(|r| * 10^(digits-1-e))
  const long shift = digits - 1 - e;
  Integer sn = num, sd = den;
  if (shift >= 0)
    sn *= pow10(static_cast<unsigned long>(shift));
  else
    sd *= pow10(static_cast<unsigned long>(-shift));
  Integer quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), sn.get_mpz_t(), sd.get_mpz_t());
  const int half = cmp(Integer(rem * 2), sd);
  if (half > 0 || (half == 0 && mpz_odd_p(quot.get_mpz_t()))) quot += 1;
  if (quot == pow10(static_cast<unsigned long>(digits))) {
    quot /= 10;
    ++e;
  }

  std::string m = quot.get_str();  // exactly `digits` characters
  std::string out = neg ? "-" : "";
  auto strip = [](std::string s) {
    if (s.find('.') == std::string::npos) return s;
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  };

  if (e < -4 || e >= digits) {
    std::string mant = strip(m.substr(0, 1) + "." + m.substr(1));
    std::string ex = std::to_string(e < 0 ? -e : e);
    if (ex.size() < 2) ex = "0" + ex;
    return out + mant + "e" + (e < 0 ? "-" : "+") + ex;
  }
  if (e >= 0) {
    std::string s = m.substr(0, static_cast<std::size_t>(e + 1)) + "." + m.substr(static_cast<std::size_t>(e + 1));
    return out + strip(s);
  }
  return out + strip("0." + std::string(static_cast<std::size_t>(-e - 1), '0') + m);
}

}  // namespace kakutani
