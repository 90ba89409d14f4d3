#include "hbl/scalar.hpp"

#include <ostream>

#include "hbl/error.hpp"

namespace hbl {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    e >>= 1U;
  }
  return r;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t mpz_mod_u64(const mpz_class& z, std::uint64_t p) {
  mpz_class m(std::to_string(p));
  mpz_class r = z % m;
  if (r < 0) r += m;
  return std::stoull(r.get_str());
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 62U) || !is_prime(p)) {
    throw FieldError("GF(p) needs a prime modulus below 2^62, got " + std::to_string(p));
  }
  return Field(Kind::Prime, p);
}

Field Field::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("gf:", 0) == 0) {
    try {
      return prime(std::stoull(text.substr(3)));
    } catch (const std::logic_error&) {
      throw FieldError("bad field modulus in '" + text + "'");
    }
  }
  throw FieldError("unknown field '" + text + "' (expected q or gf:<p>)");
}

std::string Field::to_string() const {
  return is_rational() ? "q" : "gf:" + std::to_string(p_);
}

Scalar::Scalar(long long num, long long den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  mpq_class q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q.canonicalize();
  v_ = q;
}

Scalar::Scalar(mpq_class q) {
  q.canonicalize();
  v_ = std::move(q);
}

Scalar Scalar::residue(long long value, std::uint64_t p) {
  Field::prime(p);
  long long r = value % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return Scalar(Residue{static_cast<std::uint64_t>(r), p});
}

Scalar Scalar::parse(const std::string& text, const Field& field) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw ParseError("not an exact scalar: '" + text + "'");
  }
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  return Scalar(q).in(field);
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
  return std::get<Residue>(v_).value == 0;
}

bool Scalar::is_one() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
  const auto& r = std::get<Residue>(v_);
  return r.value == 1 % r.modulus;
}

Field Scalar::field() const {
  if (is_rational()) return Field::rationals();
  return Field::prime(std::get<Residue>(v_).modulus);
}

const mpq_class& Scalar::rational() const {
  if (!is_rational()) throw FieldError("scalar is a residue, not a rational");
  return std::get<mpq_class>(v_);
}

std::uint64_t Scalar::residue_value() const {
  if (is_rational()) throw FieldError("scalar is a rational, not a residue");
  return std::get<Residue>(v_).value;
}

Scalar::Residue Scalar::to_residue(const mpq_class& q, std::uint64_t p) {
  std::uint64_t num = mpz_mod_u64(q.get_num(), p);
  std::uint64_t den = mpz_mod_u64(q.get_den(), p);
  if (den == 0) {
    throw FieldError(q.get_str() + " has no image in GF(" + std::to_string(p) + ")");
  }
  return Residue{mul_mod(num, pow_mod(den, p - 2, p), p), p};
}

std::uint64_t Scalar::residue_in(const Scalar& s, std::uint64_t p) {
  if (const auto* q = std::get_if<mpq_class>(&s.v_)) return to_residue(*q, p).value;
  return std::get<Residue>(s.v_).value;
}

Scalar Scalar::in(const Field& f) const {
  if (f.is_rational()) {
    if (!is_rational()) throw FieldError("cannot lift a residue to the rationals");
    return *this;
  }
  if (is_rational()) return Scalar(to_residue(std::get<mpq_class>(v_), f.modulus()));
  if (std::get<Residue>(v_).modulus != f.modulus()) {
    throw FieldError("residues of different prime fields do not mix");
  }
  return *this;
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
  return std::to_string(std::get<Residue>(v_).value);
}

std::uint64_t Scalar::common_modulus(const Scalar& a, const Scalar& b) {
  const auto* ra = std::get_if<Residue>(&a.v_);
  const auto* rb = std::get_if<Residue>(&b.v_);
  if (ra != nullptr && rb != nullptr && ra->modulus != rb->modulus) {
    throw FieldError("residues of different prime fields do not mix");
  }
  if (ra != nullptr) return ra->modulus;
  if (rb != nullptr) return rb->modulus;
  return 0;
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(-*q));
  const auto& r = std::get<Residue>(v_);
  return Scalar(Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus});
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  std::uint64_t p = Scalar::common_modulus(a, b);
  if (p == 0) return Scalar(mpq_class(a.rational() + b.rational()));
  std::uint64_t x = Scalar::residue_in(a, p);
  std::uint64_t y = Scalar::residue_in(b, p);
  std::uint64_t s = x + y;
  if (s >= p) s -= p;
  return Scalar(Scalar::Residue{s, p});
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  std::uint64_t p = Scalar::common_modulus(a, b);
  if (p == 0) return Scalar(mpq_class(a.rational() * b.rational()));
  std::uint64_t x = Scalar::residue_in(a, p);
  std::uint64_t y = Scalar::residue_in(b, p);
  return Scalar(Scalar::Residue{mul_mod(x, y, p), p});
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (const auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(1 / *q));
  const auto& r = std::get<Residue>(v_);
  return Scalar(Residue{pow_mod(r.value, r.modulus - 2, r.modulus), r.modulus});
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  std::uint64_t p = Scalar::common_modulus(a, b);
  if (p == 0) return a.rational() == b.rational();
  return Scalar::residue_in(a, p) == Scalar::residue_in(b, p);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace hbl
