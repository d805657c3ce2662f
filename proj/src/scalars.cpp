#include "albert/scalars.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <mutex>
#include <sstream>

namespace albert {
namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t powmod_u64(std::uint64_t a, u128 e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % mpz_class(std::to_string(p));
  if (r < 0) r += mpz_class(std::to_string(p));
  return std::stoull(r.get_str());
}

mpz_class to_mpz(std::uint64_t v) { return mpz_class(std::to_string(v)); }

// Registry of extension descriptors; entries are never removed.
const ExtensionSpec* intern(const ExtensionSpec& spec) {
  static std::mutex mu;
  static std::deque<ExtensionSpec> table;
  std::lock_guard lock(mu);
  for (const auto& e : table) {
    if (e.p == spec.p && e.degree == spec.degree && e.modulus == spec.modulus)
      return &e;
  }
  table.push_back(spec);
  return &table.back();
}

using Ext = Scalar::ExtResidue;

Ext ext_mul(const Ext& a, const Ext& b) {
  const auto& s = *a.spec;
  const int k = s.degree;
  std::array<std::uint64_t, 5> prod{};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      prod[i + j] = addmod(prod[i + j], mulmod(a.c[i], b.c[j], s.p), s.p);
  for (int d = 2 * k - 2; d >= k; --d) {
    const std::uint64_t top = prod[d];
    prod[d] = 0;
    if (top == 0) continue;
    for (int i = 0; i < k; ++i)
      prod[d - k + i] = submod(prod[d - k + i], mulmod(top, s.modulus[i], s.p), s.p);
  }
  Ext r{{0, 0, 0}, a.spec};
  for (int i = 0; i < k; ++i) r.c[i] = prod[i];
  return r;
}

bool ext_is_zero(const Ext& a) { return a.c[0] == 0 && a.c[1] == 0 && a.c[2] == 0; }

[[noreturn]] void mismatch() {
  throw FieldMismatch("arithmetic between elements of different fields");
}

}  // namespace

// ---------------------------------------------------------------------------
// GroundField

GroundField GroundField::rationals() {
  return GroundField(FieldKind::Rationals, 0, nullptr);
}

GroundField GroundField::prime(std::uint64_t p) {
  if (p < 5) throw InvalidArgument("prime field requires p >= 5, got " + std::to_string(p));
  if (p >= (std::uint64_t{1} << 62))
    throw InvalidArgument("prime field modulus must be below 2^62");
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  return GroundField(FieldKind::Prime, p, nullptr);
}

GroundField GroundField::extension(std::uint64_t p,
                                   std::span<const std::uint64_t> modulus) {
  GroundField base = prime(p);
  const int k = static_cast<int>(modulus.size());
  if (k != 2 && k != 3)
    throw InvalidArgument("extension degree must be 2 or 3");
  if (p >= (std::uint64_t{1} << 40))
    throw InvalidArgument("extension fields require p < 2^40");
  modpoly::Poly g(modulus.begin(), modulus.end());
  for (auto& c : g) c %= p;
  g.push_back(1);
  // Degree <= 3: irreducible iff rootless.
  Rng rng(p);
  if (!modpoly::roots(g, p, rng).empty())
    throw InvalidArgument("extension modulus is reducible mod " + std::to_string(p));
  ExtensionSpec spec{base.p_, k, {0, 0, 0}};
  for (int i = 0; i < k; ++i) spec.modulus[i] = g[i];
  return GroundField(FieldKind::Extension, p, intern(spec));
}

GroundField GroundField::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.starts_with("Fp:")) {
    auto digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
      throw InvalidArgument("malformed field descriptor '" + std::string(text) + "'");
    return prime(p);
  }
  throw InvalidArgument("unknown field descriptor '" + std::string(text) +
                        "' (expected Q or Fp:<p>)");
}

u128 GroundField::order() const {
  if (!is_finite()) throw InvalidArgument("Q has no finite order");
  u128 q = 1;
  for (int i = 0; i < degree(); ++i) q *= p_;
  return q;
}

std::string GroundField::name() const {
  switch (kind_) {
    case FieldKind::Rationals:
      return "Q";
    case FieldKind::Prime:
      return "Fp:" + std::to_string(p_);
    case FieldKind::Extension: {
      std::string s = "Fp^" + std::to_string(ext_->degree) + ":" + std::to_string(p_) + ":[";
      for (int i = 0; i < ext_->degree; ++i) {
        if (i) s += ",";
        s += std::to_string(ext_->modulus[i]);
      }
      return s + "]";
    }
  }
  return "?";
}

Scalar GroundField::zero() const { return from_int(0); }
Scalar GroundField::one() const { return from_int(1); }

Scalar GroundField::from_int(std::int64_t n) const {
  switch (kind_) {
    case FieldKind::Rationals:
      return Scalar(mpq_class(static_cast<long>(n)));
    case FieldKind::Prime:
    case FieldKind::Extension: {
      std::uint64_t v;
      if (n >= 0) {
        v = static_cast<std::uint64_t>(n) % p_;
      } else {
        const std::uint64_t magnitude = static_cast<std::uint64_t>(-(n + 1)) + 1;
        v = (p_ - magnitude % p_) % p_;
      }
      if (kind_ == FieldKind::Prime) return Scalar(Scalar::Residue{v, p_});
      return Scalar(Scalar::ExtResidue{{v, 0, 0}, ext_});
    }
  }
  return {};
}

Scalar GroundField::from_fraction(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw DivisionByZero("zero denominator");
  return from_int(num) / from_int(den);
}

Scalar GroundField::parse_element(std::string_view text) const {
  auto fail = [&] {
    throw InvalidArgument("cannot parse '" + std::string(text) + "' as an element of " + name());
  };
  std::string s(text);
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s.empty()) fail();
  if (s.front() == '[') {
    if (kind_ != FieldKind::Extension || s.back() != ']') fail();
    std::vector<std::string> parts;
    std::stringstream ss(s.substr(1, s.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (static_cast<int>(parts.size()) != ext_->degree) fail();
    Scalar acc = zero();
    Scalar power = one();
    const GroundField base(FieldKind::Prime, p_, nullptr);
    for (const auto& part : parts) {
      acc += embed(base.parse_element(part)) * power;
      power *= generator();
    }
    return acc;
  }
  mpq_class q;
  try {
    if (q.set_str(s, 10) != 0) fail();
  } catch (const std::invalid_argument&) {
    fail();
  }
  if (q.get_den() == 0) throw DivisionByZero("zero denominator in '" + s + "'");
  q.canonicalize();
  if (kind_ == FieldKind::Rationals) return Scalar(q);
  const std::uint64_t num = reduce_mpz(q.get_num(), p_);
  const std::uint64_t den = reduce_mpz(q.get_den(), p_);
  if (den == 0) throw DivisionByZero("denominator vanishes mod " + std::to_string(p_));
  const std::uint64_t v = mulmod(num, powmod_u64(den, p_ - 2, p_), p_);
  if (kind_ == FieldKind::Prime) return Scalar(Scalar::Residue{v, p_});
  return Scalar(Scalar::ExtResidue{{v, 0, 0}, ext_});
}

Scalar GroundField::random(Rng& rng) const {
  switch (kind_) {
    case FieldKind::Rationals: {
      const auto num = rng.between(-9, 9);
      const auto den = rng.between(1, 4);
      mpq_class q(static_cast<long>(num), static_cast<unsigned long>(den));
      q.canonicalize();
      return Scalar(q);
    }
    case FieldKind::Prime:
      return Scalar(Scalar::Residue{rng.below(p_), p_});
    case FieldKind::Extension: {
      Scalar::ExtResidue e{{0, 0, 0}, ext_};
      for (int i = 0; i < ext_->degree; ++i) e.c[i] = rng.below(p_);
      return Scalar(e);
    }
  }
  return {};
}

Scalar GroundField::random_nonzero(Rng& rng) const {
  for (;;) {
    Scalar x = random(rng);
    if (!x.is_zero()) return x;
  }
}

Scalar GroundField::generator() const {
  if (kind_ != FieldKind::Extension) throw InvalidArgument("generator() needs an extension field");
  return Scalar(Scalar::ExtResidue{{0, 1, 0}, ext_});
}

Scalar GroundField::embed(const Scalar& x) const {
  if (x.field() == *this) return x;
  if (kind_ == FieldKind::Extension && x.field() == GroundField(FieldKind::Prime, p_, nullptr))
    return Scalar(Scalar::ExtResidue{{x.residue(), 0, 0}, ext_});
  throw FieldMismatch("cannot embed " + x.field().name() + " into " + name());
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(mpq_class q) : rep_(std::move(q)) {
  std::get<mpq_class>(rep_).canonicalize();
}

GroundField Scalar::field() const {
  if (auto* r = std::get_if<Residue>(&rep_))
    return GroundField(FieldKind::Prime, r->p, nullptr);
  if (auto* e = std::get_if<ExtResidue>(&rep_))
    return GroundField(FieldKind::Extension, e->spec->p, e->spec);
  return GroundField::rationals();
}

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<Residue>(&rep_)) return r->v == 0;
  if (auto* e = std::get_if<ExtResidue>(&rep_)) return ext_is_zero(*e);
  return sgn(std::get<mpq_class>(rep_)) == 0;
}

bool Scalar::is_one() const {
  if (auto* r = std::get_if<Residue>(&rep_)) return r->v == 1;
  if (auto* e = std::get_if<ExtResidue>(&rep_)) return e->c[0] == 1 && e->c[1] == 0 && e->c[2] == 0;
  return std::get<mpq_class>(rep_) == 1;
}

Scalar Scalar::operator-() const {
  if (auto* r = std::get_if<Residue>(&rep_)) return Scalar(Residue{submod(0, r->v, r->p), r->p});
  if (auto* e = std::get_if<ExtResidue>(&rep_)) {
    ExtResidue n = *e;
    for (auto& c : n.c) c = submod(0, c, e->spec->p);
    return Scalar(n);
  }
  return Scalar(mpq_class(-std::get<mpq_class>(rep_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (rep_.index() != o.rep_.index()) mismatch();
  if (auto* r = std::get_if<Residue>(&rep_)) {
    const auto& b = std::get<Residue>(o.rep_);
    if (r->p != b.p) mismatch();
    r->v = addmod(r->v, b.v, r->p);
  } else if (auto* e = std::get_if<ExtResidue>(&rep_)) {
    const auto& b = std::get<ExtResidue>(o.rep_);
    if (e->spec != b.spec) mismatch();
    for (int i = 0; i < 3; ++i) e->c[i] = addmod(e->c[i], b.c[i], e->spec->p);
  } else {
    std::get<mpq_class>(rep_) += std::get<mpq_class>(o.rep_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (rep_.index() != o.rep_.index()) mismatch();
  if (auto* r = std::get_if<Residue>(&rep_)) {
    const auto& b = std::get<Residue>(o.rep_);
    if (r->p != b.p) mismatch();
    r->v = submod(r->v, b.v, r->p);
  } else if (auto* e = std::get_if<ExtResidue>(&rep_)) {
    const auto& b = std::get<ExtResidue>(o.rep_);
    if (e->spec != b.spec) mismatch();
    for (int i = 0; i < 3; ++i) e->c[i] = submod(e->c[i], b.c[i], e->spec->p);
  } else {
    std::get<mpq_class>(rep_) -= std::get<mpq_class>(o.rep_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (rep_.index() != o.rep_.index()) mismatch();
  if (auto* r = std::get_if<Residue>(&rep_)) {
    const auto& b = std::get<Residue>(o.rep_);
    if (r->p != b.p) mismatch();
    r->v = mulmod(r->v, b.v, r->p);
  } else if (auto* e = std::get_if<ExtResidue>(&rep_)) {
    const auto& b = std::get<ExtResidue>(o.rep_);
    if (e->spec != b.spec) mismatch();
    *e = ext_mul(*e, b);
  } else {
    std::get<mpq_class>(rep_) *= std::get<mpq_class>(o.rep_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.rep_.index() != b.rep_.index()) return false;
  if (auto* r = std::get_if<Scalar::Residue>(&a.rep_)) {
    const auto& s = std::get<Scalar::Residue>(b.rep_);
    return r->p == s.p && r->v == s.v;
  }
  if (auto* e = std::get_if<Scalar::ExtResidue>(&a.rep_)) {
    const auto& f = std::get<Scalar::ExtResidue>(b.rep_);
    return e->spec == f.spec && e->c == f.c;
  }
  return std::get<mpq_class>(a.rep_) == std::get<mpq_class>(b.rep_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (auto* r = std::get_if<Residue>(&rep_)) return Scalar(Residue{powmod_u64(r->v, r->p - 2, r->p), r->p});
  if (std::holds_alternative<ExtResidue>(rep_)) return pow(field().order() - 2);
  return Scalar(mpq_class(1 / std::get<mpq_class>(rep_)));
}

Scalar Scalar::pow(u128 e) const {
  if (auto* r = std::get_if<Residue>(&rep_)) return Scalar(Residue{powmod_u64(r->v, e, r->p), r->p});
  Scalar base = *this;
  Scalar acc = field().one();
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

const mpq_class& Scalar::rational() const {
  if (auto* q = std::get_if<mpq_class>(&rep_)) return *q;
  throw FieldMismatch("rational() on a finite-field element");
}

std::uint64_t Scalar::residue() const {
  if (auto* r = std::get_if<Residue>(&rep_)) return r->v;
  throw FieldMismatch("residue() on a non prime-field element");
}

std::array<std::uint64_t, 3> Scalar::coefficients() const {
  if (auto* r = std::get_if<Residue>(&rep_)) return {r->v, 0, 0};
  if (auto* e = std::get_if<ExtResidue>(&rep_)) return e->c;
  throw FieldMismatch("coefficients() on a rational");
}

std::string Scalar::to_string() const {
  if (auto* r = std::get_if<Residue>(&rep_)) return std::to_string(r->v);
  if (auto* e = std::get_if<ExtResidue>(&rep_)) {
    std::string s = "[";
    for (int i = 0; i < e->spec->degree; ++i) {
      if (i) s += ",";
      s += std::to_string(e->c[i]);
    }
    return s + "]";
  }
  return std::get<mpq_class>(rep_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

// ---------------------------------------------------------------------------
// Square classes and roots

std::string SquareClass::to_string() const {
  switch (kind_) {
    case Kind::Square:
      return "square";
    case Kind::NonSquare:
      return "nonsquare";
    case Kind::Rational:
      return squarefree_.get_str();
  }
  return "?";
}

namespace {

// Square-free part of |m| by trial division up to bound.
mpz_class squarefree_part(mpz_class m, std::uint64_t bound) {
  mpz_class result = 1;
  for (std::uint64_t f = 2; f <= bound; f += (f == 2 ? 1 : 2)) {
    const mpz_class fz = to_mpz(f);
    if (fz * fz > m) break;
    int e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), fz.get_mpz_t())) {
      m /= fz;
      ++e;
    }
    if (e % 2) result *= fz;
  }
  if (m == 1) return result;
  const mpz_class b = to_mpz(bound);
  // No factor <= bound remains, so a cofactor below bound^2 is prime.
  if (m <= b * b) return result * m;
  if (mpz_perfect_square_p(m.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    if (r <= b * b) return result;
  }
  throw FactorizationBoundExceeded("cofactor " + m.get_str() +
                                   " is not resolved by trial division up to " +
                                   std::to_string(bound));
}

}  // namespace

SquareClass square_class(const Scalar& a, std::uint64_t bound) {
  if (a.is_zero()) throw ZeroInput("square class of zero");
  const GroundField k = a.field();
  if (k.is_finite()) {
    const Scalar chi = a.pow((k.order() - 1) / 2);
    return chi.is_one() ? SquareClass::square() : SquareClass::non_square();
  }
  const mpq_class& q = a.rational();
  mpz_class m = q.get_num() * q.get_den();
  const int sign = sgn(m);
  m = abs(m);
  mpz_class s = squarefree_part(m, bound);
  return SquareClass::rational(sign < 0 ? mpz_class(-s) : s);
}

std::optional<Scalar> sqrt(const Scalar& a, Rng& rng) {
  const GroundField k = a.field();
  if (a.is_zero()) return a;
  if (!k.is_finite()) {
    const mpq_class& q = a.rational();
    if (q < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) ||
        !mpz_perfect_square_p(q.get_den().get_mpz_t()))
      return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
    return Scalar(mpq_class(n, d));
  }
  const u128 q = k.order();
  if (!a.pow((q - 1) / 2).is_one()) return std::nullopt;

  // Tonelli-Shanks on the cyclic group of order q - 1 = 2^s * t.
  u128 t = q - 1;
  int s = 0;
  while ((t & 1) == 0) {
    t >>= 1;
    ++s;
  }
  Scalar z = k.random_nonzero(rng);
  const Scalar minus_one = -k.one();
  while (!(z.pow((q - 1) / 2) == minus_one)) z = k.random_nonzero(rng);

  int m = s;
  Scalar c = z.pow(t);
  Scalar tt = a.pow(t);
  Scalar r = a.pow((t + 1) / 2);
  while (!tt.is_one()) {
    int i = 0;
    Scalar probe = tt;
    while (!probe.is_one()) {
      probe *= probe;
      ++i;
    }
    Scalar b = c;
    for (int j = 0; j < m - i - 1; ++j) b *= b;
    m = i;
    c = b * b;
    tt *= c;
    r *= b;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// modpoly

namespace modpoly {

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int degree(const Poly& a) { return static_cast<int>(trim(a).size()) - 1; }

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
  return trim(std::move(r));
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = submod(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, p);
  return trim(std::move(r));
}

namespace {

std::pair<Poly, Poly> divmod(Poly a, Poly b, std::uint64_t p) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  const std::uint64_t lead_inv = powmod_u64(b.back(), p - 2, p);
  Poly q(a.size() - b.size() + 1, 0);
  for (std::size_t i = a.size(); i-- >= b.size();) {
    const std::uint64_t coef = mulmod(a[i], lead_inv, p);
    q[i - (b.size() - 1)] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t idx = i - (b.size() - 1) + j;
      a[idx] = submod(a[idx], mulmod(coef, b[j], p), p);
    }
  }
  a.resize(b.size() - 1);
  return {trim(std::move(q)), trim(std::move(a))};
}

}  // namespace

Poly rem(const Poly& a, const Poly& b, std::uint64_t p) { return divmod(a, b, p).second; }

Poly monic(const Poly& a, std::uint64_t p) {
  Poly r = trim(a);
  if (r.empty()) return r;
  const std::uint64_t inv = powmod_u64(r.back(), p - 2, p);
  for (auto& c : r) c = mulmod(c, inv, p);
  return r;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Poly powmod(const Poly& base, u128 e, const Poly& mod, std::uint64_t p) {
  Poly result = rem(Poly{1}, mod, p);
  Poly b = rem(base, mod, p);
  while (e) {
    if (e & 1) result = rem(mul(result, b, p), mod, p);
    b = rem(mul(b, b, p), mod, p);
    e >>= 1;
  }
  return result;
}

namespace {

void split_roots(const Poly& g, std::uint64_t p, Rng& rng, std::vector<std::uint64_t>& out) {
  const int d = degree(g);
  if (d <= 0) return;
  if (d == 1) {
    const Poly m = monic(g, p);
    out.push_back(submod(0, m[0], p));
    return;
  }
  for (;;) {
    const std::uint64_t a = rng.below(p);
    Poly h = powmod(Poly{a, 1}, (p - 1) / 2, g, p);
    h = gcd(g, sub(h, Poly{1}, p), p);
    const int dh = degree(h);
    if (dh > 0 && dh < d) {
      split_roots(h, p, rng, out);
      split_roots(divmod(g, h, p).first, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::uint64_t> roots(const Poly& f, std::uint64_t p, Rng& rng) {
  const Poly fm = monic(f, p);
  if (degree(fm) <= 0) return {};
  // gcd with x^p - x isolates the product of the linear factors.
  Poly xp = powmod(Poly{0, 1}, p, fm, p);
  Poly g = gcd(fm, sub(xp, Poly{0, 1}, p), p);
  std::vector<std::uint64_t> out;
  split_roots(g, p, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Poly> factor_small(const Poly& f, std::uint64_t p, Rng& rng) {
  Poly rest = monic(f, p);
  if (degree(rest) > 3) throw InvalidArgument("factor_small handles degree <= 3");
  std::vector<Poly> factors;
  for (std::uint64_t r : roots(rest, p, rng)) {
    Poly lin{submod(0, r, p), 1};
    factors.push_back(lin);
    rest = divmod(rest, lin, p).first;
  }
  if (degree(rest) > 0) factors.push_back(rest);
  std::sort(factors.begin(), factors.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return factors;
}

}  // namespace modpoly

}  // namespace albert
