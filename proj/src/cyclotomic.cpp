#include "metabel/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace metabel {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

long degree_of(const RatPoly& p) {
  for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

// Exact division of integer polynomials (ascending coefficients), b monic.
std::vector<Integer> divide_exact(std::vector<Integer> a, const std::vector<Integer>& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {Integer(0)};
  std::vector<Integer> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    Integer c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

std::unique_ptr<CycloField> make_field(long level) {
  auto field = std::make_unique<CycloField>();
  field->level = level;
  // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d
  std::vector<Integer> num(level + 1, 0);
  num[0] = -1;
  num[level] = 1;
  for (long d = 1; d < level; ++d) {
    if (level % d != 0) continue;
    num = divide_exact(std::move(num), cyclo_field(d).modulus);
  }
  field->modulus = std::move(num);
  field->degree = static_cast<long>(field->modulus.size()) - 1;
  return field;
}

// Reduce p modulo the monic modulus of `field`; result has length degree.
RatPoly reduce(RatPoly p, const CycloField& field) {
  const long deg = field.degree;
  const auto& m = field.modulus;
  for (long i = static_cast<long>(p.size()) - 1; i >= deg; --i) {
    if (p[i] == 0) continue;
    Rational c = p[i];
    for (long j = 0; j <= deg; ++j) p[i - deg + j] -= c * m[j];
  }
  p.resize(deg);
  return p;
}

void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  r = a;
  trim(r);
  const long db = degree_of(b);
  long dr = degree_of(r);
  q.assign(std::max<long>(dr - db + 1, 1), Rational(0));
  while (dr >= db && dr >= 0) {
    Rational c = r[dr] / b[db];
    q[dr - db] = c;
    for (long j = 0; j <= db; ++j) r[dr - db + j] -= c * b[j];
    dr = degree_of(r);
  }
  trim(r);
}

RatPoly poly_sub_mul(const RatPoly& a, const RatPoly& q, const RatPoly& b) {
  RatPoly out(std::max(a.size(), q.size() + b.size() - 1), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  }
  trim(out);
  return out;
}

}  // namespace

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

long lcm_level(long a, long b) { return std::lcm(a, b); }

const CycloField& cyclo_field(long level) {
  if (level < 1) throw std::invalid_argument("cyclotomic level must be positive");
  static std::recursive_mutex mutex;
  static std::map<long, std::unique_ptr<CycloField>> registry;
  std::lock_guard<std::recursive_mutex> lock(mutex);
  auto it = registry.find(level);
  if (it != registry.end()) return *it->second;
  auto field = make_field(level);
  const CycloField& ref = *field;
  registry.emplace(level, std::move(field));
  return ref;
}

Cyclotomic::Cyclotomic() : field_(&cyclo_field(1)), coeffs_(1, Rational(0)) {}

Cyclotomic::Cyclotomic(long value) : field_(&cyclo_field(1)), coeffs_(1, Rational(value)) {}

Cyclotomic::Cyclotomic(const Rational& value) : field_(&cyclo_field(1)), coeffs_(1, value) {}

Cyclotomic::Cyclotomic(long level, std::vector<Rational> coefficients) : field_(&cyclo_field(level)) {
  coeffs_ = reduce(std::move(coefficients), *field_);
}

Cyclotomic Cyclotomic::root_of_unity(long level, long k) {
  const CycloField& f = cyclo_field(level);
  long e = ((k % level) + level) % level;
  RatPoly p(std::max(e + 1, f.degree), Rational(0));
  p[e] = 1;
  return Cyclotomic(&f, reduce(std::move(p), f));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && coeffs_[0] == 1; }

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

int Cyclotomic::weight() const {
  int w = 0;
  for (const auto& c : coeffs_)
    if (c != 0) ++w;
  return w;
}

Cyclotomic Cyclotomic::promote(long new_level) const {
  if (new_level == level()) return *this;
  // rationals live in every cyclotomic field
  if (is_rational()) return promote_rational_to(new_level);
  if (new_level % level() != 0)
    throw std::invalid_argument("cannot promote level " + std::to_string(level()) + " to " +
                                std::to_string(new_level));
  const CycloField& target = cyclo_field(new_level);
  const long step = new_level / level();
  RatPoly p((coeffs_.size() - 1) * step + 1, Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) p[j * step] = coeffs_[j];
  if (static_cast<long>(p.size()) < target.degree) p.resize(target.degree, Rational(0));
  return Cyclotomic(&target, reduce(std::move(p), target));
}

void Cyclotomic::align_with(Cyclotomic& other) {
  if (field_ == other.field_) return;
  if (other.is_rational()) {
    if (!is_rational() || level() >= other.level())
      other = other.promote_rational_to(level());
    else
      *this = promote_rational_to(other.level());
    return;
  }
  if (is_rational()) {
    *this = promote_rational_to(other.level());
    return;
  }
  const long l = std::lcm(level(), other.level());
  *this = promote(l);
  other = other.promote(l);
}

Cyclotomic Cyclotomic::promote_rational_to(long new_level) const {
  const CycloField& target = cyclo_field(new_level);
  RatPoly p(target.degree, Rational(0));
  p[0] = coeffs_[0];
  return Cyclotomic(&target, std::move(p));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  Cyclotomic rhs = o;
  align_with(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  Cyclotomic rhs = o;
  align_with(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.is_rational()) {
    const Rational c = o.coeffs_[0];
    if (is_rational() && o.level() > level()) *this = promote_rational_to(o.level());
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  if (is_rational()) {
    const Rational c = coeffs_[0];
    Cyclotomic r = o;
    if (level() > r.level()) r = r.promote(std::lcm(level(), r.level()));
    for (auto& x : r.coeffs_) x *= c;
    *this = std::move(r);
    return *this;
  }
  Cyclotomic rhs = o;
  align_with(rhs);
  const long deg = field_->degree;
  RatPoly prod(2 * deg - 1, Rational(0));
  for (long i = 0; i < deg; ++i) {
    if (coeffs_[i] == 0) continue;
    for (long j = 0; j < deg; ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = reduce(std::move(prod), *field_);
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic number");
  if (is_rational()) {
    Cyclotomic r = *this;
    r.coeffs_[0] = 1 / coeffs_[0];
    return r;
  }
  RatPoly m(field_->modulus.begin(), field_->modulus.end());
  RatPoly r0 = m, r1 = coeffs_;
  trim(r1);
  RatPoly s0{Rational(0)}, s1{Rational(1)};
  while (degree_of(r1) > 0) {
    RatPoly q, r;
    divmod(r0, r1, q, r);
    RatPoly s2 = poly_sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  const Rational c = r1[0];
  for (auto& x : s1) x /= c;
  if (static_cast<long>(s1.size()) < field_->degree) s1.resize(field_->degree, Rational(0));
  return Cyclotomic(field_, reduce(std::move(s1), *field_));
}

Cyclotomic Cyclotomic::conj() const {
  if (is_rational()) return *this;
  const long n = level();
  RatPoly p(n, Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) p[(n - static_cast<long>(j)) % n] += coeffs_[j];
  if (static_cast<long>(p.size()) < field_->degree) p.resize(field_->degree, Rational(0));
  return Cyclotomic(field_, reduce(std::move(p), *field_));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
  const bool ra = a.is_rational(), rb = b.is_rational();
  if (ra && rb) return a.coeffs_[0] == b.coeffs_[0];
  if (ra != rb) return false;
  const long l = std::lcm(a.level(), b.level());
  return a.promote(l).coeffs_ == b.promote(l).coeffs_;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return coeffs_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    const Rational a = abs(c);
    if (j == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "z" << level();
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.to_string(); }

}  // namespace metabel
