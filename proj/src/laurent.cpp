#include "metabel/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace metabel {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(0, Cyclotomic(c));
}

LaurentPoly::LaurentPoly(const Cyclotomic& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(const Cyclotomic& c, int exponent) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.emplace(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(const std::vector<long>& ascending, int lowest) {
  LaurentPoly p;
  for (std::size_t i = 0; i < ascending.size(); ++i)
    if (ascending[i] != 0) p.terms_.emplace(lowest + static_cast<int>(i), Cyclotomic(ascending[i]));
  return p;
}

int LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

Cyclotomic LaurentPoly::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Cyclotomic(0) : it->second;
}

const Cyclotomic& LaurentPoly::leading() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return terms_.rbegin()->second;
}

void LaurentPoly::add_term(int e, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + k, c);
  return p;
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return *this;
  const Cyclotomic inv = leading().inverse();
  const int low = min_exp();
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e - low, c * inv);
  return p;
}

LaurentPoly LaurentPoly::scale_variable(const Cyclotomic& theta) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.add_term(e, c * theta.pow(e));
  return p;
}

Cyclotomic LaurentPoly::evaluate(const Cyclotomic& x) const {
  Cyclotomic v(0);
  for (const auto& [e, c] : terms_) v += c * x.pow(e);
  return v;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly p;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) p.add_term(e1 + e2, c1 * c2);
  *this = std::move(p);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Cyclotomic& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string cs;
    bool negative = false;
    if (c.is_rational()) {
      negative = c.constant_term() < 0;
      cs = (negative ? Rational(-c.constant_term()) : c.constant_term()).get_str();
    } else {
      cs = "(" + c.to_string() + ")";
    }
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    const bool unit_coeff = cs == "1";
    if (e == 0) {
      os << cs;
    } else {
      if (!unit_coeff) os << cs << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

void laurent_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  q = LaurentPoly();
  if (a.is_zero()) {
    r = LaurentPoly();
    return;
  }
  const int low_a = a.min_exp(), low_b = b.min_exp();
  // work with the polynomial parts A = t^{-low_a} a and B = t^{-low_b} b
  LaurentPoly rem = a.shifted(-low_a);
  const LaurentPoly bb = b.shifted(-low_b);
  const int db = bb.max_exp();
  const Cyclotomic lead_inv = bb.leading().inverse();
  LaurentPoly quot;
  while (!rem.is_zero() && rem.max_exp() >= db) {
    const int shift = rem.max_exp() - db;
    const Cyclotomic c = rem.leading() * lead_inv;
    LaurentPoly term = LaurentPoly::monomial(c, shift);
    quot += term;
    rem -= term * bb;
  }
  q = quot.shifted(low_a - low_b);
  r = rem.shifted(low_a);
}

bool laurent_divides(const LaurentPoly& d, const LaurentPoly& a) {
  if (d.is_zero()) return a.is_zero();
  LaurentPoly q, r;
  laurent_divmod(a, d, q, r);
  return r.is_zero();
}

LaurentPoly laurent_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly q, r;
  laurent_divmod(a, b, q, r);
  if (!r.is_zero()) throw std::logic_error("inexact Laurent division");
  return q;
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = a, y = b;
  while (!y.is_zero()) {
    LaurentPoly q, r;
    laurent_divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x.normalized();
}

std::vector<LaurentPoly> laurent_snf(LaurentMatrix A) {
  const std::size_t m = A.rows(), n = A.cols(), k = std::min(m, n);
  auto norm = [](const LaurentPoly& p) { return p.span(); };
  auto add_row = [&](std::size_t i, std::size_t j, const LaurentPoly& q) {
    for (std::size_t c = 0; c < n; ++c)
      if (!A(j, c).is_zero()) A(i, c) += q * A(j, c);
  };
  auto add_col = [&](std::size_t j, std::size_t i, const LaurentPoly& q) {
    for (std::size_t r = 0; r < m; ++r)
      if (!A(r, i).is_zero()) A(r, j) += q * A(r, i);
  };

  for (std::size_t t = 0; t < k; ++t) {
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (A(i, j).is_zero()) continue;
        if (!found || norm(A(i, j)) < norm(A(pi, pj))) {
          found = true;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    A.swap_rows(t, pi);
    A.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A(i, t).is_zero()) continue;
        LaurentPoly q, r;
        laurent_divmod(A(i, t), A(t, t), q, r);
        add_row(i, t, -q);
        if (!A(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A(t, j).is_zero()) continue;
        LaurentPoly q, r;
        laurent_divmod(A(t, j), A(t, t), q, r);
        add_col(j, t, -q);
        if (!A(t, j).is_zero()) clean = false;
      }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (!A(i, t).is_zero() && norm(A(i, t)) < norm(A(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (!A(t, j).is_zero() && norm(A(t, j)) < norm(A(bi, bj))) bi = t, bj = j;
        A.swap_rows(t, bi);
        A.swap_cols(t, bj);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!laurent_divides(A(t, t), A(i, j))) {
            add_row(t, i, LaurentPoly(1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
  }

  std::vector<LaurentPoly> diag(k);
  for (std::size_t t = 0; t < k; ++t) diag[t] = A(t, t).normalized();
  return diag;
}

LaurentPoly laurent_det(LaurentMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return LaurentPoly(1);
  LaurentPoly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return LaurentPoly();
      a.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = laurent_exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
    prev = a(k, k);
  }
  LaurentPoly det = a(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace metabel
