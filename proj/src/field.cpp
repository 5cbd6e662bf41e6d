#include "h8mp/field.hpp"

#include <algorithm>
#include <utility>

namespace h8mp {

FieldElement FieldElement::zeta(int k) {
  int e = ((k % 8) + 8) % 8;
  FieldElement r;
  Rational sign(1);
  if (e >= 4) {
    e -= 4;
    sign = -1;
  }
  r.c_[e] = sign;
  return r;
}

bool FieldElement::is_zero() const {
  return rational_is_zero(c_[0]) && rational_is_zero(c_[1]) && rational_is_zero(c_[2]) &&
         rational_is_zero(c_[3]);
}

bool FieldElement::is_rational() const {
  return c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  FieldElement r;
  for (int k = 0; k < 4; ++k) r.c_[k] = c_[k] + o.c_[k];
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  FieldElement r;
  for (int k = 0; k < 4; ++k) r.c_[k] = c_[k] - o.c_[k];
  return r;
}

FieldElement FieldElement::operator-() const {
  FieldElement r;
  for (int k = 0; k < 4; ++k) r.c_[k] = -c_[k];
  return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  // Polynomial product reduced by w^4 = -1.
  std::array<Rational, 7> p{};
  for (int a = 0; a < 4; ++a) {
    if (c_[a] == 0) continue;
    for (int b = 0; b < 4; ++b) {
      if (o.c_[b] == 0) continue;
      p[a + b] += c_[a] * o.c_[b];
    }
  }
  FieldElement r;
  for (int k = 0; k < 4; ++k) r.c_[k] = std::move(p[k]);
  for (int k = 4; k < 7; ++k) r.c_[k - 4] -= p[k];
  return r;
}

FieldElement FieldElement::galois(int k) const {
  FieldElement r;
  for (int e = 0; e < 4; ++e) {
    if (c_[e] == 0) continue;
    FieldElement t = zeta(e * k);
    for (int j = 0; j < 4; ++j) r.c_[j] += c_[e] * t.c_[j];
  }
  return r;
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw ZeroInverse();
  FieldElement conj = galois(3) * galois(5) * galois(7);
  FieldElement norm = *this * conj;
  // The norm lies in Q.
  const Rational& n = norm.c_[0];
  FieldElement r;
  for (int k = 0; k < 4; ++k) r.c_[k] = conj.c_[k] / n;
  return r;
}

namespace {

// Elements of the subfield Q(i), i = w^2, as (re, im).
struct QI {
  Rational re, im;
  bool is_zero() const { return re == 0 && im == 0; }
  QI operator+(const QI& o) const { return {re + o.re, im + o.im}; }
  QI operator-(const QI& o) const { return {re - o.re, im - o.im}; }
  QI operator*(const QI& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  QI operator-() const { return {-re, -im}; }
  QI div(const Rational& d) const { return {re / d, im / d}; }
};

// All square roots of x inside Q(i).
std::vector<QI> qi_sqrt(const QI& x) {
  std::vector<QI> out;
  if (x.is_zero()) {
    out.push_back({Rational(0), Rational(0)});
    return out;
  }
  if (x.im == 0) {
    Rational s;
    if (rational_sqrt(x.re, s)) {
      out.push_back({s, Rational(0)});
      out.push_back({-s, Rational(0)});
    } else if (rational_sqrt(-x.re, s)) {
      out.push_back({Rational(0), s});
      out.push_back({Rational(0), -s});
    }
    return out;
  }
  // y = p + qi with p^2 - q^2 = re, 2pq = im. Then (p^2 + q^2)^2 = re^2 + im^2.
  Rational n;
  if (!rational_sqrt(x.re * x.re + x.im * x.im, n)) return out;
  for (int sign = 0; sign < 2; ++sign) {
    Rational p2 = (x.re + (sign ? -n : n)) / 2;
    Rational p;
    if (p2 > 0 && rational_sqrt(p2, p)) {
      Rational q = x.im / (2 * p);
      if (p * p - q * q == x.re) {
        out.push_back({p, q});
        out.push_back({-p, -q});
        return out;
      }
    }
  }
  return out;
}

QI re_part(const FieldElement& a) { return {a.coeff(0), a.coeff(2)}; }
QI zeta_part(const FieldElement& a) { return {a.coeff(1), a.coeff(3)}; }

FieldElement from_tower(const QI& p, const QI& q) {
  // p + q*w with p, q in Q(i), i = w^2 (so the i-component of q lands on w^3).
  return FieldElement(p.re, q.re, p.im, q.im);
}

}  // namespace

std::vector<FieldElement> FieldElement::sqrt() const {
  // Write this = u + v*w with u, v in Q(i); seek x = P + Q*w, so that
  // x^2 = (P^2 + i*Q^2) + 2PQ*w.
  std::vector<FieldElement> out;
  auto push_unique = [&](const FieldElement& r) {
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  };
  QI u = re_part(*this), v = zeta_part(*this);
  QI qi_i{Rational(0), Rational(1)};
  if (v.is_zero()) {
    for (const QI& p : qi_sqrt(u)) push_unique(from_tower(p, {Rational(0), Rational(0)}));
    // x = Q*w: i*Q^2 = u, i.e. Q^2 = -i*u.
    for (const QI& q : qi_sqrt(-(qi_i * u))) push_unique(from_tower({Rational(0), Rational(0)}, q));
  } else {
    // Q = v/(2P) and P^2 is a root of 4t^2 - 4ut + iv^2 = 0.
    QI d = u * u - qi_i * v * v;
    for (const QI& t : qi_sqrt(d)) {
      QI p2 = (u + t).div(Rational(2));
      for (const QI& p : qi_sqrt(p2)) {
        if (p.is_zero()) continue;
        // Q = v / (2p) in Q(i).
        QI denom = p * QI{Rational(2), Rational(0)};
        Rational nrm = denom.re * denom.re + denom.im * denom.im;
        QI q = (v * QI{denom.re, -denom.im}).div(nrm);
        FieldElement cand = from_tower(p, q);
        if (cand * cand == *this) push_unique(cand);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string FieldElement::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = 0; k < 4; ++k) {
    if (c_[k] == 0) continue;
    std::string term;
    if (denominator(c_[k]) == 1)
      term = numerator(c_[k]).str();
    else
      term = numerator(c_[k]).str() + "/" + denominator(c_[k]).str();
    if (k > 0) {
      if (term == "1")
        term = "";
      else if (term == "-1")
        term = "-";
      else
        term += "*";
      term += "w";
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (!s.empty() && term[0] != '-') s += "+";
    s += term;
  }
  return s;
}

}  // namespace h8mp
