#include "h8mp/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace h8mp {

boost::container::small_vector<std::pair<int, int>, 4> Monomial::factors() const {
  boost::container::small_vector<std::pair<int, int>, 4> out;
  int d = degree();
  for (int k = d - 1; k >= 0; --k) {  // letters descend, so walk backwards
    int v = letter(k) - 1;
    if (!out.empty() && out.back().first == v)
      ++out.back().second;
    else
      out.emplace_back(v, 1);
  }
  return out;
}

Monomial Monomial::operator*(const Monomial& o) const {
  int da = degree(), db = o.degree();
  if (da + db > 7) throw std::overflow_error("monomial degree exceeds the packed capacity");
  std::uint64_t k = std::uint64_t(da + db) << 56;
  int ia = 0, ib = 0;
  for (int pos = 0; pos < da + db; ++pos) {
    int la = ia < da ? letter(ia) : -1;
    int lb = ib < db ? o.letter(ib) : -1;
    int take;
    if (la >= lb) {
      take = la;
      ++ia;
    } else {
      take = lb;
      ++ib;
    }
    k |= std::uint64_t(take) << (48 - 8 * pos);
  }
  Monomial r;
  r.key = k;
  return r;
}

Monomial Monomial::div_var(int v) const {
  int d = degree();
  std::uint64_t k = std::uint64_t(d - 1) << 56;
  bool removed = false;
  int pos = 0;
  for (int t = 0; t < d; ++t) {
    int l = letter(t);
    if (!removed && l == v + 1) {
      removed = true;
      continue;
    }
    k |= std::uint64_t(l) << (48 - 8 * pos);
    ++pos;
  }
  Monomial r;
  r.key = k;
  return r;
}

Poly Poly::constant(const FieldElement& c) {
  Poly p;
  if (!c.is_zero()) p.t_.emplace_back(Monomial::one(), c);
  return p;
}

Poly Poly::variable(int v) {
  Poly p;
  p.t_.emplace_back(Monomial::var(v), FieldElement::one());
  return p;
}

std::set<int> Poly::vars() const {
  std::set<int> s;
  for (auto& [m, c] : t_)
    for (int k = 0; k < m.degree(); ++k) s.insert(m.letter(k) - 1);
  return s;
}

void Poly::add_term(const Monomial& m, const FieldElement& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(t_.begin(), t_.end(), m,
                             [](const Term& t, const Monomial& mm) { return t.first < mm; });
  if (it != t_.end() && it->first == m) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  } else {
    t_.insert(it, Term{m, c});
  }
}

void Poly::add_scaled(const Poly& p, const FieldElement& c) {
  if (p.is_zero() || c.is_zero()) return;
  if (t_.empty()) {
    t_.reserve(p.t_.size());
    for (const Term& t : p.t_) t_.emplace_back(t.first, t.second * c);
    return;
  }
  Terms merged;
  merged.reserve(t_.size() + p.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() || j < p.t_.size()) {
    if (j == p.t_.size() || (i < t_.size() && t_[i].first < p.t_[j].first)) {
      merged.push_back(std::move(t_[i++]));
    } else if (i == t_.size() || p.t_[j].first < t_[i].first) {
      merged.emplace_back(p.t_[j].first, p.t_[j].second * c);
      ++j;
    } else {
      FieldElement sum = t_[i].second + p.t_[j].second * c;
      if (!sum.is_zero()) merged.emplace_back(t_[i].first, std::move(sum));
      ++i;
      ++j;
    }
  }
  t_ = std::move(merged);
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r.add_scaled(o, FieldElement::one());
  return r;
}

Poly& Poly::operator-=(const Poly& o) {
  add_scaled(o, -FieldElement::one());
  return *this;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r.add_scaled(o, -FieldElement::one());
  return r;
}

Poly Poly::operator-() const {
  Poly r;
  r.t_.reserve(t_.size());
  for (const Term& t : t_) r.t_.emplace_back(t.first, -t.second);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  if (o.is_constant()) return *this * o.constant_value();
  if (is_constant()) return o * constant_value();
  Poly r;
  Terms scratch;
  scratch.reserve(t_.size() * o.t_.size());
  for (const Term& a : t_)
    for (const Term& b : o.t_) scratch.emplace_back(a.first * b.first, a.second * b.second);
  std::sort(scratch.begin(), scratch.end(),
            [](const Term& x, const Term& y) { return x.first.key < y.first.key; });
  for (Term& t : scratch) {
    if (!r.t_.empty() && r.t_.back().first == t.first) {
      r.t_.back().second += t.second;
      if (r.t_.back().second.is_zero()) r.t_.pop_back();
    } else if (!t.second.is_zero()) {
      r.t_.push_back(std::move(t));
    }
  }
  return r;
}

Poly Poly::operator*(const FieldElement& c) const {
  if (c.is_zero()) return Poly();
  Poly r;
  r.t_.reserve(t_.size());
  for (const Term& t : t_) r.t_.emplace_back(t.first, t.second * c);
  return r;
}

Poly Poly::substitute(int v, const Poly& repl) const {
  Poly r;
  for (auto& [m, c] : t_) {
    if (!m.contains(v)) {
      r.add_term(m, c);
      continue;
    }
    int e = 0;
    Monomial rest = m;
    while (rest.contains(v)) {
      rest = rest.div_var(v);
      ++e;
    }
    Poly p;
    p.t_.emplace_back(rest, c);
    for (int k = 0; k < e; ++k) p = p * repl;
    r += p;
  }
  return r;
}

FieldElement Poly::eval(const std::map<int, FieldElement>& assignment) const {
  FieldElement total;
  for (auto& [m, c] : t_) {
    FieldElement term = c;
    for (int k = 0; k < m.degree(); ++k) {
      auto it = assignment.find(m.letter(k) - 1);
      term *= (it != assignment.end()) ? it->second : FieldElement();
    }
    total += term;
  }
  return total;
}

Poly Poly::monic() const {
  if (t_.empty() || leading_coeff().is_one()) return *this;
  return *this * leading_coeff().inv();
}

Poly Poly::homogeneous_part(int d) const {
  Poly r;
  for (auto& [m, c] : t_)
    if (m.degree() == d) r.t_.emplace_back(m, c);
  return r;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::string s;
  // Print highest-degree terms first.
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    std::string term = "(" + it->second.str() + ")";
    for (auto& [v, e] : it->first.factors()) {
      term += "*" + (v < static_cast<int>(names.size()) ? names[v] : "x" + std::to_string(v));
      if (e > 1) term += "^" + std::to_string(e);
    }
    if (!s.empty()) s += " + ";
    s += term;
  }
  return s;
}

}  // namespace h8mp
