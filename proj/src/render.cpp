#include "h8mp/render.hpp"

#include <algorithm>
#include <sstream>

namespace h8mp {

namespace {

std::string int_str(const Int& n) { return n.str(); }

// Integer-combination rendering of n1*1 + n2*sqrt(-1) + n3*sqrt(2) +
// n4*sqrt(2)sqrt(-1), used for the numerator over a common denominator.
std::string combo_str(const std::array<Int, 4>& num) {
  static const char* symbols[] = {"", "sqrt(-1)", "sqrt(2)", "sqrt(2)sqrt(-1)"};
  std::string s;
  for (int k = 0; k < 4; ++k) {
    if (num[k] == 0) continue;
    std::string coeff = int_str(num[k] < 0 ? -num[k] : num[k]);
    std::string term;
    if (k == 0)
      term = coeff;
    else if (coeff == "1")
      term = symbols[k];
    else
      term = coeff + symbols[k];
    if (s.empty())
      s = (num[k] < 0 ? "-" : "") + term;
    else
      s += (num[k] < 0 ? "-" : "+") + term;
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string pretty_scalar(const FieldElement& f) {
  // Decompose over {1, sqrt(-1), sqrt(2), sqrt(2)sqrt(-1)}.
  Rational x = f.coeff(0);
  Rational y = f.coeff(2);
  Rational u = (f.coeff(1) - f.coeff(3)) / 2;
  Rational v = (f.coeff(1) + f.coeff(3)) / 2;
  std::array<Rational, 4> parts = {x, y, u, v};
  Int den = 1;
  for (const auto& p : parts) den = boost::multiprecision::lcm(den, denominator(p));
  std::array<Int, 4> nums;
  for (int k = 0; k < 4; ++k) nums[k] = numerator(parts[k]) * (den / denominator(parts[k]));
  std::string body = combo_str(nums);
  if (den == 1) return body;
  bool single_term = body.find('+', 1) == std::string::npos &&
                     body.find('-', 1) == std::string::npos;
  if (single_term) return body + "/" + int_str(den);
  return "(" + body + ")/" + int_str(den);
}

std::string pretty_elt(const HopfData& H, const Elt& e) {
  if (elt_is_zero(e)) return "0";
  // z^3 abbreviation on the g,h,z basis.
  static const std::vector<std::string> ghz_names = {"1", "g",  "h",  "gh",
                                                     "z", "gz", "hz", "ghz"};
  if (H.basis_names == ghz_names) {
    Elt z3(8);
    const FieldElement half = FieldElement::half();
    z3[4] = half;
    z3[5] = half;
    z3[6] = half;
    z3[7] = -half;
    static const char* z3_names[] = {"z3", "gz3", "hz3", "ghz3"};
    for (int m = 0; m < 4; ++m) {
      if (e == hopf_multiply(H, H.basis_elt(m), z3)) return z3_names[m];
    }
  }
  std::string s;
  for (int i = 0; i < H.dim; ++i) {
    if (e[i].is_zero()) continue;
    std::string c = pretty_scalar(e[i]);
    std::string term;
    if (c == "1")
      term = H.basis_names[i];
    else if (c == "-1")
      term = "-" + H.basis_names[i];
    else
      term = c + " " + H.basis_names[i];
    if (s.empty())
      s = term;
    else if (term[0] == '-')
      s += " - " + term.substr(1);
    else
      s += " + " + term;
  }
  return s;
}

std::string render_action_table(const HopfData& H, const ActionTable& a,
                                const std::string& title) {
  int n = H.dim;
  std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>(n + 1));
  cells[0][0] = a.side == Side::Left ? "->" : "<-";
  for (int j = 0; j < n; ++j) cells[0][j + 1] = H.basis_names[j];
  for (int i = 0; i < n; ++i) {
    cells[i + 1][0] = H.basis_names[i];
    for (int j = 0; j < n; ++j) cells[i + 1][j + 1] = pretty_elt(H, a.table[i][j]);
  }
  std::vector<size_t> width(n + 1, 0);
  for (const auto& row : cells)
    for (int j = 0; j <= n; ++j) width[j] = std::max(width[j], row[j].size());
  std::ostringstream out;
  out << title << "\n";
  for (int r = 0; r <= n; ++r) {
    for (int j = 0; j <= n; ++j) {
      std::string c = cells[r][j];
      c.resize(width[j], ' ');
      out << c << (j == n ? "" : " | ");
    }
    out << "\n";
    if (r == 0) {
      for (int j = 0; j <= n; ++j) {
        out << std::string(width[j], '-') << (j == n ? "" : "-+-");
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace h8mp
