#include "h8mp/hopf.hpp"

#include <algorithm>

#include "h8mp/solver.hpp"

namespace h8mp {

int HopfData::index_of(const std::string& name) const {
  for (int i = 0; i < dim; ++i)
    if (basis_names[i] == name) return i;
  throw ParseError("unknown basis name '" + name + "'");
}

std::vector<std::vector<DeltaTerm>> sparse_comult(const HopfData& H) {
  std::vector<std::vector<DeltaTerm>> out(H.dim);
  for (int i = 0; i < H.dim; ++i)
    for (int a = 0; a < H.dim; ++a)
      for (int b = 0; b < H.dim; ++b) {
        const FieldElement& c = H.comult[i][a * H.dim + b];
        if (!c.is_zero()) out[i].push_back({a, b, c});
      }
  return out;
}

bool elt_is_zero(const Elt& x) {
  for (const auto& c : x)
    if (!c.is_zero()) return false;
  return true;
}

std::string elt_str(const HopfData& H, const Elt& x) {
  std::string s;
  for (int i = 0; i < H.dim; ++i) {
    if (x[i].is_zero()) continue;
    std::string c = x[i].str();
    if (!s.empty()) s += " + ";
    if (c == "1")
      s += H.basis_names[i];
    else
      s += "(" + c + ") " + H.basis_names[i];
  }
  return s.empty() ? "0" : s;
}

namespace {

bool vec_eq(const Elt& a, const Elt& b) { return a == b; }

std::string pair_name(const HopfData& H, int i, int j) {
  return "(" + H.basis_names[i] + ", " + H.basis_names[j] + ")";
}

}  // namespace

AxiomReport verify_hopf_axioms(const HopfData& H) {
  AxiomReport rep;
  int n = H.dim;
  auto add = [&](const std::string& axiom, bool ok, std::string witness) {
    rep.checks.push_back({axiom, ok, ok ? "" : std::move(witness)});
  };

  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        for (int k = 0; k < n && ok; ++k) {
          Elt lhs = hopf_multiply(H, hopf_multiply(H, H.basis_elt(i), H.basis_elt(j)),
                                  H.basis_elt(k));
          Elt rhs = hopf_multiply(H, H.basis_elt(i),
                                  hopf_multiply(H, H.basis_elt(j), H.basis_elt(k)));
          if (!vec_eq(lhs, rhs)) {
            ok = false;
            w = "(" + H.basis_names[i] + ", " + H.basis_names[j] + ", " + H.basis_names[k] + ")";
          }
        }
    add("associativity", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i) {
      if (!vec_eq(hopf_multiply(H, H.unit, H.basis_elt(i)), H.basis_elt(i)) ||
          !vec_eq(hopf_multiply(H, H.basis_elt(i), H.unit), H.basis_elt(i))) {
        ok = false;
        w = H.basis_names[i];
      }
    }
    add("unit laws", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i) {
      // (Delta (x) id) Delta = (id (x) Delta) Delta on e_i.
      Elt lhs = hopf_comult2(H, H.basis_elt(i));
      Elt d = hopf_comultiply(H, H.basis_elt(i));
      Elt rhs(n * n * n);
      for (int p = 0; p < n; ++p)
        for (int j = 0; j < n; ++j) {
          if (d[p * n + j].is_zero()) continue;
          for (int q = 0; q < n; ++q)
            for (int s = 0; s < n; ++s) {
              if (H.comult[j][q * n + s].is_zero()) continue;
              rhs[(p * n + q) * n + s] += d[p * n + j] * H.comult[j][q * n + s];
            }
        }
      if (!vec_eq(lhs, rhs)) {
        ok = false;
        w = H.basis_names[i];
      }
    }
    add("coassociativity", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i) {
      Elt d = hopf_comultiply(H, H.basis_elt(i));
      Elt left(n), right(n);
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          if (d[p * n + q].is_zero()) continue;
          left[q] += d[p * n + q] * H.counit[p];
          right[p] += d[p * n + q] * H.counit[q];
        }
      if (!vec_eq(left, H.basis_elt(i)) || !vec_eq(right, H.basis_elt(i))) {
        ok = false;
        w = H.basis_names[i];
      }
    }
    add("counit laws", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        Elt prod = hopf_multiply(H, H.basis_elt(i), H.basis_elt(j));
        Elt lhs = hopf_comultiply(H, prod);
        Elt rhs = tensor_square_multiply(H, H.comult[i], H.comult[j]);
        if (!vec_eq(lhs, rhs)) {
          ok = false;
          w = pair_name(H, i, j);
        }
      }
    if (ok && !vec_eq(hopf_comultiply(H, H.unit), tensor_of(H.unit, H.unit))) {
      ok = false;
      w = "unit";
    }
    add("comultiplication is an algebra morphism", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        Elt prod = hopf_multiply(H, H.basis_elt(i), H.basis_elt(j));
        if (hopf_counit(H, prod) != H.counit[i] * H.counit[j]) {
          ok = false;
          w = pair_name(H, i, j);
        }
      }
    if (ok && !hopf_counit(H, H.unit).is_one()) {
      ok = false;
      w = "unit";
    }
    add("counit is an algebra morphism", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i) {
      Elt lhs(n), rhs(n);
      const Elt& d = H.comult[i];
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          if (d[p * n + q].is_zero()) continue;
          Elt sp = hopf_antipode(H, H.basis_elt(p));
          Elt sq = hopf_antipode(H, H.basis_elt(q));
          Elt l = hopf_multiply(H, sp, H.basis_elt(q));
          Elt r = hopf_multiply(H, H.basis_elt(p), sq);
          for (int k = 0; k < n; ++k) {
            lhs[k] += d[p * n + q] * l[k];
            rhs[k] += d[p * n + q] * r[k];
          }
        }
      Elt target(n);
      for (int k = 0; k < n; ++k) target[k] = H.counit[i] * H.unit[k];
      if (!vec_eq(lhs, target) || !vec_eq(rhs, target)) {
        ok = false;
        w = H.basis_names[i];
      }
    }
    add("antipode law", ok, w);
  }
  return rep;
}

GroupLikeResult group_likes(const HopfData& H) {
  int n = H.dim;
  PolySystem sys;
  for (int i = 0; i < n; ++i) sys.add_var("x" + std::to_string(i + 1));
  Coords<Poly> x(n);
  for (int i = 0; i < n; ++i) x[i] = Poly::variable(i);
  Coords<Poly> delta = hopf_comultiply(H, x);
  Coords<Poly> xx = tensor_of(x, x);
  for (int t = 0; t < n * n; ++t) sys.add(delta[t] - xx[t]);
  sys.add(hopf_counit(H, x) - Poly::constant(FieldElement::one()));

  SolutionSet sols = solve_system(sys);
  GroupLikeResult res;
  res.complete = sols.complete;
  for (const Assignment& a : sols.solutions) {
    Elt e(n);
    for (int i = 0; i < n; ++i) {
      auto it = a.find(i);
      if (it != a.end()) e[i] = it->second;
    }
    res.elements.push_back(std::move(e));
  }
  std::sort(res.elements.begin(), res.elements.end());
  return res;
}

}  // namespace h8mp
