#include "h8mp/coquasi.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace h8mp {

namespace {

const FieldElement kOne = FieldElement::one();

Elt basis8(int i) {
  Elt e(8);
  e[i] = kOne;
  return e;
}

// Basis index of the p-th comatrix generator (0-based p in x11,x12,x21,x22).
int gen_index(int p) { return p + 1; }

// Generator-pair decomposition of the coproduct: Delta(x_pq) = sum_k x_pk (x) x_kq,
// as pairs of 0-based generator ids.
std::vector<std::pair<int, int>> generator_comult(int gen) {
  switch (gen) {
    case 0:  // x11
      return {{0, 0}, {1, 2}};
    case 1:  // x12
      return {{0, 1}, {1, 3}};
    case 2:  // x21
      return {{2, 0}, {3, 2}};
    default:  // x22
      return {{2, 1}, {3, 3}};
  }
}

// The length-2 factorization of the three composite basis elements, as
// 0-based generator ids.
std::pair<int, int> composite_factorization(int basis_idx) {
  switch (basis_idx) {
    case 5:
      return {0, 0};  // x11 * x11
    case 6:
      return {0, 3};  // x11 * x22
    default:
      return {1, 2};  // x12 * x21
  }
}

}  // namespace

std::string CoquasiForm::name() const {
  if (family == Family::Sigma)
    return "sigma(alpha=" + param1.str() + ",beta=" + param2.str() + ")";
  return "tau(gamma=" + param1.str() + ",xi=" + param2.str() + ")";
}

Matrix extend_form(const HopfData& H, const std::array<std::array<FieldElement, 4>, 4>& gv) {
  int n = H.dim;
  Matrix R(n, std::vector<FieldElement>(n));

  // Unit laws of the form: R(1 (x) b) = counit(b), R(a (x) 1) = counit(a).
  for (int j = 0; j < n; ++j) R[0][j] = H.counit[j];
  for (int i = 0; i < n; ++i) R[i][0] = H.counit[i];

  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) R[gen_index(p)][gen_index(q)] = gv[p][q];

  // Generators against composites: R(a (x) bc) = R(a1 (x) c) R(a2 (x) b).
  for (int p = 0; p < 4; ++p)
    for (int comp = 5; comp < 8; ++comp) {
      auto [b, c] = composite_factorization(comp);
      FieldElement v;
      for (auto& [a1, a2] : generator_comult(p))
        v += gv[a1][c] * gv[a2][b];
      R[gen_index(p)][comp] = v;
    }

  // Composites in the first slot: R(ab (x) e) = R(a (x) e1) R(b (x) e2).
  for (int comp = 5; comp < 8; ++comp) {
    auto [a, b] = composite_factorization(comp);
    for (int j = 0; j < n; ++j) {
      FieldElement v;
      const Elt& dj = H.comult[j];
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
          if (dj[s * n + t].is_zero()) continue;
          v += dj[s * n + t] * R[gen_index(a)][s] * R[gen_index(b)][t];
        }
      R[comp][j] = v;
    }
  }

  // Well-definedness: every length-2 generator word, evaluated by peeling,
  // must agree with the value of its normal form, in both tensor slots.
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const Elt& prod = H.mult[gen_index(a)][gen_index(b)];
      for (int e = 0; e < n; ++e) {
        FieldElement lhs;
        const Elt& de = H.comult[e];
        for (int s = 0; s < n; ++s)
          for (int t = 0; t < n; ++t) {
            if (de[s * n + t].is_zero()) continue;
            lhs += de[s * n + t] * R[gen_index(a)][s] * R[gen_index(b)][t];
          }
        FieldElement rhs;
        for (int k = 0; k < n; ++k) rhs += prod[k] * R[k][e];
        if (lhs != rhs)
          throw IllDefined("first-slot factorization of " + H.basis_names[gen_index(a)] + "*" +
                           H.basis_names[gen_index(b)] + " against " + H.basis_names[e]);
        FieldElement lhs2;
        for (int s = 0; s < n; ++s)
          for (int t = 0; t < n; ++t) {
            if (de[s * n + t].is_zero()) continue;
            lhs2 += de[s * n + t] * R[s][gen_index(b)] * R[t][gen_index(a)];
          }
        FieldElement rhs2;
        for (int k = 0; k < n; ++k) rhs2 += prod[k] * R[e][k];
        if (lhs2 != rhs2)
          throw IllDefined("second-slot factorization of " + H.basis_names[gen_index(a)] + "*" +
                           H.basis_names[gen_index(b)] + " against " + H.basis_names[e]);
      }
    }
  return R;
}

namespace {

std::array<std::array<FieldElement, 4>, 4> sigma_generator_values(const FieldElement& alpha,
                                                                  const FieldElement& beta) {
  std::array<std::array<FieldElement, 4>, 4> gv{};
  gv[1][1] = alpha;
  gv[1][2] = beta;
  gv[2][1] = beta;
  gv[2][2] = alpha;
  return gv;
}

std::array<std::array<FieldElement, 4>, 4> tau_generator_values(const FieldElement& gamma,
                                                                const FieldElement& xi) {
  std::array<std::array<FieldElement, 4>, 4> gv{};
  gv[0][0] = gamma;
  gv[0][3] = xi;
  gv[3][0] = -xi;
  gv[3][3] = gamma;
  return gv;
}

}  // namespace

CoquasiForm build_sigma(const HopfData& a12, const FieldElement& alpha,
                        const FieldElement& beta) {
  if (alpha.is_zero() || beta.is_zero() || !(alpha * beta).is_one())
    throw BadParams("sigma requires alpha beta = 1");
  FieldElement ratio = alpha * beta.inv();
  if (ratio * ratio != -kOne) throw BadParams("sigma requires (alpha/beta)^2 = -1");
  CoquasiForm f;
  f.family = CoquasiForm::Family::Sigma;
  f.param1 = alpha;
  f.param2 = beta;
  f.values = extend_form(a12, sigma_generator_values(alpha, beta));
  f.inverse_values = extend_form(a12, sigma_generator_values(alpha.inv(), beta.inv()));
  return f;
}

CoquasiForm build_tau(const HopfData& a12, const FieldElement& gamma, const FieldElement& xi) {
  if (gamma * gamma != kOne || xi * xi != kOne) throw BadParams("tau requires gamma^2 = xi^2 = 1");
  CoquasiForm f;
  f.family = CoquasiForm::Family::Tau;
  f.param1 = gamma;
  f.param2 = xi;
  f.values = extend_form(a12, tau_generator_values(gamma, xi));
  f.inverse_values = extend_form(a12, tau_generator_values(gamma.inv(), xi.inv()));
  return f;
}

std::vector<CoquasiForm> all_coquasi_forms(const HopfData& a12) {
  std::vector<CoquasiForm> out;
  for (int k = 1; k < 8; k += 2) {
    FieldElement alpha = FieldElement::zeta(k);
    out.push_back(build_sigma(a12, alpha, alpha.inv()));
  }
  for (int gs : {1, -1})
    for (int xs : {1, -1})
      out.push_back(build_tau(a12, FieldElement::from_int(gs), FieldElement::from_int(xs)));
  return out;
}

AxiomReport verify_coquasitriangular(const HopfData& H, const CoquasiForm& R) {
  AxiomReport rep;
  int n = H.dim;
  auto add = [&](const std::string& axiom, bool ok, std::string w) {
    rep.checks.push_back({axiom, ok, ok ? "" : std::move(w)});
  };
  auto pair_w = [&](int i, int j) {
    return "(" + H.basis_names[i] + ", " + H.basis_names[j] + ")";
  };

  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        FieldElement conv1, conv2;
        const Elt& di = H.comult[i];
        const Elt& dj = H.comult[j];
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            if (di[p * n + q].is_zero()) continue;
            for (int s = 0; s < n; ++s)
              for (int t = 0; t < n; ++t) {
                if (dj[s * n + t].is_zero()) continue;
                FieldElement c = di[p * n + q] * dj[s * n + t];
                conv1 += c * R.values[p][s] * R.inverse_values[q][t];
                conv2 += c * R.inverse_values[p][s] * R.values[q][t];
              }
          }
        FieldElement target = H.counit[i] * H.counit[j];
        if (conv1 != target || conv2 != target) {
          ok = false;
          w = pair_w(i, j);
        }
      }
    add("convolution inverse", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        Elt lhs(n), rhs(n);
        const Elt& di = H.comult[i];
        const Elt& dj = H.comult[j];
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            if (di[p * n + q].is_zero()) continue;
            for (int s = 0; s < n; ++s)
              for (int t = 0; t < n; ++t) {
                if (dj[s * n + t].is_zero()) continue;
                FieldElement c = di[p * n + q] * dj[s * n + t];
                const Elt& qt = H.mult[q][t];
                const Elt& sp = H.mult[s][p];
                for (int u = 0; u < n; ++u) {
                  lhs[u] += c * R.values[p][s] * qt[u];
                  rhs[u] += c * sp[u] * R.values[q][t];
                }
              }
          }
        if (!(lhs == rhs)) {
          ok = false;
          w = pair_w(i, j);
        }
      }
    add("quasi-commutativity", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int c = 0; c < n && ok; ++c) {
          FieldElement lhs;
          const Elt& bc = H.mult[b][c];
          for (int k = 0; k < n; ++k) lhs += bc[k] * R.values[a][k];
          FieldElement rhs;
          const Elt& da = H.comult[a];
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
              if (da[p * n + q].is_zero()) continue;
              rhs += da[p * n + q] * R.values[p][c] * R.values[q][b];
            }
          if (lhs != rhs) {
            ok = false;
            w = "(" + H.basis_names[a] + ", " + H.basis_names[b] + ", " + H.basis_names[c] + ")";
          }
        }
    add("multiplicativity in the second slot", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int c = 0; c < n && ok; ++c) {
          FieldElement lhs;
          const Elt& ab = H.mult[a][b];
          for (int k = 0; k < n; ++k) lhs += ab[k] * R.values[k][c];
          FieldElement rhs;
          const Elt& dc = H.comult[c];
          for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) {
              if (dc[s * n + t].is_zero()) continue;
              rhs += dc[s * n + t] * R.values[a][s] * R.values[b][t];
            }
          if (lhs != rhs) {
            ok = false;
            w = "(" + H.basis_names[a] + ", " + H.basis_names[b] + ", " + H.basis_names[c] + ")";
          }
        }
    add("multiplicativity in the first slot", ok, w);
  }
  return rep;
}

MatchedPair derive_matched_pair_from_coquasi(const HopfData& H, const CoquasiForm& R) {
  int n = H.dim;
  MatchedPair mp;
  mp.provenance = R.name();
  mp.left.side = Side::Left;
  mp.right.side = Side::Right;
  mp.left.table.assign(n, std::vector<Elt>(n, Elt(n)));
  mp.right.table.assign(n, std::vector<Elt>(n, Elt(n)));

  for (int a = 0; a < n; ++a) {
    const Elt& da = H.comult[a];
    Elt d2a = hopf_comult2(H, H.basis_elt(a));
    for (int b = 0; b < n; ++b) {
      const Elt& db = H.comult[b];
      Elt d2b = hopf_comult2(H, H.basis_elt(b));
      Elt left(n), right(n);
      // a -> b = R^-1(a1 (x) b1) b2 R(a2 (x) b3)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          if (da[p * n + q].is_zero()) continue;
          for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t)
              for (int u = 0; u < n; ++u) {
                const FieldElement& c = d2b[(s * n + t) * n + u];
                if (c.is_zero()) continue;
                left[t] += da[p * n + q] * c * R.inverse_values[p][s] * R.values[q][u];
              }
        }
      // a <- b = R^-1(a1 (x) b1) a2 R(a3 (x) b2)
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
          if (db[s * n + t].is_zero()) continue;
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
              for (int u = 0; u < n; ++u) {
                const FieldElement& c = d2a[(p * n + q) * n + u];
                if (c.is_zero()) continue;
                right[q] += db[s * n + t] * c * R.inverse_values[p][s] * R.values[u][t];
              }
        }
      mp.left.table[a][b] = std::move(left);
      mp.right.table[a][b] = std::move(right);
    }
  }

  AxiomReport rep = verify_matched_pair_of_actions(H, mp);
  if (!rep.all_ok())
    throw std::logic_error("coquasitriangular-derived pair failed verification at " +
                           rep.first_failure()->axiom);
  return mp;
}

CorrespondenceReport match_against_classification(const HopfData& a12, const HopfData& ghz,
                                                  const std::vector<MatchedPair>& derived,
                                                  const HopfIso& iso,
                                                  const std::vector<MatchedPair>& classified) {
  (void)a12;
  (void)ghz;
  CorrespondenceReport rep;
  std::set<std::string> image;
  std::map<std::string, std::vector<std::string>> fibers;
  for (const MatchedPair& mp : derived) {
    ActionTable tl = transport_action_table(mp.left, iso.forward, iso.backward);
    ActionTable tr = transport_action_table(mp.right, iso.forward, iso.backward);
    std::string label = "unmatched";
    for (const MatchedPair& c : classified) {
      if (action_tables_equal(tl, c.left) && action_tables_equal(tr, c.right)) {
        label = c.provenance;
        break;
      }
    }
    rep.assignments.emplace_back(mp.provenance, label);
    if (label != "unmatched") {
      image.insert(label);
      fibers[label].push_back(mp.provenance);
    }
  }
  rep.image_labels.assign(image.begin(), image.end());
  for (const MatchedPair& c : classified)
    if (!image.count(c.provenance)) rep.complement_labels.push_back(c.provenance);
  std::sort(rep.complement_labels.begin(), rep.complement_labels.end());
  for (auto& [label, forms] : fibers) rep.fibers.emplace_back(label, forms);
  return rep;
}

}  // namespace h8mp
