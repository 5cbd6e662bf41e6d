#include "h8mp/actions.hpp"

namespace h8mp {

namespace {

std::string pair_witness(const HopfData& H, int i, int j) {
  return "(" + H.basis_names[i] + ", " + H.basis_names[j] + ")";
}

std::string triple_witness(const HopfData& H, int i, int j, int k) {
  return "(" + H.basis_names[i] + ", " + H.basis_names[j] + ", " + H.basis_names[k] + ")";
}

Elt column(const Matrix& m, int j) {
  Elt c(m.size());
  for (size_t i = 0; i < m.size(); ++i) c[i] = m[i][j];
  return c;
}

// x acted on basis element k: sum_i x_i table[i][k].
Elt act_elt_basis(const ActionTable& a, const Elt& x, int k) {
  int n = a.dim();
  Elt r(n);
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    const Elt& row = a.table[i][k];
    for (int u = 0; u < n; ++u) {
      if (row[u].is_zero()) continue;
      r[u] += x[i] * row[u];
    }
  }
  return r;
}

// basis element i acting on y: sum_j y_j table[i][j].
Elt act_basis_elt(const ActionTable& a, int i, const Elt& y) {
  int n = a.dim();
  Elt r(n);
  for (int j = 0; j < n; ++j) {
    if (y[j].is_zero()) continue;
    const Elt& row = a.table[i][j];
    for (int u = 0; u < n; ++u) {
      if (row[u].is_zero()) continue;
      r[u] += y[j] * row[u];
    }
  }
  return r;
}

void axpy_elt(Elt& acc, const Elt& x, const FieldElement& c) {
  for (size_t k = 0; k < acc.size(); ++k) {
    if (x[k].is_zero()) continue;
    acc[k] += x[k] * c;
  }
}

}  // namespace

AxiomReport is_module_coalgebra_action(const HopfData& H, const ActionTable& a) {
  AxiomReport rep;
  int n = H.dim;
  const bool left = a.side == Side::Left;
  auto delta = sparse_comult(H);
  auto add = [&](const std::string& axiom, bool ok, std::string w) {
    rep.checks.push_back({axiom, ok, ok ? "" : std::move(w)});
  };

  {
    bool ok = true;
    std::string w;
    for (int j = 0; j < n && ok; ++j) {
      Elt r = left ? act_elt_basis(a, H.unit, j) : act_basis_elt(a, j, H.unit);
      if (!(r == H.basis_elt(j))) {
        ok = false;
        w = H.basis_names[j];
      }
    }
    add("unit acts trivially", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        for (int k = 0; k < n && ok; ++k) {
          Elt lhs, rhs;
          if (left) {
            // (e_i e_j) -> e_k = e_i -> (e_j -> e_k)
            lhs = act_elt_basis(a, H.mult[i][j], k);
            rhs = act_basis_elt(a, i, a.table[j][k]);
          } else {
            // e_i <- (e_j e_k) = (e_i <- e_j) <- e_k
            lhs = act_basis_elt(a, i, H.mult[j][k]);
            rhs = act_elt_basis(a, a.table[i][j], k);
          }
          if (!(lhs == rhs)) {
            ok = false;
            w = triple_witness(H, i, j, k);
          }
        }
    add("module axiom", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        Elt lhs = hopf_comultiply(H, a.table[i][j]);
        Elt rhs(n * n);
        for (const DeltaTerm& di : delta[i])
          for (const DeltaTerm& dj : delta[j]) {
            FieldElement c = di.c * dj.c;
            const Elt& first = a.table[di.a][dj.a];
            const Elt& second = a.table[di.b][dj.b];
            for (int u = 0; u < n; ++u) {
              if (first[u].is_zero()) continue;
              FieldElement cu = c * first[u];
              for (int v = 0; v < n; ++v) {
                if (second[v].is_zero()) continue;
                rhs[u * n + v] += cu * second[v];
              }
            }
          }
        if (!(lhs == rhs)) {
          ok = false;
          w = pair_witness(H, i, j);
        }
      }
    add("comultiplication compatibility", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (!(hopf_counit(H, a.table[i][j]) == H.counit[i] * H.counit[j])) {
          ok = false;
          w = pair_witness(H, i, j);
        }
    add("counit compatibility", ok, w);
  }
  return rep;
}

ActionTable derive_right_action(const HopfData& H, const ActionTable& left) {
  int n = H.dim;
  auto delta = sparse_comult(H);
  ActionTable right;
  right.side = Side::Right;
  right.table.assign(n, std::vector<Elt>(n, Elt(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elt total(n);
      for (const DeltaTerm& di : delta[i])
        for (const DeltaTerm& dj : delta[j]) {
          Elt term = hopf_multiply(H, hopf_antipode(H, left.table[di.a][dj.a]),
                                   H.mult[di.b][dj.b]);
          axpy_elt(total, term, di.c * dj.c);
        }
      right.table[i][j] = std::move(total);
    }
  return right;
}

AxiomReport verify_matched_pair_of_actions(const HopfData& H, const MatchedPair& mp) {
  AxiomReport rep;
  int n = H.dim;
  const ActionTable& L = mp.left;
  const ActionTable& R = mp.right;
  auto delta = sparse_comult(H);
  auto add = [&](const std::string& axiom, bool ok, std::string w) {
    rep.checks.push_back({axiom, ok, ok ? "" : std::move(w)});
  };

  // Caches for the nested Sweedler terms.
  // left_after_right[q][t][k] = (e_q <- e_t) -> e_k
  std::vector<Elt> left_after_right(n * n * n);
  for (int q = 0; q < n; ++q)
    for (int t = 0; t < n; ++t)
      for (int k = 0; k < n; ++k)
        left_after_right[(q * n + t) * n + k] = act_elt_basis(L, R.table[q][t], k);
  // right_on_left[i][p][s] = e_i <- (e_p -> e_s)
  std::vector<Elt> right_on_left(n * n * n);
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < n; ++p)
      for (int s = 0; s < n; ++s)
        right_on_left[(i * n + p) * n + s] = act_basis_elt(R, i, L.table[p][s]);

  {
    // MP1: x -> (a b) = (x1 -> a1)((x2 <- a2) -> b)
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        for (int k = 0; k < n && ok; ++k) {
          Elt lhs = act_basis_elt(L, i, H.mult[j][k]);
          Elt rhs(n);
          for (const DeltaTerm& di : delta[i])
            for (const DeltaTerm& dj : delta[j]) {
              Elt term = hopf_multiply(H, L.table[di.a][dj.a],
                                       left_after_right[(di.b * n + dj.b) * n + k]);
              axpy_elt(rhs, term, di.c * dj.c);
            }
          if (!(lhs == rhs)) {
            ok = false;
            w = triple_witness(H, i, j, k);
          }
        }
    add("MP1", ok, w);
  }
  {
    // MP2: x -> 1 = counit(x) 1
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i) {
      Elt lhs = act_basis_elt(L, i, H.unit);
      Elt rhs(n);
      axpy_elt(rhs, H.unit, H.counit[i]);
      if (!(lhs == rhs)) {
        ok = false;
        w = H.basis_names[i];
      }
    }
    add("MP2", ok, w);
  }
  {
    // MP3: (x y) <- a = (x <- (y1 -> a1))(y2 <- a2)
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        for (int k = 0; k < n && ok; ++k) {
          Elt lhs = act_elt_basis(R, H.mult[i][j], k);
          Elt rhs(n);
          for (const DeltaTerm& dj : delta[j])
            for (const DeltaTerm& dk : delta[k]) {
              Elt term = hopf_multiply(H, right_on_left[(i * n + dj.a) * n + dk.a],
                                       R.table[dj.b][dk.b]);
              axpy_elt(rhs, term, dj.c * dk.c);
            }
          if (!(lhs == rhs)) {
            ok = false;
            w = triple_witness(H, i, j, k);
          }
        }
    add("MP3", ok, w);
  }
  {
    // MP4: 1 <- a = counit(a) 1
    bool ok = true;
    std::string w;
    for (int j = 0; j < n && ok; ++j) {
      Elt lhs = act_elt_basis(R, H.unit, j);
      Elt rhs(n);
      axpy_elt(rhs, H.unit, H.counit[j]);
      if (!(lhs == rhs)) {
        ok = false;
        w = H.basis_names[j];
      }
    }
    add("MP4", ok, w);
  }
  {
    // MP5: (x1 -> a1) @ (x2 <- a2) = (x2 -> a2) @ (x1 <- a1)
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        Elt lhs(n * n), rhs(n * n);
        for (const DeltaTerm& di : delta[i])
          for (const DeltaTerm& dj : delta[j]) {
            FieldElement c = di.c * dj.c;
            const Elt& l1 = L.table[di.a][dj.a];
            const Elt& r1 = R.table[di.b][dj.b];
            const Elt& l2 = L.table[di.b][dj.b];
            const Elt& r2 = R.table[di.a][dj.a];
            for (int u = 0; u < n; ++u) {
              if (!l1[u].is_zero()) {
                FieldElement cu = c * l1[u];
                for (int v = 0; v < n; ++v)
                  if (!r1[v].is_zero()) lhs[u * n + v] += cu * r1[v];
              }
              if (!l2[u].is_zero()) {
                FieldElement cu = c * l2[u];
                for (int v = 0; v < n; ++v)
                  if (!r2[v].is_zero()) rhs[u * n + v] += cu * r2[v];
              }
            }
          }
        if (!(lhs == rhs)) {
          ok = false;
          w = pair_witness(H, i, j);
        }
      }
    add("MP5", ok, w);
  }
  {
    // Factorization: x y = (x1 -> y1)(x2 <- y2)
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        Elt rhs(n);
        for (const DeltaTerm& di : delta[i])
          for (const DeltaTerm& dj : delta[j]) {
            Elt term = hopf_multiply(H, L.table[di.a][dj.a], R.table[di.b][dj.b]);
            axpy_elt(rhs, term, di.c * dj.c);
          }
        if (!(H.mult[i][j] == rhs)) {
          ok = false;
          w = pair_witness(H, i, j);
        }
      }
    add("MP* factorization", ok, w);
  }
  return rep;
}

ConstructResult construct_matched_pair(const HopfData& H, const ActionTable& left,
                                       const std::string& provenance) {
  AxiomReport left_rep = is_module_coalgebra_action(H, left);
  if (!left_rep.all_ok())
    return Rejection{"left action fails " + left_rep.first_failure()->axiom, left_rep};
  ActionTable right = derive_right_action(H, left);
  AxiomReport right_rep = is_module_coalgebra_action(H, right);
  if (!right_rep.all_ok())
    return Rejection{"derived right action fails " + right_rep.first_failure()->axiom, right_rep};
  MatchedPair mp{left, right, provenance};
  AxiomReport mp_rep = verify_matched_pair_of_actions(H, mp);
  if (!mp_rep.all_ok())
    return Rejection{"matched pair fails " + mp_rep.first_failure()->axiom, mp_rep};
  return mp;
}

ActionTable trivial_left_action(const HopfData& H) {
  int n = H.dim;
  ActionTable a;
  a.side = Side::Left;
  a.table.assign(n, std::vector<Elt>(n, Elt(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) a.table[i][j][k] = H.counit[i] * H.basis_elt(j)[k];
  return a;
}

ActionTable transport_action_table(const ActionTable& src, const Matrix& fwd, const Matrix& bwd) {
  int n = src.dim();
  ActionTable dst;
  dst.side = src.side;
  dst.table.assign(n, std::vector<Elt>(n, Elt(n)));
  for (int i = 0; i < n; ++i) {
    Elt xi = column(bwd, i);
    for (int j = 0; j < n; ++j) {
      Elt yj = column(bwd, j);
      dst.table[i][j] = mat_vec(fwd, act(src, xi, yj));
    }
  }
  return dst;
}

bool action_tables_equal(const ActionTable& a, const ActionTable& b) {
  return a.side == b.side && a.table == b.table;
}

}  // namespace h8mp
