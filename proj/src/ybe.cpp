#include "h8mp/ybe.hpp"

#include <map>

namespace h8mp {

BraidOperator build_r(const HopfData& H, const MatchedPair& mp) {
  int n = H.dim;
  BraidOperator r;
  r.source = mp.provenance;
  r.matrix.assign(n * n, std::vector<FieldElement>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // column (i, j): r(e_i @ e_j) = (e_i1 -> e_j1) @ (e_i2 <- e_j2)
      const Elt& di = H.comult[i];
      const Elt& dj = H.comult[j];
      int col = i * n + j;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          if (di[p * n + q].is_zero()) continue;
          for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) {
              if (dj[s * n + t].is_zero()) continue;
              FieldElement c = di[p * n + q] * dj[s * n + t];
              const Elt& a = mp.left.table[p][s];
              const Elt& b = mp.right.table[q][t];
              for (int u = 0; u < n; ++u) {
                if (a[u].is_zero()) continue;
                for (int v = 0; v < n; ++v) {
                  if (b[v].is_zero()) continue;
                  r.matrix[u * n + v][col] += c * a[u] * b[v];
                }
              }
            }
        }
    }
  return r;
}

namespace {

using SparseVec = std::map<int, FieldElement>;

void sparse_add(SparseVec& acc, int idx, const FieldElement& c) {
  if (c.is_zero()) return;
  auto it = acc.find(idx);
  if (it == acc.end())
    acc.emplace(idx, c);
  else {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

// Apply r to tensor slots (pos, pos+1) of a triple-tensor basis vector
// decomposition; identity elsewhere.
SparseVec apply_r_at(const Matrix& r, int n, int pos, const SparseVec& x) {
  SparseVec out;
  for (const auto& [idx, c] : x) {
    int slots[3] = {idx / (n * n), (idx / n) % n, idx % n};
    int a = slots[pos], b = slots[pos + 1];
    int col = a * n + b;
    for (int row = 0; row < n * n; ++row) {
      const FieldElement& m = r[row][col];
      if (m.is_zero()) continue;
      int na = row / n, nb = row % n;
      int ns[3] = {slots[0], slots[1], slots[2]};
      ns[pos] = na;
      ns[pos + 1] = nb;
      sparse_add(out, (ns[0] * n + ns[1]) * n + ns[2], c * m);
    }
  }
  return out;
}

}  // namespace

BraidCheck check_braid(const HopfData& H, const BraidOperator& r) {
  int n = H.dim;
  BraidCheck res;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        SparseVec start{{(i * n + j) * n + k, FieldElement::one()}};
        SparseVec lhs = apply_r_at(r.matrix, n, 0,
                                   apply_r_at(r.matrix, n, 1, apply_r_at(r.matrix, n, 0, start)));
        SparseVec rhs = apply_r_at(r.matrix, n, 1,
                                   apply_r_at(r.matrix, n, 0, apply_r_at(r.matrix, n, 1, start)));
        if (!(lhs == rhs)) {
          res.holds = false;
          res.witness = "(" + H.basis_names[i] + ", " + H.basis_names[j] + ", " +
                        H.basis_names[k] + ")";
          return res;
        }
      }
  res.holds = true;
  return res;
}

bool check_involutive(const BraidOperator& r) {
  int n2 = static_cast<int>(r.matrix.size());
  Matrix sq = mat_mul(r.matrix, r.matrix);
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n2; ++j) {
      if (i == j ? !sq[i][j].is_one() : !sq[i][j].is_zero()) return false;
    }
  return true;
}

std::optional<Matrix> braid_inverse(const BraidOperator& r) { return mat_inverse(r.matrix); }

CriteriaReport check_involutivity_criteria(const HopfData& H, const MatchedPair& mp) {
  CriteriaReport rep;
  int n = H.dim;

  rep.contraction_identity = true;
  for (int i = 0; i < n && rep.contraction_identity; ++i)
    for (int j = 0; j < n && rep.contraction_identity; ++j) {
      // x <- y = S(x1 -> y) -> x2
      Elt rhs(n);
      const Elt& di = H.comult[i];
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          if (di[p * n + q].is_zero()) continue;
          Elt s = hopf_antipode(H, mp.left.table[p][j]);
          Elt term = act(mp.left, s, H.basis_elt(q));
          for (int u = 0; u < n; ++u) rhs[u] += di[p * n + q] * term[u];
        }
      if (!(mp.right.table[i][j] == rhs)) {
        rep.contraction_identity = false;
        rep.contraction_witness =
            "(" + H.basis_names[i] + ", " + H.basis_names[j] + ")";
      }
    }

  rep.antipode_exchange = true;
  for (int i = 0; i < n && rep.antipode_exchange; ++i)
    for (int j = 0; j < n && rep.antipode_exchange; ++j) {
      // S(x <- y) = S(y) -> S(x)
      Elt lhs = hopf_antipode(H, mp.right.table[i][j]);
      Elt rhs = act(mp.left, hopf_antipode(H, H.basis_elt(j)), hopf_antipode(H, H.basis_elt(i)));
      if (!(lhs == rhs)) {
        rep.antipode_exchange = false;
        rep.antipode_witness = "(" + H.basis_names[i] + ", " + H.basis_names[j] + ")";
      }
    }

  rep.involutive = check_involutive(build_r(H, mp));
  return rep;
}

}  // namespace h8mp
