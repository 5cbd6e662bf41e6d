#include "h8mp/presentations.hpp"

#include <algorithm>
#include <map>

namespace h8mp {

namespace {

const FieldElement kOne = FieldElement::one();
const FieldElement kHalf = FieldElement::half();

// ---------------------------------------------------------------------------
// g,h,z presentation. Basis monomial g^a h^b z^e with a,b,e in {0,1}.

int ghz_index(int a, int b, int e) { return e * 4 + a + 2 * b; }

// Product of two basis monomials as an element (z^2 expands).
Elt ghz_mono_product(int a, int b, int e, int c, int d, int f) {
  // z g^c h^d = g^d h^c z.
  if (e == 1) {
    std::swap(c, d);
  }
  int A = (a + c) % 2, B = (b + d) % 2, E = e + f;
  Elt r(8);
  if (E < 2) {
    r[ghz_index(A, B, E)] = kOne;
    return r;
  }
  // g^A h^B z^2 = 1/2 (g^A h^B + g^(A+1) h^B + g^A h^(B+1) - g^(A+1) h^(B+1)).
  r[ghz_index(A, B, 0)] += kHalf;
  r[ghz_index((A + 1) % 2, B, 0)] += kHalf;
  r[ghz_index(A, (B + 1) % 2, 0)] += kHalf;
  r[ghz_index((A + 1) % 2, (B + 1) % 2, 0)] -= kHalf;
  return r;
}

}  // namespace

HopfData build_h8_ghz() {
  HopfData H;
  H.dim = 8;
  H.basis_names = {"1", "g", "h", "gh", "z", "gz", "hz", "ghz"};
  H.unit = H.basis_elt(0);

  H.mult.assign(8, std::vector<Elt>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      int a = i & 1, b = (i >> 1) & 1, e = i >> 2;
      int c = j & 1, d = (j >> 1) & 1, f = j >> 2;
      H.mult[i][j] = ghz_mono_product(a, b, e, c, d, f);
    }

  H.counit.assign(8, kOne);

  H.comult.assign(8, Elt(64));
  // Group-likes are diagonal.
  for (int i = 0; i < 4; ++i) H.comult[i][i * 8 + i] = kOne;
  // Delta(z) = 1/2 (z @ z + gz @ z + z @ hz - gz @ hz).
  Elt dz(64);
  dz[4 * 8 + 4] = kHalf;
  dz[5 * 8 + 4] = kHalf;
  dz[4 * 8 + 6] = kHalf;
  dz[5 * 8 + 6] = -kHalf;
  H.comult[4] = dz;
  // Delta(Mz) = (M @ M) Delta(z) for group-like M.
  for (int m = 1; m < 4; ++m) H.comult[4 + m] = tensor_square_multiply(H, H.comult[m], dz);

  H.antipode.assign(8, Elt(8));
  for (int i = 0; i < 8; ++i) {
    int a = i & 1, b = (i >> 1) & 1, e = i >> 2;
    // S fixes group-likes; S(g^a h^b z) = z h^b g^a = g^b h^a z.
    int si = e ? ghz_index(b, a, 1) : i;
    H.antipode[i][si] = kOne;
  }
  return H;
}

// ---------------------------------------------------------------------------
// Comatrix presentation. Letters 0..3 stand for x11, x12, x21, x22.

namespace {

using Word = std::vector<int>;
using WordSum = std::map<Word, FieldElement>;

void word_add(WordSum& acc, const Word& w, const FieldElement& c) {
  if (c.is_zero()) return;
  auto it = acc.find(w);
  if (it == acc.end())
    acc.emplace(w, c);
  else {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

bool annihilating_pair(int a, int b) {
  // x11, x22 only pair with each other; x12, x21 only with each other.
  bool a_diag = (a == 0 || a == 3);
  bool b_diag = (b == 0 || b == 3);
  return a_diag != b_diag;
}

const std::vector<Word>& a12_basis_words() {
  static const std::vector<Word> basis = {{}, {0}, {1}, {2}, {3}, {0, 0}, {0, 3}, {1, 2}};
  return basis;
}

void reduce_word(const Word& w, const FieldElement& coeff, WordSum& acc, int fuel) {
  if (fuel <= 0) throw RewriteNonConfluent("reduction fuel exhausted");
  // Annihilating pairs anywhere kill the word outright; check them first so
  // that the expansion rules below cannot cycle.
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (annihilating_pair(w[i], w[i + 1])) return;
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    int a = w[i], b = w[i + 1];
    auto rewrite_pair = [&](int na, int nb, const FieldElement& sign) {
      Word v = w;
      v[i] = na;
      v[i + 1] = nb;
      reduce_word(v, coeff * sign, acc, fuel - 1);
    };
    if (a == 3 && b == 0) {
      rewrite_pair(0, 3, kOne);
      return;
    }
    if (a == 2 && b == 1) {
      rewrite_pair(1, 2, -kOne);
      return;
    }
    if (a == 3 && b == 3) {
      rewrite_pair(0, 0, kOne);
      return;
    }
    if (a == 2 && b == 2) {
      rewrite_pair(1, 1, kOne);
      return;
    }
    if (a == 1 && b == 1) {
      // x12^2 = 1 - x11^2.
      Word shorter(w.begin(), w.begin() + i);
      shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
      reduce_word(shorter, coeff, acc, fuel - 1);
      rewrite_pair(0, 0, -kOne);
      return;
    }
  }
  // No pair rule applies. Accept basis words; otherwise expand x11^2 = 1 - x12^2
  // next to a diagonal letter, which then annihilates.
  const auto& basis = a12_basis_words();
  if (std::find(basis.begin(), basis.end(), w) != basis.end()) {
    word_add(acc, w, coeff);
    return;
  }
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] != 0 || w[i + 1] != 0) continue;
    bool has_neighbor = (i > 0) || (i + 2 < w.size());
    if (!has_neighbor) continue;
    Word shorter(w.begin(), w.begin() + i);
    shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
    reduce_word(shorter, coeff, acc, fuel - 1);
    Word swapped = w;
    swapped[i] = 1;
    swapped[i + 1] = 1;
    reduce_word(swapped, -coeff, acc, fuel - 1);
    return;
  }
  throw RewriteNonConfluent("irreducible word outside the basis");
}

Elt word_sum_to_elt(const WordSum& ws) {
  const auto& basis = a12_basis_words();
  Elt r(8);
  for (const auto& [w, c] : ws) {
    auto it = std::find(basis.begin(), basis.end(), w);
    if (it == basis.end()) throw RewriteNonConfluent("normal form outside the basis");
    r[it - basis.begin()] = c;
  }
  return r;
}

Elt reduce_to_elt(const Word& w) {
  WordSum acc;
  reduce_word(w, kOne, acc, 64);
  return word_sum_to_elt(acc);
}

}  // namespace

HopfData build_a12() {
  HopfData H;
  H.dim = 8;
  H.basis_names = {"1", "x11", "x12", "x21", "x22", "x11^2", "x11x22", "x12x21"};
  H.unit = H.basis_elt(0);

  const auto& basis = a12_basis_words();
  H.mult.assign(8, std::vector<Elt>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Word w = basis[i];
      w.insert(w.end(), basis[j].begin(), basis[j].end());
      H.mult[i][j] = reduce_to_elt(w);
    }

  // counit(x_ij) = delta_ij, multiplicative on words.
  H.counit.assign(8, FieldElement());
  auto eps_letter = [](int l) { return (l == 0 || l == 3) ? 1 : 0; };
  for (int i = 0; i < 8; ++i) {
    int e = 1;
    for (int l : basis[i]) e *= eps_letter(l);
    H.counit[i] = FieldElement::from_int(e);
  }

  // Delta(x_ij) = sum_k x_ik @ x_kj on generators, extended multiplicatively.
  H.comult.assign(8, Elt(64));
  H.comult[0][0] = kOne;
  auto letter_comult = [&](int l) {
    Elt d(64);
    auto slot = [&](int p, int q) { return (p + 1) * 8 + (q + 1); };
    switch (l) {
      case 0:
        d[slot(0, 0)] = kOne;
        d[slot(1, 2)] = kOne;
        break;
      case 1:
        d[slot(0, 1)] = kOne;
        d[slot(1, 3)] = kOne;
        break;
      case 2:
        d[slot(2, 0)] = kOne;
        d[slot(3, 2)] = kOne;
        break;
      default:
        d[slot(2, 1)] = kOne;
        d[slot(3, 3)] = kOne;
        break;
    }
    return d;
  };
  for (int i = 1; i < 8; ++i) {
    Elt d = letter_comult(basis[i][0]);
    for (size_t k = 1; k < basis[i].size(); ++k)
      d = tensor_square_multiply(H, d, letter_comult(basis[i][k]));
    H.comult[i] = d;
  }

  // S(x_ij) = x_ji, anti-homomorphism on words.
  H.antipode.assign(8, Elt(8));
  auto s_letter = [](int l) {
    switch (l) {
      case 1:
        return 2;
      case 2:
        return 1;
      default:
        return l;
    }
  };
  for (int i = 0; i < 8; ++i) {
    Word w;
    for (auto it = basis[i].rbegin(); it != basis[i].rend(); ++it) w.push_back(s_letter(*it));
    H.antipode[i] = reduce_to_elt(w);
  }
  return H;
}

// ---------------------------------------------------------------------------
// Isomorphism between the presentations.

Elt a12_image_of_g(const HopfData& a12) {
  Elt e(8);
  e[a12.index_of("x11x22")] = kOne;
  e[a12.index_of("x12x21")] = FieldElement::i();
  return e;
}

Elt a12_image_of_h(const HopfData& a12) {
  Elt e(8);
  e[a12.index_of("x11x22")] = kOne;
  e[a12.index_of("x12x21")] = -FieldElement::i();
  return e;
}

Elt a12_image_of_z(const HopfData& a12) {
  FieldElement i = FieldElement::i();
  FieldElement s2 = FieldElement::sqrt2();
  Elt e(8);
  e[a12.index_of("x11")] = (kOne + i) * kHalf;
  e[a12.index_of("x22")] = (kOne - i) * kHalf;
  e[a12.index_of("x12")] = s2 * kHalf;
  e[a12.index_of("x21")] = s2 * kHalf;
  return e;
}

namespace {

// Apply phi (x) phi to an n^2 tensor, phi given by a coordinate matrix.
Elt tensor_map(const Matrix& phi, const Elt& t, int n) {
  Elt r(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (t[a * n + b].is_zero()) continue;
      for (int p = 0; p < n; ++p) {
        if (phi[p][a].is_zero()) continue;
        for (int q = 0; q < n; ++q) {
          if (phi[q][b].is_zero()) continue;
          r[p * n + q] += phi[p][a] * phi[q][b] * t[a * n + b];
        }
      }
    }
  return r;
}

}  // namespace

HopfIso build_iso(const HopfData& ghz, const HopfData& a12) {
  Elt img_g = a12_image_of_g(a12);
  Elt img_h = a12_image_of_h(a12);
  Elt img_z = a12_image_of_z(a12);
  Elt img_1 = a12.unit;
  Elt img_gh = hopf_multiply(a12, img_g, img_h);
  Elt img_gz = hopf_multiply(a12, img_g, img_z);
  Elt img_hz = hopf_multiply(a12, img_h, img_z);
  Elt img_ghz = hopf_multiply(a12, img_gh, img_z);

  std::vector<Elt> cols = {img_1, img_g, img_h, img_gh, img_z, img_gz, img_hz, img_ghz};
  Matrix backward(8, std::vector<FieldElement>(8));  // GHZ coords -> A12 coords
  for (int j = 0; j < 8; ++j)
    for (int i = 0; i < 8; ++i) backward[i][j] = cols[j][i];
  auto fwd = mat_inverse(backward);
  if (!fwd) throw IsoVerificationFailed("generator images are not a basis");

  HopfIso iso{*fwd, backward};

  // phi: A12 -> GHZ must intertwine the full structure.
  auto phi = [&](const Elt& x) { return mat_vec(iso.forward, x); };
  if (!(phi(a12.unit) == ghz.unit)) throw IsoVerificationFailed("unit");
  for (int i = 0; i < 8; ++i) {
    Elt pi = phi(a12.basis_elt(i));
    if (!(hopf_counit(ghz, pi) == a12.counit[i])) throw IsoVerificationFailed("counit");
    if (!(hopf_antipode(ghz, pi) == phi(hopf_antipode(a12, a12.basis_elt(i)))))
      throw IsoVerificationFailed("antipode");
    Elt lhs = tensor_map(iso.forward, a12.comult[i], 8);
    if (!(lhs == hopf_comultiply(ghz, pi))) throw IsoVerificationFailed("comultiplication");
    for (int j = 0; j < 8; ++j) {
      Elt pj = phi(a12.basis_elt(j));
      if (!(phi(a12.mult[i][j]) == hopf_multiply(ghz, pi, pj)))
        throw IsoVerificationFailed("multiplication at (" + a12.basis_names[i] + ", " +
                                    a12.basis_names[j] + ")");
    }
  }
  return iso;
}

Elt iso_forward(const HopfIso& iso, const Elt& a12_coords) {
  return mat_vec(iso.forward, a12_coords);
}

Elt iso_backward(const HopfIso& iso, const Elt& ghz_coords) {
  return mat_vec(iso.backward, ghz_coords);
}

PolySystem z_embedding_system(const HopfData& a12, bool with_delta_constraints) {
  PolySystem sys;
  for (int k = 0; k < 4; ++k) sys.add_var("a" + std::to_string(k + 1));

  Coords<Poly> zsym(8, Poly());
  for (int k = 0; k < 4; ++k) zsym[k + 1] = Poly::variable(k);

  Elt img_g = a12_image_of_g(a12);
  Elt img_h = a12_image_of_h(a12);
  Elt img_gh = hopf_multiply(a12, img_g, img_h);
  // z^2 = 1/2 (1 + g + h - gh).
  Elt z2(8);
  for (int k = 0; k < 8; ++k)
    z2[k] = kHalf * (a12.unit[k] + img_g[k] + img_h[k] - img_gh[k]);

  Coords<Poly> z2_sym = hopf_multiply(a12, zsym, zsym);
  for (int k = 0; k < 8; ++k) sys.add(z2_sym[k] - Poly::constant(z2[k]));

  if (with_delta_constraints) {
    // Delta(z) = J (z @ z) with J = 1/2 (1@1 + g@1 + 1@h - g@h).
    Elt J(64);
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) {
        FieldElement v = kHalf * (a12.unit[a] * a12.unit[b] + img_g[a] * a12.unit[b] +
                                  a12.unit[a] * img_h[b] - img_g[a] * img_h[b]);
        J[a * 8 + b] = v;
      }
    Coords<Poly> Jp(64);
    for (int t = 0; t < 64; ++t) Jp[t] = Poly::constant(J[t]);
    Coords<Poly> rhs = tensor_square_multiply(a12, Jp, tensor_of(zsym, zsym));
    Coords<Poly> lhs = hopf_comultiply(a12, zsym);
    for (int t = 0; t < 64; ++t) sys.add(lhs[t] - rhs[t]);
  }
  return sys;
}

ZEmbedding solve_z_embedding(const HopfData& a12) {
  ZEmbedding out;
  out.system = z_embedding_system(a12, true);
  out.solutions = solve_system(out.system, &out.transcript);
  out.pinned = a12_image_of_z(a12);
  bool found = false;
  for (const Assignment& a : out.solutions.solutions) {
    Elt e(8);
    for (int k = 0; k < 4; ++k) {
      auto it = a.find(k);
      if (it != a.end()) e[k + 1] = it->second;
    }
    if (e == out.pinned) found = true;
  }
  if (!found) throw NoSolution("published z expansion not among the solutions");
  return out;
}

}  // namespace h8mp
