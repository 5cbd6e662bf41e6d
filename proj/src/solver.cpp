#include "h8mp/solver.hpp"

#include <algorithm>
#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <optional>
#include <set>

namespace h8mp {

namespace {

struct Node {
  std::vector<Poly> eqs;
  std::map<int, Poly> subst;  // var -> expression over still-free vars
  int transcript_id = 0;
};

class SolverImpl {
 public:
  SolverImpl(const PolySystem& sys, SolverTranscript* tr, const SolverOptions& opts)
      : sys_(sys), tr_(tr), opts_(opts) {}

  SolutionSet run() {
    Node root;
    for (const Poly& p : sys_.eqs)
      if (!p.is_zero()) root.eqs.push_back(p);
    root.transcript_id = log(-1, "root");
    for (const Poly& p : root.eqs)
      for (int v : p.vars()) universe_.insert(v);
    process(std::move(root));
    dedupe_solutions();
    return std::move(result_);
  }

 private:
  const PolySystem& sys_;
  SolverTranscript* tr_;
  SolverOptions opts_;
  SolutionSet result_;
  std::set<int> universe_;
  int nodes_seen_ = 0;

  int log(int parent, std::string action) {
    if (!tr_) return 0;
    return tr_->add(parent, std::move(action));
  }

  std::string pstr(const Poly& p) const { return p.str(sys_.var_names); }

  static void canonicalize(std::vector<Poly>& eqs) {
    for (Poly& p : eqs)
      if (!p.is_zero()) p = p.monic();
    std::sort(eqs.begin(), eqs.end());
    eqs.erase(std::unique(eqs.begin(), eqs.end()), eqs.end());
    eqs.erase(std::remove_if(eqs.begin(), eqs.end(), [](const Poly& p) { return p.is_zero(); }),
              eqs.end());
  }

  // Apply var := expr to all equations and compose with stored substitutions.
  static void apply_subst(Node& n, int var, const Poly& expr) {
    for (Poly& p : n.eqs) p = p.substitute(var, expr);
    for (auto& [w, e] : n.subst) e = e.substitute(var, expr);
    n.subst[var] = expr;
  }

  void process(Node n) {
    if (++nodes_seen_ > opts_.max_nodes) {
      result_.complete = false;
      result_.incomplete_notes.push_back("node limit exceeded");
      return;
    }

    // Saturate cheap deterministic rules.
    for (;;) {
      canonicalize(n.eqs);
      for (const Poly& p : n.eqs)
        if (p.is_constant() && !p.is_zero()) {
          log(n.transcript_id, "contradiction: " + pstr(p) + " = 0");
          return;  // inconsistent branch
        }
      if (linear_step(n)) continue;
      if (row_reduce_step(n)) continue;
      if (mutual_reduce_step(n)) continue;
      break;
    }

    if (n.eqs.empty()) {
      finish_leaf(n);
      return;
    }

    // Branching rules, first applicable equation in canonical order.
    for (size_t ei = 0; ei < n.eqs.size(); ++ei) {
      if (branch_monomial(n, ei)) return;
    }
    for (size_t ei = 0; ei < n.eqs.size(); ++ei) {
      if (branch_univariate_quadratic(n, ei)) return;
    }
    for (size_t ei = 0; ei < n.eqs.size(); ++ei) {
      if (branch_two_var_form(n, ei)) return;
    }
    for (size_t ei = 0; ei < n.eqs.size(); ++ei) {
      if (branch_linear_product(n, ei)) return;
    }
    if (spoly_step(n)) {
      process(std::move(n));
      return;
    }

    result_.complete = false;
    std::string note = "stuck with " + std::to_string(n.eqs.size()) + " equations:";
    for (const Poly& p : n.eqs) note += " [" + pstr(p) + "]";
    result_.incomplete_notes.push_back(note);
    log(n.transcript_id, "incomplete: no applicable rule");
  }

  void finish_leaf(const Node& n) {
    std::set<int> free = universe_;
    for (auto& [v, e] : n.subst) free.erase(v);
    if (!free.empty()) {
      result_.complete = false;
      std::string note = "solved branch with free variables:";
      for (int v : free) note += " " + sys_.var_name(v);
      result_.incomplete_notes.push_back(note);
      log(n.transcript_id, "incomplete: free variables remain");
      return;
    }
    Assignment a;
    for (auto& [v, e] : n.subst) {
      if (!e.is_constant()) {
        result_.complete = false;
        result_.incomplete_notes.push_back("unresolved substitution for " + sys_.var_name(v));
        return;
      }
      a[v] = e.constant_value();
    }
    result_.solutions.push_back(std::move(a));
    log(n.transcript_id, "solution");
  }

  bool linear_step(Node& n) {
    for (const Poly& p : n.eqs) {
      if (p.is_zero() || p.degree() != 1) continue;
      // Eliminate the lowest-index variable present.
      int var = *p.vars().begin();
      FieldElement coeff;
      Poly rest;
      for (auto& [m, c] : p.terms()) {
        if (m.contains(var))
          coeff = c;  // degree 1: the monomial is exactly `var`
        else
          rest.add_term(m, c);
      }
      Poly expr = (-rest) * coeff.inv();
      log(n.transcript_id, "linear: " + sys_.var_name(var) + " := " + pstr(expr));
      apply_subst(n, var, expr);
      return true;
    }
    return false;
  }

  // Row reduction of the equation set over the monomial basis (highest
  // monomial first), surfacing every linear-combination consequence. The
  // result is the reduced row echelon form, computed on sparse rows.
  bool row_reduce_step(Node& n) {
    if (n.eqs.size() < 2) return false;
    // A "row" is a polynomial; its leading monomial is its pivot column.
    // Forward pass: reduce each row against the established pivots.
    std::map<Monomial, Poly, std::greater<Monomial>> pivots;  // pivot monomial -> monic row
    for (const Poly& p0 : n.eqs) {
      Poly p = p0;
      for (;;) {
        if (p.is_zero()) break;
        auto it = pivots.find(p.leading_monomial());
        if (it == pivots.end()) break;
        p.add_scaled(it->second, -p.leading_coeff());
      }
      if (!p.is_zero()) pivots.emplace(p.leading_monomial(), p.monic());
    }
    // Backward pass: clear every smaller pivot monomial from each row's tail.
    // Rows are processed by ascending pivot, so the rows used for reduction
    // are already fully reduced and each offending monomial is hit once.
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      bool changed = true;
      while (changed) {
        changed = false;
        for (auto& [m, c] : it->second.terms()) {
          if (m == it->first) continue;
          auto jt = pivots.find(m);
          if (jt == pivots.end()) continue;
          it->second.add_scaled(jt->second, -c);
          changed = true;
          break;
        }
      }
    }
    std::vector<Poly> reduced;
    for (auto& [m, p] : pivots)
      if (!p.is_zero()) reduced.push_back(p);
    canonicalize(reduced);
    if (reduced == n.eqs) return false;
    n.eqs = std::move(reduced);
    log(n.transcript_id, "row-reduce");
    return true;
  }

  // Replace each equation by its normal form modulo the others. Each
  // replacement strictly lowers a leading monomial, so this terminates.
  bool mutual_reduce_step(Node& n) {
    bool changed_any = false;
    for (size_t a = 0; a < n.eqs.size(); ++a) {
      if (n.eqs[a].is_zero()) continue;
      std::vector<Poly> others;
      for (size_t b = 0; b < n.eqs.size(); ++b)
        if (b != a && !n.eqs[b].is_zero()) others.push_back(n.eqs[b]);
      if (others.empty()) continue;
      Poly nf = normal_form(n.eqs[a], others);
      if (!(nf == n.eqs[a])) {
        n.eqs[a] = nf;
        changed_any = true;
      }
    }
    if (changed_any) {
      canonicalize(n.eqs);
      log(n.transcript_id, "mutual-reduce");
    }
    return changed_any;
  }

  static bool try_divide(const Monomial& m, const Monomial& d, Monomial& quot) {
    int dm = m.degree(), dd = d.degree();
    if (dd > dm) return false;
    std::uint64_t key = std::uint64_t(dm - dd) << 56;
    int im = 0, id = 0, pos = 0;
    while (im < dm) {
      int lm = m.letter(im);
      if (id < dd && d.letter(id) > lm) return false;
      if (id < dd && d.letter(id) == lm) {
        ++im;
        ++id;
        continue;
      }
      key |= std::uint64_t(lm) << (48 - 8 * pos);
      ++pos;
      ++im;
    }
    if (id != dd) return false;
    quot.key = key;
    return true;
  }

  void branch_child(const Node& n, const std::vector<Poly>& extra, const std::string& what,
                    std::optional<std::pair<size_t, Poly>> replace_eq = std::nullopt) {
    Node child;
    child.eqs = n.eqs;
    if (replace_eq) child.eqs[replace_eq->first] = replace_eq->second;
    for (const Poly& p : extra) child.eqs.push_back(p);
    child.subst = n.subst;
    child.transcript_id = log(n.transcript_id, "branch: " + what);
    process(std::move(child));
  }

  // p = c * v1^e1 * ... * vk^ek = 0: one branch per variable.
  bool branch_monomial(Node& n, size_t ei) {
    const Poly& p = n.eqs[ei];
    if (p.term_count() != 1) return false;
    const Monomial& m = p.terms().front().first;
    if (m.is_one()) return false;
    for (auto& [v, e] : m.factors())
      branch_child(n, {Poly::variable(v)}, sys_.var_name(v) + " = 0");
    return true;
  }

  bool branch_univariate_quadratic(Node& n, size_t ei) {
    const Poly& p = n.eqs[ei];
    if (p.degree() != 2) return false;
    auto vs = p.vars();
    if (vs.size() != 1) return false;
    int v = *vs.begin();
    FieldElement a, b, c;
    for (auto& [m, k] : p.terms()) {
      if (m.is_one())
        c = k;
      else if (m.degree() == 1)
        b = k;
      else
        a = k;
    }
    FieldElement disc = b * b - FieldElement::from_int(4) * a * c;
    auto roots = disc.sqrt();
    if (roots.empty()) {
      result_.complete = false;
      result_.incomplete_notes.push_back("no root in field for " + pstr(p));
      log(n.transcript_id, "incomplete: irreducible univariate quadratic");
      return true;
    }
    FieldElement twoa_inv = (FieldElement::from_int(2) * a).inv();
    std::vector<FieldElement> xs;
    for (const FieldElement& s : roots) {
      FieldElement x = (-b + s) * twoa_inv;
      if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    }
    for (const FieldElement& x : xs) {
      Poly eq = Poly::variable(v) - Poly::constant(x);
      branch_child(n, {eq}, sys_.var_name(v) + " = " + x.str());
    }
    return true;
  }

  // Homogeneous quadratic form in two variables: factor over the field.
  bool branch_two_var_form(Node& n, size_t ei) {
    const Poly& p = n.eqs[ei];
    if (p.degree() != 2) return false;
    auto vs = p.vars();
    if (vs.size() != 2) return false;
    if (!(p == p.homogeneous_part(2))) return false;
    int x = *vs.begin();
    int y = *std::next(vs.begin());
    FieldElement a, b, c;
    for (auto& [m, k] : p.terms()) {
      auto fs = m.factors();
      if (fs.size() == 1 && fs[0] == std::make_pair(x, 2))
        a = k;
      else if (fs.size() == 1 && fs[0] == std::make_pair(y, 2))
        c = k;
      else
        b = k;
    }
    if (a.is_zero()) return false;  // x*(bx y... ) handled by other rules
    FieldElement disc = b * b - FieldElement::from_int(4) * a * c;
    auto roots = disc.sqrt();
    if (roots.empty()) {
      result_.complete = false;
      result_.incomplete_notes.push_back("irreducible binary form " + pstr(p));
      log(n.transcript_id, "incomplete: irreducible binary quadratic form");
      return true;
    }
    FieldElement twoa_inv = (FieldElement::from_int(2) * a).inv();
    std::vector<FieldElement> ts;
    for (const FieldElement& s : roots) {
      FieldElement t = (-b + s) * twoa_inv;
      if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
    }
    for (const FieldElement& t : ts) {
      Poly eq = Poly::variable(x) - Poly::variable(y) * t;
      branch_child(n, {eq}, sys_.var_name(x) + " = (" + t.str() + ")*" + sys_.var_name(y));
    }
    return true;
  }

  // Try to split p as (x + D) * A where A is the coefficient of x in p.
  bool branch_linear_product(Node& n, size_t ei) {
    const Poly& p = n.eqs[ei];
    if (p.degree() != 2) return false;
    for (int x : p.vars()) {
      Poly A, B;
      bool has_square = false;
      for (auto& [m, c] : p.terms()) {
        if (m.contains(x)) {
          int e = 0;
          for (auto& [v, k] : m.factors())
            if (v == x) e = k;
          if (e >= 2) {
            has_square = true;
            break;
          }
          A.add_term(m.div_var(x), c);
        } else {
          B.add_term(m, c);
        }
      }
      if (has_square || A.is_zero() || A.degree() > 1) continue;
      if (B.is_zero()) {
        // p = x * A
        branch_child(n, {Poly::variable(x)}, sys_.var_name(x) + " = 0",
                     std::make_pair(ei, Poly()));
        branch_child(n, {A}, pstr(A) + " = 0", std::make_pair(ei, Poly()));
        return true;
      }
      Poly D;
      if (!divide_exact(B, A, D)) continue;
      if (D.degree() > 1) continue;
      Poly L = Poly::variable(x) + D;
      branch_child(n, {L}, pstr(L) + " = 0", std::make_pair(ei, Poly()));
      branch_child(n, {A}, pstr(A) + " = 0", std::make_pair(ei, Poly()));
      return true;
    }
    return false;
  }

  // Exact multivariate division B = Q * A (A nonzero); false when not exact.
  static bool divide_exact(Poly B, const Poly& A, Poly& Q) {
    Q = Poly();
    const Monomial& la = A.leading_monomial();
    FieldElement lc_inv = A.leading_coeff().inv();
    int guard = 0;
    while (!B.is_zero()) {
      if (++guard > 1000) return false;
      Monomial quot;
      if (!try_divide(B.leading_monomial(), la, quot)) return false;
      Poly t;
      t.add_term(quot, B.leading_coeff() * lc_inv);
      Q += t;
      B -= A * t;
    }
    return true;
  }

  // Bounded S-polynomial round.
  bool spoly_step(Node& n) {
    std::vector<Poly> fresh;
    for (size_t a = 0; a < n.eqs.size(); ++a)
      for (size_t b = a + 1; b < n.eqs.size(); ++b) {
        const Poly& p = n.eqs[a];
        const Poly& q = n.eqs[b];
        Monomial lcm = mono_lcm(p.leading_monomial(), q.leading_monomial());
        if (lcm.degree() > 4) continue;
        Monomial mp, mq;
        if (!try_divide(lcm, p.leading_monomial(), mp)) continue;
        if (!try_divide(lcm, q.leading_monomial(), mq)) continue;
        Poly fp, fq;
        fp.add_term(mp, q.leading_coeff());
        fq.add_term(mq, p.leading_coeff());
        Poly s = p * fp - q * fq;
        s = normal_form(s, n.eqs);
        if (s.is_zero()) continue;
        s = s.monic();
        if (std::find(n.eqs.begin(), n.eqs.end(), s) == n.eqs.end() &&
            std::find(fresh.begin(), fresh.end(), s) == fresh.end())
          fresh.push_back(s);
      }
    if (fresh.empty()) return false;
    for (Poly& p : fresh) n.eqs.push_back(p);
    log(n.transcript_id, "s-poly: " + std::to_string(fresh.size()) + " new");
    return true;
  }

  static Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    // Merge the descending letter sequences, taking per-letter maxima.
    boost::container::small_vector<int, 8> letters;
    int ia = 0, ib = 0, da = a.degree(), db = b.degree();
    while (ia < da || ib < db) {
      int la = ia < da ? a.letter(ia) : -1;
      int lb = ib < db ? b.letter(ib) : -1;
      if (la == lb) {
        letters.push_back(la);
        ++ia;
        ++ib;
      } else if (la > lb) {
        letters.push_back(la);
        ++ia;
      } else {
        letters.push_back(lb);
        ++ib;
      }
    }
    Monomial r;
    if (letters.size() > 7) {
      // Too large to pack; callers skip such pairs via the degree bound.
      r.key = std::uint64_t{8} << 56;
      return r;
    }
    r.key = std::uint64_t(letters.size()) << 56;
    for (size_t k = 0; k < letters.size(); ++k)
      r.key |= std::uint64_t(letters[k]) << (48 - 8 * k);
    return r;
  }

  static Poly normal_form(Poly s, const std::vector<Poly>& basis) {
    bool changed = true;
    int guard = 0;
    while (changed && !s.is_zero() && ++guard < 500) {
      changed = false;
      for (const Poly& q : basis) {
        if (q.is_zero()) continue;
        Monomial quot;
        if (!try_divide(s.leading_monomial(), q.leading_monomial(), quot)) continue;
        Poly f;
        f.add_term(quot, s.leading_coeff() * q.leading_coeff().inv());
        s -= q * f;
        changed = true;
        break;
      }
    }
    return s;
  }

  void dedupe_solutions() {
    std::sort(result_.solutions.begin(), result_.solutions.end());
    result_.solutions.erase(std::unique(result_.solutions.begin(), result_.solutions.end()),
                            result_.solutions.end());
  }
};

}  // namespace

SolutionSet solve_system(const PolySystem& sys, SolverTranscript* transcript,
                         const SolverOptions& opts) {
  SolverImpl impl(sys, transcript, opts);
  return impl.run();
}

bool vanishes_on_solutions(const SolutionSet& sols, const Poly& q) {
  for (const Assignment& a : sols.solutions)
    if (!q.eval(a).is_zero()) return false;
  return true;
}

}  // namespace h8mp
