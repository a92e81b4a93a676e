#include "crosscap/penner.hpp"

#include <numeric>
#include <set>

#include "crosscap/errors.hpp"

namespace crosscap {

namespace {

void check_basis(const CurveSystem& s, const PennerWord& w) {
  if (!w.basis.empty() && w.basis != s.basis()) throw ValidationError("word basis does not match the curve system");
}

std::vector<int> perm_power(const std::vector<int>& perm, int exponent) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> base = perm;
  if (exponent < 0) {
    for (int i = 0; i < n; ++i) base[perm[i]] = i;
    exponent = -exponent;
  }
  std::vector<int> out(n);
  std::iota(out.begin(), out.end(), 0);
  for (int e = 0; e < exponent; ++e)
    for (int i = 0; i < n; ++i) out[i] = base[out[i]];
  return out;
}

TransitionMatrix with_basis(const CurveSystem& s, IntMatrix m) {
  TransitionMatrix t;
  t.entries = std::move(m);
  t.basis = s.basis();
  t.provenance.basis = t.basis;
  return t;
}

}  // namespace

PennerWord concatenate(const PennerWord& u, const PennerWord& v) {
  if (!u.basis.empty() && !v.basis.empty() && u.basis != v.basis) throw ValidationError("cannot concatenate words on different bases");
  PennerWord out;
  out.basis = u.basis.empty() ? v.basis : u.basis;
  out.moves = u.moves;
  out.moves.insert(out.moves.end(), v.moves.begin(), v.moves.end());
  return out;
}

long permutation_order(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> seen(n, 0);
  long order = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    long len = 0;
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

TransitionMatrix twist_matrix(const CurveSystem& s, const std::string& c, int power) {
  int ci = s.index_of(c);
  if (!s.curves()[ci].two_sided) throw TwistForbidden("cannot twist about one-sided curve " + c);
  if (power == 0) throw ValidationError("twist power must be nonzero");
  IntMatrix m = IntMatrix::identity(s.size());
  const int p = power < 0 ? -power : power;
  for (int d = 0; d < s.size(); ++d)
    if (d != ci) m(ci, d) = p * s.intersection(ci, d);
  auto t = with_basis(s, std::move(m));
  t.provenance.moves = {Twist{c, power}};
  return t;
}

TransitionMatrix rotation_matrix(const CurveSystem& s, const std::vector<int>& perm) {
  const int n = s.size();
  if (static_cast<int>(perm.size()) != n) throw ValidationError("permutation length differs from basis size");
  std::vector<char> hit(n, 0);
  for (int x : perm) {
    if (x < 0 || x >= n || hit[x]) throw ValidationError("rotation is not a bijection of the basis");
    hit[x] = 1;
  }
  IntMatrix m(n, n);
  for (int c = 0; c < n; ++c) m(perm[c], c) = 1;
  return with_basis(s, std::move(m));
}

TransitionMatrix word_matrix(const CurveSystem& s, const PennerWord& w) {
  check_basis(s, w);
  IntMatrix m = IntMatrix::identity(s.size());
  for (const auto& move : w.moves) {
    if (const auto* t = std::get_if<Twist>(&move)) {
      m = m * twist_matrix(s, t->curve, t->power).entries;
    } else {
      const auto& r = std::get<Rotate>(move);
      m = m * rotation_matrix(s, perm_power(s.symmetry(r.symmetry).curves, r.exponent)).entries;
    }
  }
  if (!m.nonnegative()) throw ConsistencyError("transition matrix acquired a negative entry");
  auto out = with_basis(s, std::move(m));
  out.provenance = w;
  out.provenance.basis = s.basis();
  return out;
}

PennerReport validate_penner_word(const CurveSystem& s, const PennerWord& w) {
  PennerReport rep;
  rep.filling = is_filling(s);
  if (!rep.filling) rep.diagnostics.push_back("Penner condition 1 (filling) violated: a complementary region is not a disk with at most one marked point");
  try {
    auto marks = marking_report(s);
    rep.inconsistent = marks.inconsistent;
    for (int v : marks.consistent_crossings)
      rep.diagnostics.push_back("Penner condition 2 (marked inconsistently) violated at crossing v" + std::to_string(v));
  } catch (const ValidationError& e) {
    rep.inconsistent = false;
    rep.diagnostics.push_back(std::string("Penner condition 2 (marked inconsistently) undecidable: ") + e.what());
  }

  rep.signs_consistent = true;
  if (!w.basis.empty() && w.basis != s.basis()) {
    rep.signs_consistent = false;
    rep.diagnostics.push_back("Penner word basis does not match the curve system");
  }
  bool unrollable = true;
  std::vector<int> total(s.size());
  std::iota(total.begin(), total.end(), 0);
  for (const auto& move : w.moves) {
    if (const auto* t = std::get_if<Twist>(&move)) {
      auto ci = s.find(t->curve);
      if (!ci) {
        rep.signs_consistent = false;
        rep.diagnostics.push_back("Penner condition 4 (twist signs) violated: unknown curve " + t->curve);
        continue;
      }
      const auto& cv = s.curves()[*ci];
      if (!cv.two_sided) {
        rep.signs_consistent = false;
        rep.diagnostics.push_back("Penner condition 4 (twist signs) violated: " + cv.id + " is one-sided");
      }
      if (t->power == 0 || (t->power > 0) != (cv.twist_sign > 0)) {
        rep.signs_consistent = false;
        rep.diagnostics.push_back("Penner condition 4 (twist signs) violated: power " + std::to_string(t->power) + " on " +
                                  cv.id + " with twist sign " + (cv.twist_sign > 0 ? "+1" : "-1"));
      }
    } else {
      const auto& r = std::get<Rotate>(move);
      auto it = s.symmetries().find(r.symmetry);
      if (it == s.symmetries().end()) {
        unrollable = false;
        rep.signs_consistent = false;
        rep.diagnostics.push_back("Penner word names unknown symmetry " + r.symmetry);
        continue;
      }
      if (!it->second.preserves_markings) {
        rep.signs_consistent = false;
        rep.diagnostics.push_back("Penner condition 4 (twist signs) violated: symmetry " + r.symmetry + " does not preserve markings");
      }
      auto p = perm_power(it->second.curves, r.exponent);
      std::vector<int> next(s.size());
      for (int c = 0; c < s.size(); ++c) next[c] = total[p[c]];
      total = next;
    }
  }

  if (unrollable) {
    // A power of the word whose rotation part is trivial is a product of
    // twists about rotated curves; read condition 3 off that power.
    rep.unrolled_power = static_cast<int>(permutation_order(total));
    std::vector<int> acc(s.size());
    std::iota(acc.begin(), acc.end(), 0);
    std::set<int> twisted;
    for (int copy = 0; copy < rep.unrolled_power; ++copy)
      for (const auto& move : w.moves) {
        if (const auto* t = std::get_if<Twist>(&move)) {
          if (auto ci = s.find(t->curve)) twisted.insert(acc[*ci]);
        } else {
          const auto& r = std::get<Rotate>(move);
          auto p = perm_power(s.symmetry(r.symmetry).curves, r.exponent);
          std::vector<int> next(s.size());
          for (int c = 0; c < s.size(); ++c) next[c] = acc[p[c]];
          acc = next;
        }
      }
    rep.all_twisted = static_cast<int>(twisted.size()) == s.size();
    if (!rep.all_twisted)
      for (int c = 0; c < s.size(); ++c)
        if (!twisted.count(c)) {
          rep.diagnostics.push_back("Penner condition 3 (every curve twisted) violated: " + s.curves()[c].id + " never twisted");
          break;
        }
  } else {
    rep.all_twisted = false;
  }
  return rep;
}

}  // namespace crosscap
