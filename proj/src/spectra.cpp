#include "crosscap/spectra.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>

#include "crosscap/errors.hpp"

namespace crosscap {

namespace {

using Bits = std::vector<std::uint64_t>;

std::vector<std::vector<int>> out_lists(const IntMatrix& m) {
  std::vector<std::vector<int>> out(m.cols());
  for (int v = 0; v < m.cols(); ++v)
    for (int u = 0; u < m.rows(); ++u)
      if (m(u, v) > 0) out[v].push_back(u);
  return out;
}

int period_of(const std::vector<std::vector<int>>& out, const std::vector<int>& comp) {
  std::vector<int> level(out.size(), -1), in_comp(out.size(), 0);
  for (int v : comp) in_comp[v] = 1;
  std::vector<int> queue{comp.front()};
  level[comp.front()] = 0;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int v = queue[q];
    for (int u : out[v])
      if (in_comp[u] && level[u] == -1) {
        level[u] = level[v] + 1;
        queue.push_back(u);
      }
  }
  int g = 0;
  for (int v : comp)
    for (int u : out[v])
      if (in_comp[u]) g = std::gcd(g, std::abs(level[v] + 1 - level[u]));
  return g;
}

ComponentCertificate certify_block(const IntMatrix& m, const std::vector<int>& idx, const mpq_class& gap) {
  ComponentCertificate cc;
  cc.indices = idx;
  if (idx.size() == 1) {
    cc.lower = cc.upper = mpq_class(m(idx[0], idx[0]));
    return cc;
  }
  const IntMatrix sub = m.submatrix(idx);
  const std::size_t n = idx.size();
  std::vector<mpz_class> v(n, mpz_class(1));
  for (long it = 1; it <= kIterationCap; ++it) {
    auto [lo, hi] = collatz_wielandt(sub, v);
    if (hi - lo <= gap) {
      cc.lower = lo;
      cc.upper = hi;
      cc.witness = v;
      cc.iterations = it;
      return cc;
    }
    // Iterating with B + I keeps periodic blocks convergent.
    auto w = sub.apply(v);
    std::size_t bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] += v[i];
      bits = std::max(bits, mpz_sizeinbase(w[i].get_mpz_t(), 2));
    }
    if (bits > 320) {
      const auto shift = static_cast<mp_bitcnt_t>(bits - 256);
      for (auto& x : w) {
        mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), shift);
        if (x == 0) x = 1;
      }
    }
    v = std::move(w);
  }
  throw ConvergenceError("power iteration did not reach the requested gap within " + std::to_string(kIterationCap) +
                         " iterations");
}

}  // namespace

std::pair<mpq_class, mpq_class> collatz_wielandt(const IntMatrix& m, const std::vector<mpz_class>& v) {
  auto w = m.apply(v);
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] <= 0) throw ValidationError("Collatz-Wielandt witness must be positive");
    if (w[i] * v[lo] < w[lo] * v[i]) lo = i;
    if (w[i] * v[hi] > w[hi] * v[i]) hi = i;
  }
  mpq_class a(w[lo], v[lo]), b(w[hi], v[hi]);
  a.canonicalize();
  b.canonicalize();
  return {a, b};
}

std::vector<std::vector<int>> strongly_connected_components(const IntMatrix& m) {
  const auto out = out_lists(m);
  const int n = m.cols();
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<char> on_stack(n, 0);
  std::vector<std::vector<int>> comps;
  int counter = 0;
  std::function<void(int)> visit = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (int u : out[v]) {
      if (index[u] == -1) {
        visit(u);
        low[v] = std::min(low[v], low[u]);
      } else if (on_stack[u]) {
        low[v] = std::min(low[v], index[u]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<int> comp;
      int u;
      do {
        u = stack.back();
        stack.pop_back();
        on_stack[u] = 0;
        comp.push_back(u);
      } while (u != v);
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
  };
  for (int v = 0; v < n; ++v)
    if (index[v] == -1) visit(v);
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

Primitivity primitivity(const IntMatrix& m) {
  Primitivity p;
  const int n = m.cols();
  if (n == 0) return p;
  auto comps = strongly_connected_components(m);
  if (comps.size() != 1) return p;
  const auto out = out_lists(m);
  if (n == 1 && out[0].empty()) return p;
  p.irreducible = true;
  if (period_of(out, comps[0]) != 1) return p;
  p.primitive = true;
  const std::size_t words = (n + 63) / 64;
  std::vector<Bits> step(n, Bits(words, 0));
  for (int v = 0; v < n; ++v)
    for (int u : out[v]) step[v][u / 64] |= std::uint64_t{1} << (u % 64);
  auto full = [&](const Bits& b) {
    for (int u = 0; u < n; ++u)
      if (!((b[u / 64] >> (u % 64)) & 1u)) return false;
    return true;
  };
  std::vector<Bits> reach = step;
  const long cap = static_cast<long>(n - 1) * (n - 1) + 1;
  for (long e = 1; e <= cap; ++e) {
    if (std::all_of(reach.begin(), reach.end(), full)) {
      p.exponent = static_cast<int>(e);
      return p;
    }
    std::vector<Bits> next(n, Bits(words, 0));
    for (int v = 0; v < n; ++v)
      for (int u = 0; u < n; ++u)
        if ((reach[v][u / 64] >> (u % 64)) & 1u)
          for (std::size_t w = 0; w < words; ++w) next[v][w] |= step[u][w];
    reach = std::move(next);
  }
  throw ConsistencyError("aperiodic irreducible matrix exceeded the Wielandt exponent bound");
}

PFCertificate pf_eigenvalue(const IntMatrix& m, const mpq_class& gap) {
  if (m.rows() != m.cols() || m.rows() == 0) throw ParameterError("PF eigenvalue needs a non-empty square matrix");
  if (!m.nonnegative()) throw ParameterError("PF eigenvalue needs a non-negative matrix");
  if (gap <= 0) throw ParameterError("gap must be positive");
  PFCertificate cert;
  auto comps = strongly_connected_components(m);
  cert.reducible = comps.size() > 1;
  int best = -1;
  for (const auto& comp : comps) {
    auto cc = certify_block(m, comp, gap);
    cert.iterations += cc.iterations;
    if (best == -1 || cc.upper > cert.components[best].upper) best = static_cast<int>(cert.components.size());
    cert.lower = std::max(cert.lower, cc.lower);
    cert.components.push_back(std::move(cc));
  }
  cert.upper = cert.components[best].upper;
  cert.dominant = cert.components[best].indices;
  cert.witness = cert.components[best].witness;
  cert.degenerate = cert.upper == 0;
  auto prim = primitivity(m);
  cert.primitive = prim.primitive;
  cert.primitivity_exponent = prim.exponent;
  return cert;
}

std::string rational_string(const mpq_class& value) {
  mpq_class q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string decimal_string(const mpq_class& q, int digits) {
  mpz_class num = abs(q.get_num());
  const mpz_class& den = q.get_den();
  mpz_class whole = num / den;
  mpz_class rem = num % den;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class frac = rem * scale / den;
  std::string f = frac.get_str();
  if (static_cast<int>(f.size()) < digits) f.insert(0, digits - f.size(), '0');
  std::string out = (q < 0 ? "-" : "") + whole.get_str();
  if (digits > 0) out += "." + f;
  return out;
}

mpq_class parse_rational(const std::string& text) {
  auto slash = text.find('/');
  mpq_class out;
  if (slash != std::string::npos) {
    mpz_class a, b;
    if (a.set_str(text.substr(0, slash), 10) != 0 || b.set_str(text.substr(slash + 1), 10) != 0 || b == 0)
      throw ParseError("bad rational '" + text + "'");
    out = mpq_class(a, b);
    out.canonicalize();
    return out;
  }
  std::string mant = text;
  long exp10 = 0;
  auto e = text.find_first_of("eE");
  if (e != std::string::npos) {
    mant = text.substr(0, e);
    try {
      std::size_t used = 0;
      exp10 = std::stol(text.substr(e + 1), &used);
      if (used != text.size() - e - 1) throw ParseError("bad exponent");
    } catch (const std::exception&) {
      throw ParseError("bad rational '" + text + "'");
    }
  }
  bool neg = !mant.empty() && (mant[0] == '-' || mant[0] == '+');
  bool minus = !mant.empty() && mant[0] == '-';
  if (neg) mant.erase(0, 1);
  std::string digits;
  bool dot = false;
  for (char ch : mant) {
    if (ch == '.' && !dot) {
      dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits += ch;
      if (dot) --exp10;
    } else {
      throw ParseError("bad rational '" + text + "'");
    }
  }
  if (digits.empty()) throw ParseError("bad rational '" + text + "'");
  mpz_class n(digits, 10), p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  out = exp10 < 0 ? mpq_class(n, p) : mpq_class(n * p);
  out.canonicalize();
  return minus ? mpq_class(-out) : out;
}

std::string write_certificate(const PFCertificate& c) {
  std::ostringstream os;
  os << "lower " << rational_string(c.lower) << '\n'
     << "upper " << rational_string(c.upper) << '\n'
     << "iterations " << c.iterations << '\n'
     << "primitive " << (c.primitive ? "yes" : "no") << '\n'
     << "primitivity-exponent " << c.primitivity_exponent << '\n'
     << "reducible " << (c.reducible ? "yes" : "no") << '\n'
     << "degenerate " << (c.degenerate ? "yes" : "no") << '\n';
  return os.str();
}

}  // namespace crosscap
