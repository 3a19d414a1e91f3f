#include "tropk/tame.hpp"

#include "tropk/error.hpp"
#include "tropk/subspace.hpp"

#include <algorithm>
#include <set>

namespace tropk {

FactoredFunction FactoredFunction::make(
    Rat constant, std::vector<std::pair<Rat, int>> factors) {
  if (constant == 0)
    throw Error(ErrorKind::InvalidInput, "the zero function has no class");
  std::vector<std::pair<Rat, int>> kept;
  for (auto& f : factors)
    if (f.second != 0) kept.push_back(std::move(f));
  std::sort(kept.begin(), kept.end());
  for (size_t i = 1; i < kept.size(); ++i)
    if (kept[i].first == kept[i - 1].first)
      throw Error(ErrorKind::InvalidInput, "repeated root in factored form");
  return FactoredFunction{std::move(constant), std::move(kept)};
}

namespace {

Rat eval_poly(const QVec& coeffs, const Rat& x) {
  Rat acc(0);
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

// Quotient of the polynomial by (t - r); the division must be exact.
QVec deflate(const QVec& coeffs, const Rat& r) {
  size_t d = coeffs.size() - 1;
  QVec q(d);
  q[d - 1] = coeffs[d];
  for (size_t i = d - 1; i >= 1; --i) q[i - 1] = coeffs[i] + r * q[i];
  return q;
}

std::vector<Int> positive_divisors(Int n) {
  n = abs(n);
  std::vector<Int> out;
  for (Int i = 1; i * i <= n; ++i)
    if (n % i == 0) {
      out.push_back(i);
      if (i * i != n) out.push_back(n / i);
    }
  return out;
}

}  // namespace

FactoredFunction factor_poly(const QVec& coeffs_in) {
  QVec coeffs = coeffs_in;
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty())
    throw Error(ErrorKind::InvalidInput, "the zero polynomial has no class");
  std::vector<std::pair<Rat, int>> roots;
  // factor out powers of t
  int at_zero = 0;
  while (coeffs.front() == 0) {
    ++at_zero;
    coeffs.erase(coeffs.begin());
  }
  if (at_zero > 0) roots.emplace_back(Rat(0), at_zero);
  while (coeffs.size() > 1) {
    // candidate rational roots p/q with p | a_0, q | a_d after clearing
    // denominators
    Int lcm(1);
    for (const Rat& c : coeffs) {
      Int den = denominator(c);
      lcm = lcm / gcd(lcm, den) * den;
    }
    Int a0 = numerator(coeffs.front() * Rat(lcm));
    Int ad = numerator(coeffs.back() * Rat(lcm));
    bool found = false;
    for (const Int& p : positive_divisors(a0)) {
      for (const Int& q : positive_divisors(ad)) {
        for (int sign = 0; sign < 2 && !found; ++sign) {
          Rat r = Rat(p) / Rat(q);
          if (sign) r = -r;
          if (eval_poly(coeffs, r) == 0) {
            int mult = 0;
            while (coeffs.size() > 1 && eval_poly(coeffs, r) == 0) {
              coeffs = deflate(coeffs, r);
              ++mult;
            }
            roots.emplace_back(r, mult);
            found = true;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found)
      throw Error(ErrorKind::UnsplitFactor,
                  "polynomial has an irreducible factor of degree >= 2");
  }
  return FactoredFunction::make(coeffs.front(), std::move(roots));
}

namespace {

void add_factored(std::map<Int, Rat>& acc, Int n, const Rat& mult) {
  n = abs(n);
  if (n == 0) throw Error(ErrorKind::InvalidInput, "zero has no class");
  for (Int p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      acc[p] += mult;
      n /= p;
    }
  if (n > 1) acc[n] += mult;
}

}  // namespace

K1Vec k1_class(const Rat& x) {
  if (x == 0) throw Error(ErrorKind::InvalidInput, "zero has no class");
  K1Vec out;
  add_factored(out.primes, numerator(x), Rat(1));
  add_factored(out.primes, denominator(x), Rat(-1));
  for (auto it = out.primes.begin(); it != out.primes.end();)
    it = it->second == 0 ? out.primes.erase(it) : std::next(it);
  return out;
}

bool K1Wedge::is_zero() const {
  for (const Rat& c : coords)
    if (c != 0) return false;
  return true;
}

namespace {

// Re-express wedge coordinates over a larger sorted prime basis. Sorted
// inclusions preserve index order, so no signs appear.
QVec expand_basis(const K1Wedge& w, const std::vector<Int>& basis) {
  int n = static_cast<int>(basis.size());
  QVec out(binomial(n, w.p).convert_to<size_t>(), Rat(0));
  std::vector<int> where;
  for (const Int& p : w.primes) {
    auto it = std::lower_bound(basis.begin(), basis.end(), p);
    where.push_back(static_cast<int>(it - basis.begin()));
  }
  auto idx = wedge_indices(static_cast<int>(w.primes.size()), w.p);
  for (size_t pos = 0; pos < idx.size(); ++pos) {
    std::vector<int> mapped;
    for (int i : idx[pos]) mapped.push_back(where[i]);
    out[wedge_pos(n, mapped)] = w.coords[pos];
  }
  return out;
}

}  // namespace

bool k1_wedge_equal(const K1Wedge& a, const K1Wedge& b) {
  if (a.p != b.p) return false;
  std::set<Int> all(a.primes.begin(), a.primes.end());
  all.insert(b.primes.begin(), b.primes.end());
  std::vector<Int> basis(all.begin(), all.end());
  return expand_basis(a, basis) == expand_basis(b, basis);
}

K1Wedge tame_residue(const std::vector<FactoredFunction>& symbol,
                     const ResiduePoint& pt) {
  if (symbol.empty())
    throw Error(ErrorKind::InvalidInput, "empty symbol");
  int p = static_cast<int>(symbol.size());
  std::vector<int> vals;
  std::vector<K1Vec> units;
  for (const FactoredFunction& f : symbol) {
    if (f.constant == 0)
      throw Error(ErrorKind::InvalidInput, "zero entry in symbol");
    int v = 0;
    K1Vec unit;
    if (pt.at_infinity) {
      for (const auto& [root, e] : f.factors) v -= e;
      unit = k1_class(f.constant);
    } else {
      std::map<Int, Rat> acc;
      add_factored(acc, numerator(f.constant), Rat(1));
      add_factored(acc, denominator(f.constant), Rat(-1));
      for (const auto& [root, e] : f.factors) {
        if (root == pt.c) {
          v = e;
          continue;
        }
        Rat d = pt.c - root;
        add_factored(acc, numerator(d), Rat(e));
        add_factored(acc, denominator(d), Rat(-e));
      }
      for (auto it = acc.begin(); it != acc.end();)
        it = it->second == 0 ? acc.erase(it) : std::next(it);
      unit.primes = std::move(acc);
    }
    vals.push_back(v);
    units.push_back(std::move(unit));
  }

  std::set<Int> support;
  for (const K1Vec& u : units)
    for (const auto& [prime, e] : u.primes) support.insert(prime);
  std::vector<Int> basis(support.begin(), support.end());
  int n = static_cast<int>(basis.size());

  K1Wedge out;
  out.p = p - 1;
  out.primes = basis;
  out.coords.assign(binomial(n, p - 1).convert_to<size_t>(), Rat(0));
  for (int i = 0; i < p; ++i) {
    if (vals[i] == 0) continue;
    QMat rows;
    for (int j = 0; j < p; ++j) {
      if (j == i) continue;
      QVec row(n, Rat(0));
      for (const auto& [prime, e] : units[j].primes) {
        auto it = std::lower_bound(basis.begin(), basis.end(), prime);
        row[it - basis.begin()] = e;
      }
      rows.push_back(std::move(row));
    }
    QVec term = wedge_of_rows(rows, n);
    Rat scale = Rat(vals[i]);
    if (i % 2 == 1) scale = -scale;
    for (size_t t = 0; t < term.size(); ++t) out.coords[t] += scale * term[t];
  }
  return out;
}

SymbolFactorResult symbol_factor(int vars,
                                 const std::vector<SymbolEntry>& raw) {
  if (raw.empty()) throw Error(ErrorKind::InvalidInput, "empty symbol");
  bool any_factored = false;
  for (const SymbolEntry& e : raw) {
    if (e.kind == SymbolEntry::Factored) any_factored = true;
    if (e.kind == SymbolEntry::Monomial &&
        e.exponent.size() != static_cast<size_t>(vars))
      throw Error(ErrorKind::InvalidInput, "exponent length != variable count");
    if (e.kind == SymbolEntry::Constant && e.c == 0)
      throw Error(ErrorKind::InvalidInput, "zero entry in symbol");
  }
  SymbolFactorResult out;
  if (any_factored) {
    if (vars != 1)
      throw Error(ErrorKind::UnsupportedEntry,
                  "factored entries only make sense in one variable");
    for (const SymbolEntry& e : raw) {
      switch (e.kind) {
        case SymbolEntry::Factored:
          out.residue_ready.push_back(e.f);
          break;
        case SymbolEntry::Monomial:
          out.residue_ready.push_back(FactoredFunction::make(
              Rat(1), {{Rat(0), static_cast<int>(e.exponent[0])}}));
          break;
        case SymbolEntry::Constant:
          out.residue_ready.push_back(FactoredFunction::make(e.c, {}));
          break;
      }
    }
    return out;
  }
  out.monomial = true;
  int ppow = static_cast<int>(raw.size());
  out.wedge.assign(binomial(vars, ppow).convert_to<size_t>(), Rat(0));
  for (const SymbolEntry& e : raw)
    if (e.kind == SymbolEntry::Constant) return out;  // constants die
  QMat rows;
  for (const SymbolEntry& e : raw) rows.push_back(to_qvec(e.exponent));
  out.wedge = wedge_of_rows(rows, vars);
  return out;
}

}  // namespace tropk
