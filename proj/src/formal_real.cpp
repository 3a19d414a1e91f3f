#include "tropk/formal_real.hpp"

#include <algorithm>

namespace tropk {

int& interval_depth() {
  static int depth = 64;
  return depth;
}

static Rat eval_poly(const std::vector<Rat>& poly, const Rat& x) {
  Rat acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RealBasis::RealBasis(std::vector<Element> elems) : elems_(std::move(elems)) {
  for (const Element& e : elems_) {
    if (e.lo > e.hi)
      throw Error(ErrorKind::InvalidInput, "empty enclosure for " + e.name);
    if (!e.poly.empty()) {
      int slo = sgn(eval_poly(e.poly, e.lo)), shi = sgn(eval_poly(e.poly, e.hi));
      if (slo * shi > 0)
        throw Error(ErrorKind::InvalidInput,
                    "defining polynomial of " + e.name +
                        " has no sign change on its enclosure");
    }
  }
}

FormalReal::FormalReal(RealBasisPtr basis, std::vector<Rat> coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
  if (!basis_) throw Error(ErrorKind::InvalidInput, "null basis");
  if (coeffs_.size() != static_cast<size_t>(basis_->size()) + 1)
    throw Error(ErrorKind::InvalidInput, "coefficient count != basis size + 1");
}

bool FormalReal::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rat& c) { return c == 0; });
}

bool FormalReal::is_rational() const {
  for (size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return false;
  return true;
}

int FormalReal::sign() const {
  if (is_zero()) return 0;  // exact: Q-independence axiom
  if (is_rational()) return sgn(coeffs_[0]);

  struct Interval { Rat lo, hi; };
  std::vector<Interval> enc;
  for (const auto& e : basis_->elements()) enc.push_back({e.lo, e.hi});

  int budget = interval_depth();
  for (;;) {
    Rat lo = coeffs_[0], hi = coeffs_[0];
    for (size_t k = 1; k < coeffs_.size(); ++k) {
      const Rat& c = coeffs_[k];
      if (c == 0) continue;
      if (c > 0) {
        lo += c * enc[k - 1].lo;
        hi += c * enc[k - 1].hi;
      } else {
        lo += c * enc[k - 1].hi;
        hi += c * enc[k - 1].lo;
      }
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    // Bisect the widest refinable enclosure among the contributing elements.
    int widest = -1;
    Rat width = 0;
    for (size_t k = 1; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0 || basis_->element(k - 1).poly.empty()) continue;
      Rat w = enc[k - 1].hi - enc[k - 1].lo;
      if (widest < 0 || w > width) { widest = static_cast<int>(k - 1); width = w; }
    }
    if (widest < 0 || budget-- <= 0)
      throw Error(ErrorKind::IndeterminateSign,
                  "enclosures cannot separate " + str() + " from zero");
    const auto& poly = basis_->element(widest).poly;
    Interval& iv = enc[widest];
    Rat mid = (iv.lo + iv.hi) / 2;
    Rat pm = eval_poly(poly, mid);
    if (pm == 0) {
      iv.lo = iv.hi = mid;
    } else if (sgn(pm) == sgn(eval_poly(poly, iv.lo))) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
}

static void align(const FormalReal& a, const FormalReal& b, RealBasisPtr& basis,
                  size_t& len) {
  if (a.basis() && b.basis() && a.basis() != b.basis())
    throw Error(ErrorKind::InvalidInput, "mixing distinct declared bases");
  basis = a.basis() ? a.basis() : b.basis();
  len = basis ? basis->size() + 1 : 1;
}

FormalReal FormalReal::operator+(const FormalReal& o) const {
  RealBasisPtr basis;
  size_t len;
  align(*this, o, basis, len);
  std::vector<Rat> c(len);
  for (size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
  for (size_t k = 0; k < o.coeffs_.size(); ++k) c[k] += o.coeffs_[k];
  return basis ? FormalReal(basis, std::move(c)) : FormalReal(c[0]);
}

FormalReal FormalReal::operator-(const FormalReal& o) const { return *this + (-o); }

FormalReal FormalReal::operator-() const {
  FormalReal r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

FormalReal FormalReal::operator*(const Rat& s) const {
  FormalReal r = *this;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

std::string FormalReal::str() const {
  std::string out;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) out += " + ";
    out += rat_to_string(coeffs_[k]);
    if (k > 0) out += "*" + basis_->element(k - 1).name;
    first = false;
  }
  return first ? "0" : out;
}

FormalReal dot(const ZVec& m, const FRVec& v) {
  FormalReal acc;
  for (size_t i = 0; i < m.size(); ++i) acc += v[i] * Rat(m[i]);
  return acc;
}

FormalReal dot(const QVec& m, const FRVec& v) {
  FormalReal acc;
  for (size_t i = 0; i < m.size(); ++i) acc += v[i] * m[i];
  return acc;
}

int lex_sign(const FRVec& tuple) {
  for (const FormalReal& x : tuple) {
    int s = x.sign();
    if (s != 0) return s;
  }
  return 0;
}

FRVec fr_vec(const QVec& v) {
  FRVec out;
  out.reserve(v.size());
  for (const Rat& x : v) out.emplace_back(x);
  return out;
}

FRVec fr_vec(const ZVec& v) { return fr_vec(to_qvec(v)); }

QVec expand_coeffs(const FRVec& tuple, int s) {
  QVec out(tuple.size() * (s + 1));
  for (size_t i = 0; i < tuple.size(); ++i) {
    const auto& c = tuple[i].coeffs();
    if (c.size() > static_cast<size_t>(s) + 1)
      throw Error(ErrorKind::InvalidInput, "tuple entry exceeds declared basis");
    for (size_t k = 0; k < c.size(); ++k) out[i * (s + 1) + k] = c[k];
  }
  return out;
}

int common_basis_size(const FRMat& m) {
  RealBasisPtr basis;
  for (const FRVec& row : m)
    for (const FormalReal& x : row) {
      if (!x.basis()) continue;
      if (basis && basis != x.basis())
        throw Error(ErrorKind::InvalidInput, "mixing distinct declared bases");
      basis = x.basis();
    }
  return basis ? basis->size() : 0;
}

}  // namespace tropk
