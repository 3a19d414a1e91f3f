// Acceptance gate: each numbered criterion prints one pass/fail line; the
// process exits nonzero when any of them fails.

#include "fixtures.hpp"
#include "tropk/error.hpp"
#include "tropk/gersten.hpp"
#include "tropk/kgroups.hpp"
#include "tropk/tame.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace tropk;
using fixtures::zv;

namespace {

int failures = 0;

void criterion(int number, const std::string& title,
               const std::function<void()>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string verdict = "pass";
  std::string detail;
  try {
    body();
  } catch (const std::exception& e) {
    verdict = "FAIL";
    detail = e.what();
    ++failures;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::cout << "criterion " << number << " (" << title << "): " << verdict
            << " [" << ms << " ms]";
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

// --- corpus ---------------------------------------------------------------

std::mt19937 corpus_rng(2026);

ZVec random_ray(int n, std::mt19937& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  ZVec v(n);
  while (is_zero(v))
    for (int i = 0; i < n; ++i) v[i] = d(rng);
  return primitive(v);
}

Fan random_hypersurface(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3), terms(2, 4);
  int t = terms(rng);
  ZMat exps;
  for (int i = 0; i < t; ++i) {
    ZVec m(n);
    for (int j = 0; j < n; ++j) m[j] = d(rng);
    exps.push_back(std::move(m));
  }
  return tropical_hypersurface(ExponentPolynomial::make(n, exps));
}

Fan random_cone_union(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> count(1, 3), gens(1, n);
  std::vector<Cone> cones;
  for (int c = 0; c < count(rng); ++c) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      ZMat g;
      for (int i = 0, m = gens(rng); i < m; ++i)
        g.push_back(random_ray(n, rng));
      try {
        std::vector<Cone> with = cones;
        with.push_back(Cone::from_generators(n, g));
        Fan candidate(n, with);
        if (!check_fan(n, candidate.cones()).ok) continue;
        cones = std::move(with);
        break;
      } catch (const Error&) {
        continue;  // generators picked a line; try again
      }
    }
  }
  return Fan(n, std::move(cones));
}

// A ray inside the support: positive combination of one cone's rays.
ZVec interior_ray(const Fan& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(1, 3);
  const Cone& c = f.cones()[f.maximal()[rng() % f.maximal().size()]];
  if (c.dim() == 0) return {};
  ZVec ray(f.rank(), 0);
  for (const ZVec& r : c.rays()) {
    Int a(coeff(rng));
    for (int i = 0; i < f.rank(); ++i) ray[i] += a * r[i];
  }
  return primitive(ray);
}

std::vector<Fan> support_corpus() {
  static std::vector<Fan> corpus = [] {
    std::vector<Fan> out;
    for (int t = 0; t < 100; ++t) {
      int n = 2 + t % 2;
      out.push_back(t % 2 ? random_hypersurface(n, corpus_rng)
                          : random_cone_union(n, corpus_rng));
    }
    return out;
  }();
  return corpus;
}

Fan random_complete_fan(std::mt19937& rng) {
  Fan f = rng() % 2 ? fixtures::p2_fan() : fixtures::p3_fan();
  int steps = 1 + rng() % 2;
  for (int s = 0; s < steps; ++s)
    f = stellar_subdivision(f, random_ray(f.rank(), rng));
  return f;
}

RealBasisPtr sqrt2_basis() {
  static RealBasisPtr b = std::make_shared<RealBasis>(
      std::vector<RealBasis::Element>{{"sqrt2", Rat(1414, 1000),
                                       Rat(1415, 1000),
                                       {Rat(-2), Rat(0), Rat(1)}}});
  return b;
}

Flag random_flag(int n, int r, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  Flag x;
  x.rank = n;
  for (int i = 0; i < r; ++i) {
    FRVec level;
    for (int j = 0; j < n; ++j) {
      if (rng() % 3 == 0)
        level.emplace_back(
            FormalReal(sqrt2_basis(), {Rat(d(rng)), Rat(d(rng))}));
      else
        level.emplace_back(Rat(d(rng)));
    }
    x.levels.push_back(std::move(level));
  }
  return x;
}

bool flags_equal(const Flag& a, const Flag& b) {
  if (a.levels.size() != b.levels.size()) return false;
  for (size_t i = 0; i < a.levels.size(); ++i)
    for (size_t j = 0; j < a.levels[i].size(); ++j)
      if (!(a.levels[i][j] - b.levels[i][j]).is_zero()) return false;
  return true;
}

}  // namespace

int main() {
  criterion(1, "f spaces depend only on the support", [] {
    std::mt19937 rng(101);
    for (const Fan& f : support_corpus()) {
      int n = f.rank();
      std::vector<FpSpaces> base;
      for (int p = 0; p <= n; ++p) base.push_back(f_spaces(f, p));
      Fan refined = f;
      for (int s = 0; s < 3; ++s) {
        ZVec ray = interior_ray(refined, rng);
        if (ray.empty()) break;
        refined = stellar_subdivision(refined, ray);
        for (int p = 0; p <= n; ++p) {
          FpSpaces got = f_spaces(refined, p);
          require(got.lower == base[p].lower && got.kernel == base[p].kernel,
                  "f_spaces changed under a stellar refinement");
        }
      }
    }
  });

  criterion(2, "classes vanish above the maximal cone dimension", [] {
    for (const Fan& f : support_corpus()) {
      int top = f.max_cone_dim();
      for (int p = top + 1; p <= f.rank() + 1; ++p)
        require(f_spaces(f, p).class_dim() == 0,
                "nonzero class space above the top cone dimension");
    }
  });

  criterion(3, "pairing radical equals the joint wedge kernel", [] {
    for (const Fan& f : support_corpus())
      for (int p = 1; p <= f.rank(); ++p)
        require(flag_kernel_check(f, p), "kernel comparison failed");
  });

  criterion(4, "tropical line and plane class dimensions", [] {
    Fan line = tropical_hypersurface(
        ExponentPolynomial::make(2, {zv({1, 0}), zv({0, 1}), zv({0, 0})}));
    require(f_spaces(line, 1).class_dim() == 2, "line F^1");
    require(f_spaces(line, 2).class_dim() == 0, "line F^2");
    Fan plane = tropical_hypersurface(ExponentPolynomial::make(
        3, {zv({1, 0, 0}), zv({0, 1, 0}), zv({0, 0, 1}), zv({0, 0, 0})}));
    require(f_spaces(plane, 1).class_dim() == 3, "plane F^1");
    require(f_spaces(plane, 2).class_dim() == 3, "plane F^2");
    require(f_spaces(plane, 3).class_dim() == 0, "plane F^3");
  });

  criterion(5, "complex squares to zero on the complete corpus", [] {
    std::vector<Fan> fans{fixtures::p2_fan(), fixtures::p1xp1_fan(),
                          fixtures::hirzebruch2_fan(), fixtures::p3_fan()};
    std::mt19937 rng(505);
    for (int t = 0; t < 50; ++t) fans.push_back(random_complete_fan(rng));
    for (const Fan& f : fans)
      for (int p = 1; p <= f.rank(); ++p)
        cohomology_dims(build_complex(f, p));  // throws when d^2 != 0
  });

  criterion(6, "top cokernels match the Chow oracle", [] {
    auto expect = [](const Fan& f, int p, int dim) {
      GerstenComparison cmp = compare_with_oracle(f, p);
      require(cmp.match, "cokernel disagrees with the oracle");
      require(cmp.top_cokernel == dim, "unexpected oracle value");
    };
    expect(fixtures::p2_fan(), 1, 1);
    expect(fixtures::p2_fan(), 2, 1);
    expect(fixtures::p1xp1_fan(), 1, 2);
    expect(fixtures::p1xp1_fan(), 2, 1);
    expect(fixtures::hirzebruch2_fan(), 1, 2);
    expect(fixtures::hirzebruch2_fan(), 2, 1);
    expect(fixtures::p3_fan(), 1, 1);
    expect(fixtures::p3_fan(), 2, 1);
    expect(fixtures::p3_fan(), 3, 1);
  });

  criterion(7, "flag height equals the value group height", [] {
    std::mt19937 rng(707);
    for (int t = 0; t < 200; ++t) {
      Flag x = random_flag(1 + t % 4, 1 + t % 3, rng);
      HeightResult h = group_height(flag_value_group(x));
      require(flag_height(x) == h.height,
              "canonical level count differs from the convex chain height");
    }
  });

  criterion(8, "limit points and canonical forms are stable", [] {
    std::mt19937 rng(808);
    std::uniform_int_distribution<int> num(1, 5);
    for (int t = 0; t < 100; ++t) {
      Fan f = t % 2 ? fixtures::p2_fan() : fixtures::p3_fan();
      std::vector<Fan> tower{f};
      for (int s = 0; s < 2; ++s)
        tower.push_back(
            stellar_subdivision(tower.back(), random_ray(f.rank(), rng)));
      Flag x = random_flag(f.rank(), 1 + t % 3, rng);
      const Cone& coarse = limit_point(tower.front(), x);
      const Cone& fine = limit_point(tower.back(), x);
      require(coarse.contains(fine), "refinement broke the limit point");
      Flag c = canonicalize(x);
      require(flags_equal(c, canonicalize(c)), "canonicalize not idempotent");
      Flag y = x;
      if (!y.levels.empty()) {
        Rat scale(num(rng), num(rng));
        for (FormalReal& e : y.levels[t % y.levels.size()]) e = e * scale;
        require(flags_equal(c, canonicalize(y)),
                "positive rescaling changed the canonical form");
      }
    }
  });

  criterion(9, "residue identities", [] {
    // uniformizer independence on 100 random valid pairs
    std::mt19937 rng(909);
    std::uniform_int_distribution<int> d(-5, 5);
    Fan f = fixtures::p3_fan();
    std::vector<std::pair<Cone, Cone>> pairs;
    for (const Cone& tau : f.cones())
      for (const Cone& sigma : f.cones())
        if (sigma.dim() == tau.dim() + 1 && sigma.contains(tau))
          pairs.push_back({tau, sigma});
    int done = 0;
    for (int t = 0; done < 100; ++t) {
      const auto& [tau, sigma] = pairs[t % pairs.size()];
      Stratum st = stratum_projection(f, tau);
      int k = st.rank();
      Cone sigma_bar = map_cone(st.projection(), sigma, k);
      const ZVec& u = sigma_bar.rays()[0];
      ZVec base = dual_unit(u);
      ZVec other = base;
      for (const ZVec& w : integer_kernel(ZMat{u}, k)) {
        Int c(d(rng));
        for (int i = 0; i < k; ++i) other[i] += c * w[i];
      }
      for (int q = 1; q <= k && done < 100; ++q, ++done) {
        QVec omega(binomial(k, q).convert_to<size_t>());
        for (Rat& x : omega) x = Rat(d(rng));
        require(residue_contract(f, tau, sigma, q, omega, base) ==
                    residue_contract(f, tau, sigma, q, omega, other),
                "residue depended on the uniformizer");
      }
    }
    // Steinberg symbols die at every split point
    std::vector<FactoredFunction> steinberg{
        FactoredFunction::make(Rat(1), {{Rat(0), 1}}),
        FactoredFunction::make(Rat(-1), {{Rat(1), 1}})};
    for (const ResiduePoint& pt :
         {ResiduePoint::at(Rat(0)), ResiduePoint::at(Rat(1)),
          ResiduePoint::at(Rat(-3)), ResiduePoint::infinity()})
      require(tame_residue(steinberg, pt).is_zero(),
              "Steinberg residue survived");
    // the uniformizer law on 50 random factored pairs
    std::uniform_int_distribution<int> root(-4, 4), cc(1, 9), e(1, 3);
    for (int t = 0; t < 50; ++t) {
      Rat c(root(rng));
      std::map<Rat, int> gf;
      for (int i = 0; i < 2; ++i) {
        Rat r(root(rng));
        if (r != c) gf[r] += e(rng);
      }
      FactoredFunction g =
          FactoredFunction::make(Rat(cc(rng)), {gf.begin(), gf.end()});
      // g evaluated at c, as a K1 class
      Rat value = g.constant;
      for (const auto& [r, k] : g.factors) {
        Rat base_val = c - r;
        for (int i = 0; i < k; ++i) value *= base_val;
      }
      K1Wedge got = tame_residue(
          {FactoredFunction::make(Rat(1), {{c, 1}}), g}, ResiduePoint::at(c));
      K1Vec cls = k1_class(value);
      K1Wedge expect{1, {}, {}};
      for (const auto& [prime, exp] : cls.primes) {
        expect.primes.push_back(prime);
        expect.coords.push_back(exp);
      }
      require(k1_wedge_equal(got, expect),
              "residue of (t - c, g) is not the class of g(c)");
    }
  });

  criterion(10, "transfer composed with restriction is the index", [] {
    std::mt19937 rng(1010);
    std::uniform_int_distribution<int> d(-4, 4);
    int done = 0;
    while (done < 20) {
      int n = 1 + done % 3;
      ZMat b(n, ZVec(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i][j] = d(rng);
      Int index;
      try {
        index = lattice_index(b, n);
      } catch (const Error&) {
        continue;
      }
      for (int p = 1; p <= n; ++p) {
        QVec cls(binomial(n, p).convert_to<size_t>());
        for (Rat& x : cls) x = Rat(d(rng));
        QVec round = monomial_transfer(b, p, k_restriction(b, p, cls));
        for (Rat& x : cls) x *= Rat(index);
        require(round == cls, "transfer law violated");
      }
      ++done;
    }
  });

  std::cout << (failures == 0 ? "all criteria passed"
                              : "some criteria FAILED")
            << "\n";
  return failures == 0 ? 0 : 1;
}
