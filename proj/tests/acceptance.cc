// Copyright 2026 The pgext Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes.  All checks are exact.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "pgext/abelian.h"
#include "pgext/autgroup.h"
#include "pgext/equivalence.h"
#include "pgext/extension.h"
#include "pgext/oracle.h"
#include "pgext/snf.h"
#include "test_helpers.h"
#include "test_oracles.h"

namespace pgext {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

SearchOptions Exhaustive() {
  SearchOptions options;
  options.middle_type_filter = false;
  return options;
}

// 1. Matrix criterion versus the brute-force diagram oracle.
Outcome TheoremValidation() {
  Outcome out;
  const auto start = Clock::now();
  std::size_t pairs = 0;
  for (const auto& c : testing::TheoremSweepCases()) {
    const auto all = EnumerateExtensions(c.p, c.lambda, c.mu);
    std::vector<ExplicitExtension> realized;
    for (const auto& ext : all) realized.push_back(RealizeExtension(ext));
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        ++pairs;
        const bool matrix = AreEquivalent(all[i], all[j], Exhaustive()).has_value();
        const bool diagram = DiagramEquivalent(realized[i], realized[j]);
        out.Require(matrix == diagram,
                    "disagreement at p=" + std::to_string(c.p) + " lambda=" +
                        c.lambda.ToString() + " mu=" + c.mu.ToString() + " A1=" +
                        all[i].a.ToString() + " A2=" + all[j].a.ToString());
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  out.Require(seconds < 120.0, "sweep took longer than 2 minutes");
  if (out.pass) {
    out.detail = std::to_string(pairs) + " ordered pairs agree in " +
                 std::to_string(seconds) + " s";
  }
  return out;
}

// Number of classes of the diagram relation (an equivalence relation, so
// greedy assignment is exact).
std::size_t OracleClassCount(std::int64_t p, const PGroupType& lambda,
                             const PGroupType& mu) {
  std::vector<ExplicitExtension> reps;
  for (const auto& ext : EnumerateExtensions(p, lambda, mu)) {
    const auto e = RealizeExtension(ext);
    const bool seen = std::any_of(reps.begin(), reps.end(), [&](const auto& r) {
      return DiagramEquivalent(r, e);
    });
    if (!seen) reps.push_back(e);
  }
  return reps.size();
}

// 2. Classification counts.
Outcome ClassificationCounts() {
  Outcome out;
  struct Case {
    std::int64_t p;
    PGroupType lambda;
    PGroupType mu;
    std::size_t classes;
  };
  const std::vector<Case> cases{
      {2, PGroupType{{1}}, PGroupType{{1}}, 2},
      {3, PGroupType{{1}}, PGroupType{{1}}, 2},
      {2, PGroupType{{1, 1}}, PGroupType{{1}}, 2},
      {2, PGroupType{{1}}, PGroupType{{1, 1}}, 2},
      {2, PGroupType{{2}}, PGroupType{{1}}, 2},
      {2, PGroupType{{2}}, PGroupType{{2}}, 3},
  };
  for (const Case& c : cases) {
    const auto classes = ClassifyAll(c.p, c.lambda, c.mu);
    const std::string tag = "p=" + std::to_string(c.p) + " lambda=" +
                            c.lambda.ToString() + " mu=" + c.mu.ToString();
    out.Require(classes.classes.size() == c.classes,
                tag + ": " + std::to_string(classes.classes.size()) + " classes");
    out.Require(OracleClassCount(c.p, c.lambda, c.mu) == c.classes,
                tag + ": oracle partition disagrees");
  }
  const auto last = ClassifyAll(2, PGroupType{{2}}, PGroupType{{2}});
  std::vector<PGroupType> types;
  for (const auto& c : last.classes) types.push_back(c.middle_type);
  std::sort(types.begin(), types.end());
  std::vector<PGroupType> expected{PGroupType{{2, 2}}, PGroupType{{3, 1}},
                                   PGroupType{{4}}};
  std::sort(expected.begin(), expected.end());
  out.Require(types == expected, "middle types for (2),(2) are wrong");
  if (out.pass) out.detail = "6 parameter sets match enumeration and oracle";
  return out;
}

// 3. Smith normal form on random matrices.
Outcome SnfSuite() {
  Outcome out;
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> dim(1, 5);
  std::uniform_int_distribution<int> entry(-9, 9);
  const auto start = Clock::now();
  for (int trial = 0; trial < 1000; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
    const SNFResult snf = SmithNormalForm(m);
    const std::string tag = "matrix " + m.ToString();
    out.Require(snf.U * m * snf.V == snf.D, tag + ": U M V != D");
    out.Require(abs(Determinant(snf.U)) == 1, tag + ": U not unimodular");
    out.Require(abs(Determinant(snf.V)) == 1, tag + ": V not unimodular");
    for (std::size_t r = 0; r < snf.D.rows(); ++r)
      for (std::size_t c = 0; c < snf.D.cols(); ++c)
        if (r != c) out.Require(snf.D(r, c) == 0, tag + ": D not diagonal");
    const auto d = snf.Diagonal();
    for (std::size_t k = 0; k + 1 < d.size(); ++k) {
      out.Require(d[k] >= 0, tag + ": negative invariant factor");
      const bool divides = d[k] == 0
                               ? d[k + 1] == 0
                               : mpz_divisible_p(d[k + 1].get_mpz_t(),
                                                 d[k].get_mpz_t()) != 0;
      out.Require(divides, tag + ": divisibility chain broken");
    }
    if (m.is_square()) {
      const Integer det = Determinant(m);
      if (det != 0) {
        Integer product = 1;
        for (const auto& x : d) product *= x;
        out.Require(product == abs(det), tag + ": product != |det|");
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  if (out.pass) out.detail = "1000 matrices in " + std::to_string(seconds) + " s";
  return out;
}

// 4. Automorphism counts.
Outcome AutomorphismCounts() {
  Outcome out;
  struct Case {
    std::int64_t p;
    PGroupType tau;
    std::size_t expected;
  };
  for (const Case& c : {Case{2, PGroupType{{1}}, 1}, Case{2, PGroupType{{2}}, 2},
                        Case{2, PGroupType{{1, 1}}, 6},
                        Case{2, PGroupType{{2, 1}}, 8},
                        Case{3, PGroupType{{1}}, 2},
                        Case{3, PGroupType{{1, 1}}, 48}}) {
    const std::size_t enumerated = EnumerateAuts(c.p, c.tau).size();
    const std::size_t brute = testing::CountAutomorphismsBruteForce(c.p, c.tau);
    const std::string tag =
        "p=" + std::to_string(c.p) + " tau=" + c.tau.ToString();
    out.Require(enumerated == c.expected,
                tag + ": enumerated " + std::to_string(enumerated));
    out.Require(brute == c.expected, tag + ": brute force " + std::to_string(brute));
  }
  if (out.pass) out.detail = "6 types match brute-force endomorphism counts";
  return out;
}

// 5. Lift shifts and orbit constancy of the middle type.
Outcome WellDefinedness() {
  Outcome out;
  std::size_t shifts = 0;
  for (const auto& c : testing::TheoremSweepCases()) {
    const auto all = EnumerateExtensions(c.p, c.lambda, c.mu);
    const std::size_t cells = c.lambda.length() * c.mu.length();
    for (const auto& ext : all) {
      std::vector<int> entries(cells, -2);
      for (;;) {
        IntMatrix shift(c.mu.length(), c.lambda.length());
        for (std::size_t k = 0; k < cells; ++k)
          shift(k / c.lambda.length(), k % c.lambda.length()) = entries[k];
        ++shifts;
        out.Require(Normalize(ChangeLift(ext, shift)) == ext,
                    "lift shift changed " + ext.a.ToString());
        std::size_t k = 0;
        while (k < cells && ++entries[k] > 2) entries[k++] = -2;
        if (k == cells) break;
      }
    }
    std::map<std::uint64_t, PGroupType> orbit_type;
    for (const auto& ext : all) {
      const std::uint64_t rep = ExtensionIndex(CanonicalForm(ext));
      const PGroupType nu = MiddleType(ext);
      const auto [it, inserted] = orbit_type.emplace(rep, nu);
      out.Require(inserted || it->second == nu,
                  "middle type varies on the orbit of " + ext.a.ToString());
    }
  }
  if (out.pass) {
    out.detail = std::to_string(shifts) + " lift shifts; middle type constant on orbits";
  }
  return out;
}

// 6. Order and determinant conservation; split case.
Outcome Conservation() {
  Outcome out;
  std::size_t checked = 0;
  for (std::int64_t p : {2, 3}) {
    for (const auto& lambda : testing::SmallTypes()) {
      for (const auto& mu : testing::SmallTypes()) {
        const int expected = lambda.total() + mu.total();
        for (const auto& ext : EnumerateExtensions(p, lambda, mu)) {
          ++checked;
          const std::string tag = "p=" + std::to_string(p) + " A=" + ext.a.ToString();
          out.Require(MiddleType(ext).total() == expected, tag + ": |nu| wrong");
          out.Require(Determinant(PresentationMatrix(ext)) == Power(p, expected),
                      tag + ": determinant wrong");
        }
        std::vector<int> parts = lambda.parts;
        parts.insert(parts.end(), mu.parts.begin(), mu.parts.end());
        std::sort(parts.begin(), parts.end(), std::greater<>());
        const ExtensionData split{p, lambda, mu,
                                  IntMatrix(mu.length(), lambda.length())};
        out.Require(MiddleType(split) == PGroupType{parts},
                    "split case wrong for " + lambda.ToString() + mu.ToString());
      }
    }
  }
  if (out.pass) out.detail = std::to_string(checked) + " extensions conserve order";
  return out;
}

// 7. Reflexivity (identity witness), symmetry, transitivity.
Outcome EquivalenceLaws() {
  Outcome out;
  for (const auto& c : testing::TheoremSweepCases()) {
    const auto all = EnumerateExtensions(c.p, c.lambda, c.mu);
    const std::size_t n = all.size();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto w = AreEquivalent(all[i], all[j], Exhaustive());
        rel[i][j] = w.has_value();
        if (i == j) {
          out.Require(w && w->f == IdentityAut(c.p, c.lambda) &&
                          w->g == IdentityAut(c.p, c.mu),
                      "reflexive witness is not the identity for " +
                          all[i].a.ToString());
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        out.Require(rel[i][j] == rel[j][i], "asymmetric at " + all[i].a.ToString() +
                                                " / " + all[j].a.ToString());
        for (std::size_t k = 0; k < n; ++k)
          if (rel[i][j] && rel[j][k])
            out.Require(rel[i][k], "intransitive through " + all[j].a.ToString());
      }
  }
  if (out.pass) out.detail = "reflexive, symmetric, transitive on 10 parameter sets";
  return out;
}

}  // namespace
}  // namespace pgext

int main() {
  using pgext::Outcome;
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"1 theorem validation against diagram oracle", pgext::TheoremValidation},
      {"2 classification counts", pgext::ClassificationCounts},
      {"3 smith normal form suite", pgext::SnfSuite},
      {"4 automorphism counts", pgext::AutomorphismCounts},
      {"5 well-definedness", pgext::WellDefinedness},
      {"6 conservation", pgext::Conservation},
      {"7 equivalence-relation laws", pgext::EquivalenceLaws},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %s: %s\n", outcome.pass ? "PASS" : "FAIL",
                c.name, outcome.detail.c_str());
    if (!outcome.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
