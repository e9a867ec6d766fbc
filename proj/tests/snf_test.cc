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

#include "pgext/snf.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "pgext/error.h"
#include "pgext/int_matrix.h"
#include "test_oracles.h"

namespace pgext {
namespace {

IntMatrix RandomMatrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

void ExpectSnfInvariants(const IntMatrix& m, const SNFResult& snf) {
  ASSERT_EQ(snf.U.rows(), m.rows());
  ASSERT_EQ(snf.V.rows(), m.cols());
  EXPECT_EQ(snf.U * m * snf.V, snf.D) << m.ToString();
  EXPECT_EQ(abs(Determinant(snf.U)), 1);
  EXPECT_EQ(abs(Determinant(snf.V)), 1);
  for (std::size_t r = 0; r < snf.D.rows(); ++r)
    for (std::size_t c = 0; c < snf.D.cols(); ++c)
      if (r != c) EXPECT_EQ(snf.D(r, c), 0);
  const auto d = snf.Diagonal();
  for (std::size_t k = 0; k < d.size(); ++k) {
    EXPECT_GE(d[k], 0);
    if (k + 1 < d.size()) {
      if (d[k] == 0) {
        EXPECT_EQ(d[k + 1], 0) << "zeros must trail";
      } else {
        EXPECT_TRUE(mpz_divisible_p(d[k + 1].get_mpz_t(), d[k].get_mpz_t()));
      }
    }
  }
}

TEST(IntMatrixTest, DeterminantMatchesLeibniz) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const IntMatrix m = RandomMatrix(rng, n, n);
    EXPECT_EQ(Determinant(m), testing::LeibnizDeterminant(m)) << m.ToString();
  }
  EXPECT_EQ(Determinant(IntMatrix(0, 0)), 1);
  EXPECT_EQ(Determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
}

TEST(IntMatrixTest, PValuation) {
  EXPECT_EQ(PValuation(8, 2), 3);
  EXPECT_EQ(PValuation(9, 3), 2);
  EXPECT_EQ(PValuation(5, 2), 0);
  EXPECT_EQ(PValuation(-12, 2), 2);
  EXPECT_THROW(PValuation(0, 2), Error);
}

TEST(IntMatrixTest, PValuationOfScaledUnit) {
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (int k = 0; k < 40; ++k) {
      for (long u : {1L, -1L, 11L, 13L, 101L}) {
        if (u % p == 0) continue;
        EXPECT_EQ(PValuation(Power(p, k) * u, p), k);
      }
    }
  }
}

TEST(IntMatrixTest, RaggedRowsRejected) {
  EXPECT_THROW((IntMatrix::FromRows({{1, 2}, {3}})), Error);
}

TEST(SnfTest, Identity) {
  const SNFResult snf = SmithNormalForm(IntMatrix::Identity(2));
  EXPECT_EQ(snf.D, IntMatrix::Identity(2));
  EXPECT_EQ(snf.U, IntMatrix::Identity(2));
  EXPECT_EQ(snf.V, IntMatrix::Identity(2));
}

TEST(SnfTest, SmallExamples) {
  const IntMatrix m{{2, 4}, {6, 8}};
  // Oracle: gcd of entries 2, gcd of 2x2 minors |det| = 8.
  EXPECT_EQ(testing::InvariantFactorsByMinors(m), (std::vector<Integer>{2, 4}));
  SNFResult snf = SmithNormalForm(m);
  EXPECT_EQ(snf.D, (IntMatrix{{2, 0}, {0, 4}}));
  ExpectSnfInvariants(m, snf);

  snf = SmithNormalForm(IntMatrix(2, 2));
  EXPECT_EQ(snf.D, IntMatrix(2, 2));

  const IntMatrix diag{{4, 0}, {0, 2}};
  EXPECT_EQ(testing::InvariantFactorsByMinors(diag),
            (std::vector<Integer>{2, 4}));
  snf = SmithNormalForm(diag);
  EXPECT_EQ(snf.D, (IntMatrix{{2, 0}, {0, 4}}));
  ExpectSnfInvariants(diag, snf);
}

TEST(SnfTest, NonCoprimeDiagonalNeedsMixing) {
  // diag(6, 10) -> diag(2, 30)
  const IntMatrix m{{6, 0}, {0, 10}};
  const SNFResult snf = SmithNormalForm(m);
  EXPECT_EQ(snf.D, (IntMatrix{{2, 0}, {0, 30}}));
  ExpectSnfInvariants(m, snf);
}

TEST(SnfTest, RandomMatricesSatisfyInvariants) {
  std::mt19937 rng(20260101);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    const IntMatrix m = RandomMatrix(rng, dim(rng), dim(rng));
    const SNFResult snf = SmithNormalForm(m);
    ExpectSnfInvariants(m, snf);
    if (m.is_square()) {
      const Integer det = Determinant(m);
      if (det != 0) {
        Integer product = 1;
        for (const auto& d : snf.Diagonal()) product *= d;
        EXPECT_EQ(product, abs(det));
      }
    }
  }
}

TEST(SnfTest, DiagonalMatchesMinorsOracle) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 150; ++trial) {
    const IntMatrix m = RandomMatrix(rng, dim(rng), dim(rng));
    EXPECT_EQ(SmithNormalForm(m).Diagonal(),
              testing::InvariantFactorsByMinors(m))
        << m.ToString();
  }
}

TEST(SnfTest, InvariantUnderPermutations) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix m = RandomMatrix(rng, 3, 4);
    IntMatrix shuffled = m;
    std::vector<std::size_t> rows{0, 1, 2}, cols{0, 1, 2, 3};
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 4; ++c) shuffled(r, c) = m(rows[r], cols[c]);
    EXPECT_EQ(SmithNormalForm(m).D, SmithNormalForm(shuffled).D);
  }
}

TEST(SnfTest, Deterministic) {
  const IntMatrix m{{3, -7, 2}, {5, 1, -4}, {0, 6, 9}};
  const SNFResult a = SmithNormalForm(m);
  const SNFResult b = SmithNormalForm(m);
  EXPECT_EQ(a.U, b.U);
  EXPECT_EQ(a.V, b.V);
}

TEST(SnfTest, LargeEntriesStayExact) {
  const Integer big = Power(2, 100);
  const IntMatrix m{{big, 0}, {1, big}};
  const SNFResult snf = SmithNormalForm(m);
  EXPECT_EQ(snf.D(0, 0), 1);
  EXPECT_EQ(snf.D(1, 1), Power(2, 200));
  ExpectSnfInvariants(m, snf);
}

}  // namespace
}  // namespace pgext
