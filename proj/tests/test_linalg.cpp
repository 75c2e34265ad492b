// Copyright 2026 The choibasis Authors
//
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

#include <catch_amalgamated.hpp>

#include "choibasis/linalg.hpp"
#include "test_support.hpp"

using namespace choibasis;
using namespace choibasis::testing;
using Catch::Matchers::WithinAbs;

TEST_CASE("hs_inner examples", "[linalg]") {
  const Mat i2 = Mat::Identity(2, 2);
  CHECK(hs_inner(i2, i2) == C(2.0, 0.0));

  Mat z = Mat::Zero(2, 2);
  z(0, 0) = 1.0 / std::sqrt(2.0);
  z(1, 1) = -1.0 / std::sqrt(2.0);
  const C v = hs_inner(z, z);
  CHECK_THAT(v.real(), WithinAbs(1.0, 1e-15));
  CHECK(v.imag() == 0.0);

  CHECK_THROWS_AS(hs_inner(i2, Mat::Identity(3, 3)), DimensionError);
  CHECK_THROWS_AS(hs_inner(Mat::Zero(2, 3), Mat::Zero(3, 2)), DimensionError);
}

TEST_CASE("hs_inner properties on random matrices", "[linalg][property]") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = rng.integer(1, 5);
    const Mat a = rng.matrix(d, d);
    const Mat b = rng.matrix(d, d);
    const C ab = hs_inner(a, b);
    CHECK(std::abs(ab - std::conj(hs_inner(b, a))) <= 1e-12);
    CHECK(std::abs(ab - hs_inner_reference(a, b)) <= 1e-12);

    const C aa = hs_inner(a, a);
    CHECK(std::abs(aa.imag()) <= 1e-12);
    CHECK_THAT(aa.real(), WithinAbs(a.squaredNorm(), 1e-10));

    const C alpha(rng.normal(), rng.normal());
    const Mat c = rng.matrix(d, d);
    CHECK(std::abs(hs_inner(a, alpha * b + c) - (alpha * ab + hs_inner(a, c))) <=
          1e-10);
  }
}

TEST_CASE("kron examples", "[linalg]") {
  CHECK(kron(Mat::Identity(2, 2), Mat::Identity(2, 2)) == Mat::Identity(4, 4));

  Mat z = Mat::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  Mat expected = Mat::Zero(4, 4);
  expected.diagonal() << 1.0, 1.0, -1.0, -1.0;
  CHECK(kron(z, Mat::Identity(2, 2)) == expected);

  const Mat k = kron(unit(2, 0, 1), unit(2, 0, 1));
  Mat single = Mat::Zero(4, 4);
  single(0, 3) = 1.0;
  CHECK(k == single);
}

TEST_CASE("kron matches the index formula on rectangular operands",
          "[linalg][property]") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat a = rng.matrix(rng.integer(1, 3), rng.integer(1, 3));
    const Mat b = rng.matrix(rng.integer(1, 4), rng.integer(1, 4));
    CHECK(max_abs_diff(kron(a, b), kron_reference(a, b)) == 0.0);
  }
}

TEST_CASE("partial_trace_first examples", "[linalg]") {
  CHECK(partial_trace_first(Mat::Identity(4, 4), 2, 2) ==
        Mat(2.0 * Mat::Identity(2, 2)));
  CHECK(max_abs_diff(partial_trace_first(hadamard_choi_printed(), 2, 2),
                     Mat::Identity(2, 2)) <= 1e-15);
  CHECK_THROWS_AS(partial_trace_first(Mat::Identity(4, 4), 3, 2),
                  DimensionError);
  CHECK_THROWS_AS(partial_trace_first(Mat::Zero(6, 4), 3, 2), DimensionError);
}

TEST_CASE("partial traces of a product state", "[linalg][property]") {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int da = rng.integer(1, 4);
    const int db = rng.integer(1, 4);
    const Mat a = rng.matrix(da, da);
    const Mat b = rng.matrix(db, db);
    const Mat ab = kron_reference(a, b);
    CHECK(max_abs_diff(partial_trace_first(ab, da, db), a.trace() * b) <= 1e-12);
    CHECK(max_abs_diff(partial_trace_second(ab, da, db), b.trace() * a) <=
          1e-12);

    const Mat m = rng.matrix(da * db, da * db);
    CHECK(std::abs(partial_trace_first(m, da, db).trace() - m.trace()) <= 1e-12);
  }
}

TEST_CASE("trace_norm examples", "[linalg]") {
  CHECK(trace_norm(Mat::Zero(4, 4)) == 0.0);
  Mat d = Mat::Zero(3, 3);
  d.diagonal() << 1.0, -2.0, 3.0;
  CHECK_THAT(trace_norm(d), WithinAbs(6.0, 1e-12));
  CHECK_THAT(trace_norm(hadamard_choi_printed()), WithinAbs(2.0, 1e-12));
  CHECK_THROWS_AS(trace_norm(Mat::Zero(2, 3)), DimensionError);
}

TEST_CASE("trace_norm agrees with the eigenvalue route and is a norm",
          "[linalg][property]") {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = rng.integer(1, 6);
    const Mat a = rng.matrix(d, d);
    const Mat b = rng.matrix(d, d);
    const Mat c = rng.matrix(d, d);
    CHECK_THAT(trace_norm(a), WithinAbs(trace_norm_reference(a), 1e-10));
    CHECK(trace_norm(a) >= 0.0);
    CHECK(trace_norm(a + c) <= trace_norm(a) + trace_norm(c) + 1e-10);
    CHECK(trace_norm(a - b) <= trace_norm(a - c) + trace_norm(c - b) + 1e-10);
  }
}

TEST_CASE("res examples", "[linalg]") {
  ComplexVector expected(4);
  expected << 1.0, 0.0, 0.0, 1.0;
  CHECK(res(Mat::Identity(2, 2)) == expected);

  const double s = 1.0 / std::sqrt(2.0);
  ComplexVector rh(4);
  rh << s, s, s, -s;
  CHECK((res(hadamard()) - rh).cwiseAbs().maxCoeff() == 0.0);

  const ComplexVector v = res(hadamard());
  CHECK(max_abs_diff(v * v.adjoint(), hadamard_choi_printed()) <= 1e-15);

  Mat rect(2, 3);
  rect << 1, 2, 3, 4, 5, 6;
  ComplexVector row_major(6);
  row_major << 1, 2, 3, 4, 5, 6;
  CHECK(res(rect) == row_major);
  CHECK(unres(res(rect), 2, 3) == rect);
  CHECK_THROWS_AS(unres(row_major, 4, 2), DimensionError);
}

TEST_CASE("res is linear", "[linalg][property]") {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat a = rng.matrix(3, 2);
    const Mat b = rng.matrix(3, 2);
    const C alpha(rng.normal(), rng.normal());
    CHECK((res(alpha * a + b) - (alpha * res(a) + res(b))).cwiseAbs().maxCoeff() <=
          1e-12);
  }
}

TEST_CASE("min_eigenvalue_hermitian examples", "[linalg]") {
  CHECK_THAT(min_eigenvalue_hermitian(Mat::Identity(3, 3)), WithinAbs(1.0, 1e-15));
  Mat d = Mat::Zero(2, 2);
  d.diagonal() << 0.5, -0.5;
  CHECK_THAT(min_eigenvalue_hermitian(d), WithinAbs(-0.5, 1e-15));
  CHECK_THAT(min_eigenvalue_hermitian(hadamard_choi_printed()),
             WithinAbs(0.0, 1e-12));
  CHECK_THROWS_AS(min_eigenvalue_hermitian(Mat::Zero(2, 3)), DimensionError);
}

TEST_CASE("min_eigenvalue_hermitian uses the Hermitian part",
          "[linalg]") {
  // [[0, 2], [0, 0]] has Hermitian part [[0, 1], [1, 0]] with spectrum +-1.
  Mat m = Mat::Zero(2, 2);
  m(0, 1) = 2.0;
  CHECK_THAT(min_eigenvalue_hermitian(m), WithinAbs(-1.0, 1e-14));
}

TEST_CASE("hermiticity and finiteness helpers", "[linalg]") {
  Mat m = Mat::Identity(2, 2);
  CHECK(is_hermitian(m));
  m(0, 1) = 1e-11;
  CHECK(is_hermitian(m));
  m(0, 1) = 1e-9;
  CHECK_FALSE(is_hermitian(m));
  CHECK_FALSE(is_hermitian(Mat::Zero(2, 3)));
  CHECK(all_finite(m));
  m(1, 1) = C(std::nan(""), 0.0);
  CHECK_FALSE(all_finite(m));
}
