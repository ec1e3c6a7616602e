// Copyright 2026 The qparadox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qparadox/pauli.hpp"

#include <random>
#include <vector>

#include "dense_oracle.hpp"
#include "gtest/gtest.h"

using namespace qparadox;

namespace {

PauliString P(const char *text) {
    return PauliString::parse(text);
}

}  // namespace

TEST(PauliString, single_qubit_products) {
    ASSERT_EQ(P("X") * P("Y"), P("iZ"));
    ASSERT_EQ(P("Y") * P("X"), P("-iZ"));
    ASSERT_EQ(P("Y") * P("Z"), P("iX"));
    ASSERT_EQ(P("Z") * P("X"), P("iY"));
    ASSERT_EQ(P("X") * P("X"), P("I"));
    ASSERT_EQ(P("iX") * P("iX"), P("-I"));
}

TEST(PauliString, identity_is_neutral) {
    PauliString id = PauliString::identity(5);
    for (const char *s : {"XZIZX", "-YXIXY", "iZZZZZ", "IIIII"}) {
        ASSERT_EQ(id * P(s), P(s));
        ASSERT_EQ(P(s) * id, P(s));
    }
}

TEST(PauliString, five_qubit_generator_product) {
    // Per site: XY = iZ, ZX = iY, II, ZX = iY, XY = iZ, so the phases cancel.
    PauliString product = P("XZIZX") * P("YXIXY");
    ASSERT_EQ(product, P("ZYIYZ"));
    ASSERT_TRUE(oracle::near(oracle::matrix_of(product), oracle::matrix_of(P("XZIZX")) * oracle::matrix_of(P("YXIXY"))));
}

TEST(PauliString, multiply_dimension_mismatch) {
    ASSERT_THROW(P("XX") * P("XXX"), DimensionError);
    ASSERT_THROW((void)P("XX").commutes(P("X")), DimensionError);
}

TEST(PauliString, commutes) {
    ASSERT_FALSE(P("X").commutes(P("Z")));
    ASSERT_TRUE(P("X").commutes(P("X")));
    // sigma_2z sigma_3x and sigma_4x sigma_5z.
    ASSERT_TRUE(P("IZXII").commutes(P("IIIXZ")));
    ASSERT_TRUE(P("XX").commutes(P("ZZ")));
    ASSERT_FALSE(P("XI").commutes(P("ZZ")));
}

TEST(PauliString, cyclic_shift) {
    ASSERT_EQ(P("XZIZX").cyclic_shift(1), P("XXZIZ"));
    ASSERT_EQ(P("-XZIZX").cyclic_shift(1), P("-XXZIZ"));
    ASSERT_EQ(P("XZIZX").cyclic_shift(5), P("XZIZX"));
    ASSERT_EQ(P("XZIZX").cyclic_shift(-1), P("ZIZXX"));
    ASSERT_EQ(P("XYZ").cyclic_shift(2), P("YZX"));

    std::vector<PauliString> orbit;
    for (int k = 0; k < 5; k++) {
        orbit.push_back(P("IXZXI").cyclic_shift(k));
    }
    ASSERT_EQ(orbit, (std::vector<PauliString>{P("IXZXI"), P("IIXZX"), P("XIIXZ"), P("ZXIIX"), P("XZXII")}));
}

TEST(PauliString, parse_and_format) {
    PauliString p = P("XZIZX");
    ASSERT_EQ(p.num_qubits(), 5u);
    ASSERT_EQ(p.phase_exp(), 0);
    ASSERT_EQ(p.letter(0), PauliLetter::X);
    ASSERT_EQ(p.letter(1), PauliLetter::Z);
    ASSERT_EQ(p.letter(2), PauliLetter::I);
    ASSERT_EQ(p.letter(3), PauliLetter::Z);
    ASSERT_EQ(p.letter(4), PauliLetter::X);

    PauliString zz = P("-ZZZZZ");
    ASSERT_EQ(zz.phase_exp(), 2);
    ASSERT_EQ(zz.str(), "-ZZZZZ");

    ASSERT_EQ(P("+XZ").str(), "XZ");
    ASSERT_EQ(P("iXZ").phase_exp(), 1);
    ASSERT_EQ(P("-iXZ").phase_exp(), 3);
    ASSERT_EQ(P("-iXZ").str(), "-iXZ");
    ASSERT_EQ(P("xzuzx"), P("XZIZX"));
    ASSERT_EQ(P("I").str(), "I");

    ASSERT_THROW(P("XQZ"), ParseError);
    ASSERT_THROW(P(""), ParseError);
    ASSERT_THROW(P("-"), ParseError);
    ASSERT_THROW(P("+i"), ParseError);
    ASSERT_THROW(P("X Z"), ParseError);
}

TEST(PauliString, sparse_str) {
    ASSERT_EQ(P("XZXII").sparse_str(), "X1 Z2 X3");
    ASSERT_EQ(P("-IIIII").sparse_str(), "-I");
}

TEST(PauliString, support_and_restrict) {
    ASSERT_EQ(P("IXZXI").support(), (std::vector<std::size_t>{1, 2, 3}));
    std::vector<std::size_t> rest{1, 2, 3, 4};
    ASSERT_EQ(P("XZIZX").restrict_to(rest), P("IZIZX"));
    ASSERT_EQ(P("-XZIZX").restrict_to(rest), P("IZIZX"));
    ASSERT_EQ(P("IIIII").restrict_to(rest), P("IIIII"));
    ASSERT_EQ(P("XZIZX").without_site(0), P("IZIZX"));
    ASSERT_EQ(P("XZIZX").weight(), 4u);
}

TEST(PauliString, hermiticity) {
    ASSERT_TRUE(P("XYZ").is_hermitian());
    ASSERT_TRUE(P("-XYZ").is_hermitian());
    ASSERT_FALSE(P("iXYZ").is_hermitian());
    ASSERT_TRUE(oracle::near(oracle::matrix_of(P("-XYZ")), oracle::matrix_of(P("-XYZ")).adjoint()));
    ASSERT_FALSE(oracle::near(oracle::matrix_of(P("iXYZ")), oracle::matrix_of(P("iXYZ")).adjoint()));
}

TEST(PauliStringProperties, agrees_with_dense_matrices) {
    std::mt19937_64 rng(20260101);
    for (int trial = 0; trial < 1000; trial++) {
        std::size_t n = 1 + trial % 3;
        PauliString a = oracle::random_pauli(rng, n);
        PauliString b = oracle::random_pauli(rng, n);
        oracle::Matrix ma = oracle::matrix_of(a);
        oracle::Matrix mb = oracle::matrix_of(b);
        ASSERT_TRUE(oracle::near(oracle::matrix_of(a * b), ma * mb)) << a << " * " << b;
        ASSERT_EQ(a.commutes(b), oracle::near(ma * mb, mb * ma)) << a << " vs " << b;
    }
}

TEST(PauliStringProperties, group_laws) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; trial++) {
        std::size_t n = 1 + trial % 7;
        PauliString a = oracle::random_pauli(rng, n);
        PauliString b = oracle::random_pauli(rng, n);
        PauliString c = oracle::random_pauli(rng, n);
        ASSERT_EQ((a * b) * c, a * (b * c));

        PauliString sq = a * a;
        ASSERT_TRUE(sq.is_identity_up_to_phase());
        ASSERT_TRUE(sq.phase_exp() == 0 || sq.phase_exp() == 2);
        if (a.is_hermitian()) {
            ASSERT_TRUE(sq.is_identity());
        }

        ASSERT_EQ(a * b, a.commutes(b) ? b * a : -(b * a));

        for (int k = 0; k < static_cast<int>(n); k++) {
            ASSERT_EQ((a * b).cyclic_shift(k), a.cyclic_shift(k) * b.cyclic_shift(k));
        }

        ASSERT_EQ(PauliString::parse(a.str()), a);
        ASSERT_EQ(PauliString::parse(a.str()).str(), a.str());
    }
}
