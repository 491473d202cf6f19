// Copyright 2026 The qra Authors
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

#include "qra/tensor.h"

#include <cmath>

#include "gtest/gtest.h"
#include "oracles.h"
#include "qra/errors.h"

using namespace qra;

namespace {

ComplexOperator pauli_x() {
    return ComplexOperator::permutation({1, 0});
}

ComplexVector basis_product(const std::vector<size_t> &dims, const std::vector<size_t> &digits) {
    ComplexVector v = ComplexVector::basis(dims[0], digits[0]);
    for (size_t k = 1; k < dims.size(); k++) {
        v = kron(v, ComplexVector::basis(dims[k], digits[k]));
    }
    return v;
}

}  // namespace

TEST(complex_vector, construction) {
    EXPECT_THROW(ComplexVector(0), DimensionError);
    EXPECT_THROW(ComplexVector(std::vector<cplx>{}), DimensionError);
    ComplexVector v(3);
    EXPECT_EQ(v.dim(), 3);
    EXPECT_EQ(v.norm_squared(), 0);
    auto b = ComplexVector::basis(4, 2);
    EXPECT_EQ(b[2], cplx(1));
    EXPECT_TRUE(b.is_normalized());
    EXPECT_THROW(ComplexVector::basis(2, 2), DimensionError);
}

TEST(complex_vector, inner_is_conjugate_linear_on_the_left) {
    ComplexVector a(std::vector<cplx>{{0, 1}, 0});
    ComplexVector b(std::vector<cplx>{1, 0});
    EXPECT_EQ(a.inner(b), cplx(0, -1));
    EXPECT_EQ(b.inner(a), cplx(0, 1));
}

TEST(kron, identity_times_identity) {
    auto i4 = kron(ComplexOperator::identity(2), ComplexOperator::identity(2));
    EXPECT_EQ(i4, ComplexOperator::identity(4));
    EXPECT_TRUE(i4.is_permutation());
}

TEST(kron, bit_flip_on_first_factor) {
    auto xi = kron(pauli_x(), ComplexOperator::identity(2));
    auto out = xi * ComplexVector::basis(4, 0);
    EXPECT_EQ(out, ComplexVector::basis(4, 2));
}

TEST(kron, acts_factorwise) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; trial++) {
        auto a = random_unitary(2, rng);
        auto b = random_unitary(2, rng);
        auto u = random_state(2, rng);
        auto v = random_state(2, rng);
        auto lhs = kron(a, b) * kron(u, v);
        auto rhs = kron(a * u, b * v);
        EXPECT_LE(max_abs_diff(lhs, rhs), 1e-12);
    }
}

TEST(kron, dims_multiply) {
    ComplexOperator a(2, 3);
    ComplexOperator b(5, 7);
    auto k = kron(a, b);
    EXPECT_EQ(k.rows(), 10);
    EXPECT_EQ(k.cols(), 21);
}

TEST(complex_operator, permutation_rejects_non_bijection) {
    EXPECT_THROW(ComplexOperator::permutation({0, 0}), InvalidValueError);
    EXPECT_THROW(ComplexOperator::permutation({0, 2}), InvalidValueError);
}

TEST(complex_operator, permutation_matches_dense_product) {
    auto p = ComplexOperator::permutation({2, 0, 1});
    ComplexOperator dense(3, 3, std::vector<cplx>(p.entries().begin(), p.entries().end()));
    EXPECT_FALSE(dense.is_permutation());
    std::mt19937_64 rng(3);
    auto v = random_state(3, rng);
    EXPECT_EQ(p * v, dense * v);
    auto m = random_unitary(3, rng);
    EXPECT_LE(max_abs_diff(p * m, dense * m), 0);
    EXPECT_LE(max_abs_diff(m * p, m * dense), 0);
    EXPECT_EQ(p * ComplexVector::basis(3, 0), ComplexVector::basis(3, 2));
}

TEST(complex_operator, at_drops_permutation_map) {
    auto p = ComplexOperator::permutation({1, 0});
    p.at(0, 0) = 0.5;
    EXPECT_FALSE(p.is_permutation());
}

TEST(is_unitary, examples) {
    EXPECT_TRUE(is_unitary(ComplexOperator::identity(4), 1e-12));
    std::vector<cplx> d{1, 2};
    EXPECT_FALSE(is_unitary(ComplexOperator::diagonal(d), 1e-12));
    EXPECT_THROW(is_unitary(ComplexOperator(2, 3)), DimensionError);
}

TEST(is_unitary, permutations_are_exactly_unitary) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; trial++) {
        std::vector<size_t> images(8);
        for (size_t k = 0; k < 8; k++) {
            images[k] = k;
        }
        std::shuffle(images.begin(), images.end(), rng);
        auto p = ComplexOperator::permutation(images);
        EXPECT_TRUE(is_unitary(p, 0));
        ComplexOperator dense(8, 8, std::vector<cplx>(p.entries().begin(), p.entries().end()));
        EXPECT_TRUE(is_unitary(dense, 0));
    }
}

TEST(is_unitary, random_unitaries) {
    std::mt19937_64 rng(7);
    for (size_t dim : {1, 2, 3, 5, 12}) {
        EXPECT_TRUE(is_unitary(random_unitary(dim, rng), 1e-12)) << dim;
    }
}

TEST(projector_onto, examples) {
    std::vector<size_t> zero{0};
    std::vector<cplx> d{1, 0};
    EXPECT_EQ(projector_onto(zero, 2), ComplexOperator::diagonal(d));
    auto empty = projector_onto({}, 3);
    EXPECT_EQ(empty, ComplexOperator(3, 3));
    std::vector<size_t> idx{0, 2};
    auto p = projector_onto(idx, 4);
    EXPECT_EQ(p * p, p);
    EXPECT_TRUE(is_projector(p));
    std::vector<size_t> bad{4};
    EXPECT_THROW(projector_onto(bad, 4), DimensionError);
}

TEST(slot_layout, strides_and_digits) {
    SlotLayout layout({2, 3, 4});
    EXPECT_EQ(layout.total_dim(), 24);
    EXPECT_EQ(layout.stride(0), 12);
    EXPECT_EQ(layout.stride(1), 4);
    EXPECT_EQ(layout.stride(2), 1);
    EXPECT_EQ(layout.digit(1 * 12 + 2 * 4 + 3, 1), 2);
    auto grown = layout.with_slot_inserted(1, 5);
    EXPECT_EQ(std::vector<size_t>(grown.dims().begin(), grown.dims().end()), (std::vector<size_t>{2, 5, 3, 4}));
    EXPECT_THROW(SlotLayout({2, 0}), DimensionError);
}

TEST(apply_local, bit_flip_on_middle_slot) {
    SlotLayout layout({2, 2, 2});
    auto state = ComplexVector::basis(8, 0);
    std::vector<size_t> slots{1};
    auto out = apply_local(pauli_x(), state, layout, slots);
    EXPECT_EQ(out, basis_product({2, 2, 2}, {0, 1, 0}));
}

TEST(apply_local, identity_leaves_state_unchanged) {
    std::mt19937_64 rng(13);
    SlotLayout layout({3, 2, 2});
    auto state = random_state(12, rng);
    std::vector<size_t> slots{2, 0};
    auto out = apply_local(ComplexOperator::identity(6), state, layout, slots);
    EXPECT_EQ(out, state);
    ComplexOperator dense_identity(6, 6);
    for (size_t k = 0; k < 6; k++) {
        dense_identity.at(k, k) = 1;
    }
    EXPECT_EQ(apply_local(dense_identity, state, layout, slots), state);
}

TEST(apply_local, matches_global_matrix_on_slots_0_and_2) {
    std::mt19937_64 rng(17);
    std::vector<size_t> dims{2, 3, 2};
    SlotLayout layout(dims);
    for (int trial = 0; trial < 10; trial++) {
        auto u = random_unitary(4, rng);
        auto state = random_state(12, rng);
        std::vector<size_t> slots{0, 2};
        auto expected = oracle::global_operator(u, dims, slots) * state;
        EXPECT_LE(max_abs_diff(apply_local(u, state, layout, slots), expected), 1e-12);
        EXPECT_LE(max_abs_diff(apply_local_serial(u, state, layout, slots), expected), 1e-12);
    }
}

TEST(apply_local, matches_global_matrix_on_random_layouts) {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 60; trial++) {
        size_t num_slots = 1 + rng() % 4;
        std::vector<size_t> dims;
        size_t total = 1;
        for (size_t k = 0; k < num_slots; k++) {
            dims.push_back(1 + rng() % 4);
            total *= dims.back();
        }
        if (total > 256) {
            continue;
        }
        std::vector<size_t> order(num_slots);
        for (size_t k = 0; k < num_slots; k++) {
            order[k] = k;
        }
        std::shuffle(order.begin(), order.end(), rng);
        order.resize(1 + rng() % num_slots);
        size_t udim = 1;
        for (size_t s : order) {
            udim *= dims[s];
        }
        auto u = random_unitary(udim, rng);
        auto state = random_state(total, rng);
        auto expected = oracle::global_operator(u, dims, order) * state;
        auto got = apply_local(u, state, SlotLayout(dims), order);
        EXPECT_LE(max_abs_diff(got, expected), 1e-12);
        EXPECT_NEAR(got.norm_squared(), state.norm_squared(), 1e-12);
    }
}

TEST(apply_local, permutation_fast_path_matches_global_matrix) {
    std::mt19937_64 rng(23);
    std::vector<size_t> dims{2, 3, 2, 2};
    std::vector<size_t> images{3, 5, 0, 1, 4, 2};
    auto p = ComplexOperator::permutation(images);
    auto state = random_state(24, rng);
    std::vector<size_t> slots{2, 1};
    auto expected = oracle::global_operator(p, dims, slots) * state;
    EXPECT_LE(max_abs_diff(apply_local(p, state, SlotLayout(dims), slots), expected), 1e-15);
}

TEST(apply_local, disjoint_slots_commute) {
    std::mt19937_64 rng(29);
    SlotLayout layout({2, 3, 2});
    for (int trial = 0; trial < 10; trial++) {
        auto u = random_unitary(2, rng);
        auto w = random_unitary(6, rng);
        auto state = random_state(12, rng);
        std::vector<size_t> a{0};
        std::vector<size_t> b{2, 1};
        auto ab = apply_local(w, apply_local(u, state, layout, a), layout, b);
        auto ba = apply_local(u, apply_local(w, state, layout, b), layout, a);
        EXPECT_LE(max_abs_diff(ab, ba), 1e-12);
    }
}

TEST(apply_local, errors) {
    SlotLayout layout({2, 2});
    auto state = ComplexVector::basis(4, 0);
    std::vector<size_t> out_of_range{2};
    std::vector<size_t> repeated{0, 0};
    std::vector<size_t> one{0};
    EXPECT_THROW(apply_local(pauli_x(), state, layout, out_of_range), DimensionError);
    EXPECT_THROW(apply_local(ComplexOperator::identity(4), state, layout, repeated), DimensionError);
    EXPECT_THROW(apply_local(ComplexOperator::identity(4), state, layout, one), DimensionError);
    EXPECT_THROW(apply_local(pauli_x(), ComplexVector::basis(3, 0), layout, one), DimensionError);
}

TEST(density_operator, validity) {
    std::mt19937_64 rng(31);
    auto rho = random_density(4, rng);
    EXPECT_TRUE(rho.is_valid());
    EXPECT_NEAR(rho.trace().real(), 1, 1e-12);
    EXPECT_THROW(DensityOperator::checked(ComplexOperator::identity(2)), InvalidValueError);
    std::vector<cplx> neg{1.5, -0.5};
    auto bad = DensityOperator(ComplexOperator::diagonal(neg));
    auto v = bad.violations();
    ASSERT_EQ(v.size(), 1);
    EXPECT_NE(v[0].find("eigenvalue"), std::string::npos);
    ComplexOperator non_hermitian(2, 2, {0.5, 1, 0, 0.5});
    EXPECT_FALSE(DensityOperator(non_hermitian).is_valid());
}

TEST(density_operator, purity) {
    std::mt19937_64 rng(37);
    auto pure = DensityOperator::pure(random_state(3, rng));
    EXPECT_NEAR(pure.purity(), 1, 1e-12);
    std::vector<cplx> mixed{0.5, 0.5};
    EXPECT_NEAR(DensityOperator(ComplexOperator::diagonal(mixed)).purity(), 0.5, 1e-15);
}

TEST(partial_trace, product_state) {
    std::mt19937_64 rng(41);
    auto u = random_state(2, rng);
    auto v = random_state(3, rng);
    auto rho = DensityOperator::pure(kron(u, v));
    SlotLayout layout({2, 3});
    std::vector<size_t> keep{0};
    auto reduced = partial_trace(rho, layout, keep);
    EXPECT_LE(max_abs_diff(reduced.matrix(), oracle::outer(u, u)), 1e-12);
    EXPECT_NEAR(reduced.purity(), 1, 1e-10);
    auto from_pure = reduced_state(kron(u, v), layout, keep);
    EXPECT_LE(max_abs_diff(from_pure.matrix(), oracle::outer(u, u)), 1e-12);
}

TEST(partial_trace, bell_state) {
    double h = 1 / std::sqrt(2.0);
    ComplexVector bell(std::vector<cplx>{h, 0, 0, h});
    SlotLayout layout({2, 2});
    std::vector<size_t> keep{0};
    auto reduced = partial_trace(DensityOperator::pure(bell), layout, keep);
    std::vector<cplx> half{0.5, 0.5};
    EXPECT_LE(max_abs_diff(reduced.matrix(), ComplexOperator::diagonal(half)), 1e-15);
    EXPECT_NEAR(reduced.purity(), 0.5, 1e-15);
}

TEST(partial_trace, matches_summation_and_preserves_trace) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 50; trial++) {
        std::vector<size_t> dims{1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 3};
        size_t total = dims[0] * dims[1] * dims[2];
        auto rho = random_density(total, rng);
        std::vector<size_t> keep;
        for (size_t k = 0; k < 3; k++) {
            if (rng() % 2) {
                keep.push_back(k);
            }
        }
        auto got = partial_trace(rho, SlotLayout(dims), keep);
        auto expected = oracle::partial_trace(rho.matrix(), dims, keep);
        EXPECT_LE(max_abs_diff(got.matrix(), expected), 1e-12);
        EXPECT_NEAR(got.trace().real(), rho.trace().real(), 1e-12);
        EXPECT_NEAR(got.trace().imag(), 0, 1e-12);
    }
}

TEST(partial_trace, reduced_state_matches_partial_trace) {
    std::mt19937_64 rng(47);
    std::vector<size_t> dims{2, 3, 2, 2};
    SlotLayout layout(dims);
    auto psi = random_state(24, rng);
    std::vector<size_t> keep{1, 3};
    auto a = reduced_state(psi, layout, keep);
    auto b = partial_trace(DensityOperator::pure(psi), layout, keep);
    EXPECT_LE(max_abs_diff(a.matrix(), b.matrix()), 1e-12);
}

TEST(partial_trace, errors) {
    auto rho = DensityOperator::pure(ComplexVector::basis(4, 0));
    std::vector<size_t> keep{0};
    EXPECT_THROW(partial_trace(rho, SlotLayout({2, 3}), keep), DimensionError);
    std::vector<size_t> repeated{1, 1};
    EXPECT_THROW(partial_trace(rho, SlotLayout({2, 2}), repeated), DimensionError);
}

TEST(partial_trace, keep_order_does_not_matter) {
    std::mt19937_64 rng(53);
    auto rho = random_density(12, rng);
    SlotLayout layout({2, 3, 2});
    std::vector<size_t> sorted{0, 2};
    std::vector<size_t> unsorted{2, 0};
    EXPECT_EQ(partial_trace(rho, layout, unsorted).matrix(), partial_trace(rho, layout, sorted).matrix());
}
