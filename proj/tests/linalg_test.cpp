#include "discocat/error.hpp"
#include "discocat/linalg.hpp"

#include "doctest.h"

#include <numeric>
#include <random>

using namespace discocat;

namespace {

VectorSpace space(std::size_t d, const char* label = "V") { return VectorSpace(label, d); }

Tensor random_tensor(std::mt19937_64& rng, std::vector<VectorSpace> spaces) {
    Tensor t(std::move(spaces));
    std::uniform_int_distribution<int> dist(-9, 9);
    for (auto& x : t.data())
        x = dist(rng);
    return t;
}

} // namespace

TEST_CASE("vector spaces validate their arguments") {
    CHECK_THROWS_AS(VectorSpace("V", 0), DimensionError);
    CHECK_THROWS_AS(VectorSpace("V", 2, std::vector<std::string>{"x"}), DimensionError);
    CHECK_THROWS_AS(VectorSpace("V", 2, std::vector<std::string>{"x", "x"}), DimensionError);
    CHECK_NOTHROW(VectorSpace("V", 2, std::vector<std::string>{"x", "y"}));
}

TEST_CASE("tensors check their data length") {
    CHECK_THROWS_AS(Tensor({space(2), space(3)}, std::vector<double>(5)), DimensionError);
    CHECK(Tensor({space(2), space(3)}).size() == 6);
    CHECK(Tensor::scalar(4.0).order() == 0);
    CHECK(Tensor::scalar(4.0).data()[0] == 4.0);
}

TEST_CASE("storage is row-major") {
    std::vector<double> data(6);
    std::iota(data.begin(), data.end(), 0.0);
    const Tensor t({space(2), space(3)}, data);
    CHECK(t.strides() == std::vector<std::size_t>{3, 1});
    CHECK(t.at({0, 2}) == 2.0);
    CHECK(t.at({1, 0}) == 3.0);
    CHECK(t.at({1, 2}) == 5.0);
}

TEST_CASE("eta is the identity matrix written as a state") {
    CHECK(make_eta(space(1)).data()[0] == 1.0);
    CHECK(make_eta(space(2)) == Tensor({space(2), space(2)}, {1, 0, 0, 1}));
    CHECK(make_eta(space(3)) == Tensor({space(3), space(3)}, {1, 0, 0, 0, 1, 0, 0, 0, 1}));
}

TEST_CASE("epsilon is the trace") {
    const auto v = space(3);
    CHECK(apply_epsilon(make_eta(v)) == 3.0);
    CHECK(apply_epsilon(tensor_product(basis_vector(v, 0), basis_vector(v, 1))) == 0.0);
    CHECK(apply_epsilon(tensor_product(basis_vector(v, 2), basis_vector(v, 2))) == 1.0);
    CHECK_THROWS_AS(apply_epsilon(basis_vector(v, 0)), DimensionError);
    CHECK_THROWS_AS(apply_epsilon(Tensor({space(2), space(3)})), DimensionError);
}

TEST_CASE("trace of the unit is the dimension") {
    for (std::size_t d = 1; d <= 64; ++d)
        CHECK(apply_epsilon(make_eta(space(d))) == static_cast<double>(d));
}

TEST_CASE("tensor product") {
    const auto n = space(3, "N");
    const Tensor a({n}, {21, 9, 0});
    const Tensor b({n}, {43, 19, 0});
    const auto ab = tensor_product(a, b);
    CHECK(ab.dims() == std::vector<std::size_t>{3, 3});
    CHECK(ab.at({0, 0}) == 903.0);
    CHECK(ab.at({1, 1}) == 171.0);
    CHECK(ab.at({0, 1}) == 399.0);
    CHECK(tensor_product(a, Tensor::scalar(1.0)) == a);
    CHECK(tensor_product(Tensor::scalar(1.0), a) == a);
    CHECK(tensor_product(Tensor({space(2)}), Tensor({space(3)})).dims() == std::vector<std::size_t>{2, 3});
}

TEST_CASE("contraction of a transitive sentence") {
    const auto n = space(3, "N");
    const auto s = space(1, "S");
    const Tensor subj({n}, {21, 9, 0});
    const Tensor obj({n}, {43, 19, 0});
    Tensor verb({n, s, n});
    for (std::size_t i = 0; i < 3; ++i)
        verb.at(std::vector<std::size_t>{i, 0, i}) = 1.0;
    const auto state = tensor_product(tensor_product(subj, verb), obj);
    const auto out = contract(state, ContractionPlan(state.spaces(), {{0, 1}, {3, 4}}));
    REQUIRE(out.dims() == std::vector<std::size_t>{1});
    CHECK(out.data()[0] == 1074.0);
}

TEST_CASE("contraction bookkeeping") {
    std::mt19937_64 rng(1);
    const auto t = random_tensor(rng, {space(2), space(3), space(2)});
    CHECK(contract(t, ContractionPlan(t.spaces(), {})) == t);

    const auto e = make_eta(space(5));
    const auto tr = contract(e, ContractionPlan(e.spaces(), {{0, 1}}));
    CHECK(tr.order() == 0);
    CHECK(tr.data()[0] == 5.0);

    // remaining indices keep their order: contract {0,2} of a 2x3x2 tensor
    const auto r = contract(t, ContractionPlan(t.spaces(), {{0, 2}}));
    REQUIRE(r.dims() == std::vector<std::size_t>{3});
    for (std::size_t j = 0; j < 3; ++j)
        CHECK(r.at({j}) == t.at({0, j, 0}) + t.at({1, j, 1}));
}

TEST_CASE("contraction plans reject bad pairs") {
    const std::vector<VectorSpace> sp{space(2), space(3), space(2)};
    CHECK_THROWS_AS(ContractionPlan(sp, {{0, 1}}), DimensionError);
    CHECK_THROWS_AS(ContractionPlan(sp, {{0, 3}}), DimensionError);
    CHECK_THROWS_AS(ContractionPlan(sp, {{0, 2}, {2, 0}}), DimensionError);
    CHECK_THROWS_AS(ContractionPlan(sp, {{0, 0}}), DimensionError);
    CHECK(ContractionPlan(sp, {{0, 2}}).output_indices() == std::vector<std::size_t>{1});
}

TEST_CASE("yanking holds exactly for dimensions 1 to 16") {
    for (std::size_t d = 1; d <= 16; ++d) {
        CAPTURE(d);
        CHECK(yanking_check(d, 0.0));
        const auto snakes = snake_composites(d);
        CHECK(snakes.rightward == LinearMap::identity(space(d)));
        CHECK(snakes.leftward == LinearMap::identity(space(d)));
    }
}

TEST_CASE("one-sided yanking on random states") {
    std::mt19937_64 rng(2);
    for (std::size_t d = 1; d <= 8; ++d) {
        const auto v = random_tensor(rng, {space(d)});
        const auto e = make_eta(space(d));
        const auto right = tensor_product(v, e);
        const auto left = tensor_product(e, v);
        CHECK(contract(right, ContractionPlan(right.spaces(), {{0, 1}})) == v);
        CHECK(contract(left, ContractionPlan(left.spaces(), {{1, 2}})) == v);
    }
}

TEST_CASE("process-state round trips") {
    std::mt19937_64 rng(3);
    for (std::size_t d = 1; d <= 6; ++d)
        for (std::size_t w = 1; w <= 6; ++w) {
            const auto t = random_tensor(rng, {space(d, "V"), space(w, "W")});
            const auto f = state_to_process(t);
            CHECK(f.cols() == d);
            CHECK(f.rows() == w);
            CHECK(process_to_state(f) == t);
            CHECK(state_to_process(process_to_state(f)) == f);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < w; ++j)
                    CHECK(f(j, i) == t.at({i, j}));
        }
    CHECK(state_to_process(make_eta(space(3))) == LinearMap::identity(space(3)));
    CHECK_THROWS_AS(state_to_process(Tensor({space(2)})), DimensionError);
}

TEST_CASE("a state applied as a process matches contraction") {
    std::mt19937_64 rng(4);
    const auto t = random_tensor(rng, {space(3, "V"), space(2, "W")});
    const auto v = random_tensor(rng, {space(3, "V")});
    const auto both = tensor_product(v, t);
    CHECK(state_to_process(t).apply(v) == contract(both, ContractionPlan(both.spaces(), {{0, 1}})));
}

TEST_CASE("approx_equal") {
    const Tensor a({space(2)}, {1.0, 2.0});
    const Tensor b({space(2)}, {1.0, 2.0 + 1e-12});
    CHECK(approx_equal(a, b, 1e-9));
    CHECK_FALSE(approx_equal(a, b, 0.0));
    CHECK_FALSE(approx_equal(a, Tensor({space(3)}), 1e9));
}
