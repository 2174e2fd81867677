#include <doctest.h>

#include "support.hpp"

using namespace arq;
using namespace arqtest;

TEST_SUITE("ar_quiver") {

TEST_CASE("A3-linear") {
    const ARQuiver a = build(a3_linear());
    CHECK(a.m == std::vector<int>{0, 1, 2});
    CHECK(a.rho == std::vector<int>{3, 2, 1});
    CHECK(a.vertices.size() == 6);
    CHECK(dim_vector(a, {1, 2}) == DimVector{1, 1, 0});
    CHECK(dim_vector(a, {0, 3}) == DimVector{0, 0, 1});
    CHECK(distance(a, {0, 3}, {0, 1}) == 2);
    CHECK(distance(a, {1, 2}, {1, 2}) == 0);
    CHECK_FALSE(distance(a, {0, 1}, {0, 3}).has_value());
    CHECK_THROWS_AS(dim_vector(a, {1, 1}), Error);
}

TEST_CASE("A1") {
    const ARQuiver a = build(a1());
    CHECK(a.vertices == std::vector<ZVertex>{{0, 1}});
    CHECK(a.m == std::vector<int>{0});
    CHECK(a.rho == std::vector<int>{1});
}

TEST_CASE("G2 dimension vectors are the positive roots") {
    const ARQuiver a = build(g2());
    CHECK(a.m == std::vector<int>{2, 2});
    CHECK(a.rho == std::vector<int>{1, 2});
    std::set<DimVector> dims;
    for (const auto& [v, d] : a.dims) dims.insert(d);
    CHECK(dims == std::set<DimVector>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}});
    CHECK(dim_vector(a, {1, 1}) == DimVector{2, 1});
}

TEST_CASE("E6 and F4 worked examples") {
    const RhoM e6 = closed_form_rho_m(e6_example());
    CHECK(e6.rho == std::vector<int>{6, 5, 3, 4, 2, 1});
    CHECK(e6.m == std::vector<int>{4, 4, 5, 5, 6, 6});
    const ARQuiver ae6 = build(e6_example());
    CHECK(ae6.rho == e6.rho);
    CHECK(ae6.m == e6.m);

    const RhoM f4 = closed_form_rho_m(f4_example());
    CHECK(f4.rho == std::vector<int>{1, 2, 3, 4});
    CHECK(f4.m == std::vector<int>{5, 5, 5, 5});
    CHECK(build(f4_example()).m == f4.m);
}

TEST_CASE("A_n linear orientation") {
    for (int n = 1; n <= 8; ++n) {
        const RhoM r = closed_form_rho_m(oriented({Family::A, n}, 0));
        for (int i = 1; i <= n; ++i) {
            CHECK(r.m[static_cast<size_t>(i - 1)] == i - 1);
            CHECK(r.rho[static_cast<size_t>(i - 1)] == n + 1 - i);
        }
    }
}

TEST_CASE("knit agrees with the projective knitting oracle") {
    std::mt19937 rng(37);
    for (const TypeSpec& t : acceptance_types())
        for (int rep = 0; rep < 3; ++rep) {
            const ValuedQuiver q = random_relabelled(t, rng);
            const ARQuiver a = build(q);
            const Knit kn = knit_from_projectives(q);
            CHECK_MESSAGE(a.m == kn.m, name(t));
            REQUIRE(a.dims.size() == kn.dims.size());
            for (const auto& [pos, d] : kn.dims) CHECK(a.dims.at({pos.first, pos.second}) == d);
            CHECK(a.arrows.size() == kn.arrows.size());
            std::set<DimVector> dims;
            for (const auto& [v, d] : a.dims) dims.insert(d);
            CHECK(dims == positive_roots(underlying_graph(q)));
        }
}

TEST_CASE("injectives sit where rho and m say") {
    std::mt19937 rng(41);
    for (const TypeSpec& t : acceptance_types()) {
        const ValuedQuiver q = random_relabelled(t, rng);
        const ARQuiver a = build(q);
        const auto inj = injective_dims_recursive(q);
        for (int i = 1; i <= q.n(); ++i) {
            CHECK(a.dims.at(a.injective(i)) == inj[static_cast<size_t>(i - 1)]);
            CHECK(a.rho_of(a.rho_of(i)) == i);
        }
    }
}

TEST_CASE("counts and module nilpotency on the documented examples") {
    const ARQuiver a3 = build(a3_linear());
    const Counts c3 = counts_and_nilpotency(a3, 4);
    CHECK(c3.indecomposables == 6);
    CHECK(c3.nilpotency == 3);
    const Counts cg = counts_and_nilpotency(build(g2()), 6);
    CHECK(cg.indecomposables == 6);
    CHECK(cg.nilpotency == 5);
    const Counts ce = counts_and_nilpotency(build(oriented({Family::E, 8}, 0)), 30);
    CHECK(ce.indecomposables == 120);
    CHECK(ce.nilpotency == 29);
    CHECK_THROWS_AS(counts_and_nilpotency(a3, 6), Error);
}

TEST_CASE("pi-index relation") {
    ARQuiver e6 = build(e6_example());
    CHECK(pi_index_relation_check(e6));
    CHECK(pi_index_relation_check(build(a1())));
    e6.m[0] += 1;
    CHECK_FALSE(pi_index_relation_check(e6));
}

TEST_CASE("non-Dynkin input is rejected") {
    const ValuedQuiver bad = ValuedQuiver::validate(3, {{1, 2, {1, 3}}, {2, 3, {1, 1}}});
    try {
        build(bad);
        FAIL("expected NotDynkin");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotDynkin);
    }
}

TEST_CASE("distances agree with breadth-first search on the oracle knit") {
    std::mt19937 rng(43);
    for (const TypeSpec& t : types_up_to_rank(6)) {
        const ValuedQuiver q = random_relabelled(t, rng);
        const ARQuiver a = build(q);
        const Knit kn = knit_from_projectives(q);
        for (int i = 1; i <= q.n(); ++i) {
            const auto bfs = knit_distances(kn, {0, i});
            const std::vector<int> lib = distances_from(a, {0, i});
            for (size_t idx = 0; idx < a.vertices.size(); ++idx) {
                const ZVertex v = a.vertices[idx];
                auto it = bfs.find({v.level, v.base});
                CHECK(lib[idx] == (it == bfs.end() ? -1 : it->second));
            }
        }
    }
}

}  // TEST_SUITE
