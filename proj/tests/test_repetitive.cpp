#include <doctest.h>

#include "support.hpp"

using namespace arq;
using namespace arqtest;

TEST_SUITE("repetitive") {

TEST_CASE("in-neighbours in the repetitive quiver") {
    const ValuedQuiver g2op = opposite(g2());
    const auto in12 = arrows_in(g2op, {1, 2});
    REQUIRE(in12.size() == 1);
    CHECK(in12[0].src == ZVertex{0, 1});
    CHECK(in12[0].val == Valuation{1, 3});
    CHECK(in12[0].kind == ZKind::Star);

    const ValuedQuiver a3op = opposite(a3_linear());
    const auto in11 = arrows_in(a3op, {1, 1});
    REQUIRE(in11.size() == 1);
    CHECK(in11[0].src == ZVertex{1, 2});
    CHECK(in11[0].val == Valuation{1, 1});
    CHECK(in11[0].kind == ZKind::Plain);

    CHECK(arrows_in(a1(), {4, 1}).empty());
    CHECK(arrows_out(a1(), {4, 1}).empty());
}

TEST_CASE("every arrow of the repetitive quiver is seen from both ends") {
    std::mt19937 rng(3);
    for (const TypeSpec& t : types_up_to_rank(6)) {
        const ValuedQuiver d = opposite(random_relabelled(t, rng));
        for (int s = -1; s <= 1; ++s)
            for (int x = 1; x <= d.n(); ++x)
                for (const ZArrow& a : arrows_out(d, {s, x})) {
                    const auto in = arrows_in(d, a.dst);
                    CHECK(std::find(in.begin(), in.end(), a) != in.end());
                    CHECK((a.dst.level == a.src.level || a.dst.level == a.src.level + 1));
                }
    }
}

TEST_CASE("covering map and sectional paths") {
    const ValuedQuiver d = opposite(a3_linear());  // 2->1, 3->2
    ZPath trivial{{{3, 2}}, {}};
    CHECK(covering_map(trivial).length() == 0);
    CHECK(covering_map(trivial).start == 2);
    CHECK(is_sectional(trivial));

    const Walk w = reduced_walk(d, 1, 3);
    const ZPath p = sectional_path_from_walk(d, w, 0);
    CHECK(p.vertices == std::vector<ZVertex>{{0, 1}, {1, 2}, {2, 3}});
    const Walk back = covering_map(p);
    REQUIRE(back.length() == 2);
    CHECK_FALSE(back.steps[0].forward);
    CHECK_FALSE(back.steps[1].forward);
    CHECK(is_sectional(p));

    // (0,1) -> (1,2) -> (1,1) folds back onto the same arrow.
    const auto a = arrows_out(d, {0, 1});
    REQUIRE(a.size() == 1);
    const auto b = arrows_out(d, {1, 2});
    const auto it = std::find_if(b.begin(), b.end(), [](const ZArrow& z) { return z.dst == ZVertex{1, 1}; });
    REQUIRE(it != b.end());
    const ZPath folded{{{0, 1}, {1, 2}, {1, 1}}, {a[0], *it}};
    CHECK_FALSE(is_sectional(folded));

    const ZPath t5 = sectional_path_from_walk(d, reduced_walk(d, 2, 2), 5);
    CHECK(t5.vertices == std::vector<ZVertex>{{5, 2}});
}

TEST_CASE("G2 sectional path carries the star valuation") {
    const ValuedQuiver d = opposite(g2());
    const ZPath p = sectional_path_from_walk(d, reduced_walk(d, 1, 2), 0);
    REQUIRE(p.length() == 1);
    CHECK(p.vertices.back() == ZVertex{1, 2});
    CHECK(p.arrows[0].val == Valuation{1, 3});
}

TEST_CASE("non-reduced walks are rejected") {
    const ValuedQuiver d = opposite(a3_linear());
    Walk w{1, {{0, false}, {0, true}}};
    CHECK_FALSE(w.is_reduced());
    try {
        sectional_path_from_walk(d, w, 0);
        FAIL("expected WalkNotReduced");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::WalkNotReduced);
    }
}

TEST_CASE("source sections") {
    const Section a3 = source_section(opposite(a3_linear()), {0, 1});
    CHECK(a3.vertices == std::vector<ZVertex>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(source_section(a1(), {0, 1}).vertices == std::vector<ZVertex>{{0, 1}});

    // For Q^op, the (0,1)-source section sits at the forward-arrow counts of Q.
    const ValuedQuiver q = e6_example();
    const Section e6 = source_section(opposite(q), {0, 1});
    for (int i = 1; i <= 6; ++i) CHECK(e6.level_of(i) == forward_arrows(q, 1, i));
    CHECK(e6.arrows.size() == 5);
}

TEST_CASE("sections are sectional and their arrows cover Q^op") {
    std::mt19937 rng(17);
    for (const TypeSpec& t : types_up_to_rank(8)) {
        const ValuedQuiver q = random_relabelled(t, rng);
        const ValuedQuiver d = opposite(q);
        for (int k = 1; k <= q.n(); ++k) {
            const Section src = source_section(d, {0, k});
            const Section snk = sink_section(d, {0, k});
            CHECK(src.arrows.size() == static_cast<size_t>(q.n() - 1));
            CHECK(snk.arrows.size() == static_cast<size_t>(q.n() - 1));
            for (int i = 1; i <= q.n(); ++i) {
                CHECK(src.level_of(i) >= 0);
                CHECK(snk.level_of(i) <= 0);
                CHECK(src.level_of(i) == forward_arrows(q, k, i));
                CHECK(snk.level_of(i) == -forward_arrows(q, i, k));
            }
            for (const ZArrow& a : src.arrows) {
                const auto out = arrows_out(d, a.src);
                CHECK(std::find(out.begin(), out.end(), a) != out.end());
            }
        }
    }
}

TEST_CASE("additive knitting on A3 and G2") {
    const ValuedQuiver a3op = opposite(a3_linear());
    const ZFunction a3 = knit_additive(a3op, {{{0, 1}, 1}, {{1, 2}, 1}, {{2, 3}, 1}}, 0, 3);
    CHECK(a3.at({1, 1}) == 0);
    CHECK(a3.at({2, 2}) == 0);
    CHECK(a3.at({3, 3}) == -1);

    const ZFunction zero = knit_additive(a3op, {{{0, 1}, 0}, {{1, 2}, 0}, {{2, 3}, 0}}, -2, 4);
    for (const auto& [v, x] : zero) CHECK(x == 0);

    const ValuedQuiver g2op = opposite(g2());
    const ZFunction g = knit_additive(g2op, {{{0, 1}, 1}, {{1, 2}, 3}}, 0, 3);
    CHECK(g.at({1, 1}) == 2);
    CHECK(g.at({2, 2}) == 3);
    CHECK(g.at({2, 1}) == 1);
    CHECK(g.at({3, 2}) == 0);
    CHECK(g.at({3, 1}) == -1);
}

TEST_CASE("knitted functions satisfy the mesh relation everywhere in the window") {
    std::mt19937 rng(23);
    for (const TypeSpec& t : types_up_to_rank(8)) {
        const ValuedQuiver d = opposite(random_relabelled(t, rng));
        const Section s = source_section(d, {0, 1});
        ZFunction seed;
        for (const ZVertex& v : s.vertices) seed[v] = static_cast<long long>(rng() % 7) - 3;
        const ZFunction f = knit_additive(d, seed, -4, 12);
        for (const auto& [v, x] : seed) CHECK(f.at(v) == x);
        for (const auto& [v, x] : f) {
            if (!f.count(tau(v))) continue;
            const auto sum = mesh_sum(d, f, v);
            if (!sum) continue;
            CHECK(f.at(tau(v)) + x == *sum);
        }
    }
}

TEST_CASE("knitting rejects oversized windows") {
    const ValuedQuiver d = opposite(a3_linear());
    CHECK_THROWS_AS(knit_additive(d, {{{0, 1}, 1}, {{1, 2}, 1}, {{2, 3}, 1}}, 0, safety_bound(3) + 10), Error);
}

TEST_CASE("path lengths between vertices of the repetitive quiver") {
    const ValuedQuiver d = opposite(a3_linear());
    CHECK(z_distance(d, {0, 3}, {0, 1}) == 2);
    CHECK(z_distance(d, {0, 2}, {1, 2}) == 2);
    CHECK(z_distance(d, {0, 2}, {0, 2}) == 0);
    CHECK_FALSE(z_distance(d, {0, 1}, {0, 3}).has_value());
}

}  // TEST_SUITE
