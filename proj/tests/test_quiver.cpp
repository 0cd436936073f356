#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jsonio.hpp"
#include "oracles.hpp"

using namespace excseq;

TEST_CASE("make_quiver accepts proper orientations and rejects the rest") {
    Quiver q = make_quiver(3, "-++");
    CHECK(q.n == 3);
    CHECK(q.inner_points() == 1);
    CHECK(q.outer_points() == 2);
    // arrows: alpha_0: 1->0, alpha_1: 1->2, alpha_2: 2->0
    CHECK(arrow_info(q, 0).source == 1);
    CHECK(arrow_info(q, 0).target == 0);
    CHECK(arrow_info(q, 1).source == 1);
    CHECK(arrow_info(q, 1).target == 2);
    CHECK(arrow_info(q, 2).source == 2);
    CHECK(arrow_info(q, 2).target == 0);

    Quiver kron = make_quiver(2, "-+");
    CHECK(arrow_info(kron, 0).source == 1);
    CHECK(arrow_info(kron, 0).target == 0);
    CHECK(arrow_info(kron, 1).source == 1);
    CHECK(arrow_info(kron, 1).target == 0);

    CHECK_THROWS_AS(make_quiver(3, "+++"), std::invalid_argument);
    CHECK_THROWS_AS(make_quiver(3, "---"), std::invalid_argument);
    CHECK_THROWS_AS(make_quiver(1, "+"), std::invalid_argument);
    CHECK_THROWS_AS(make_quiver(3, "-+"), std::invalid_argument);
}

TEST_CASE("lifted sign is the periodic extension") {
    Quiver q = make_quiver(3, "-++");
    CHECK(q.lifted_sign(3) == Sign::minus);
    CHECK(q.lifted_sign(-1) == Sign::plus);
    CHECK(q.lifted_sign(4) == Sign::plus);
    for (pos_t k = -20; k <= 20; ++k) CHECK(q.lifted_sign(k) == q.lifted_sign(k + q.n));
}

TEST_CASE("vertex boundaries follow the signs") {
    Quiver q = make_quiver(3, "-++");
    CHECK(q.boundary_of_vertex(0) == Boundary::inner);
    CHECK(q.boundary_of_vertex(1) == Boundary::outer);
    CHECK(q.boundary_of_vertex(2) == Boundary::outer);
    CHECK_THROWS_AS(q.boundary_of_vertex(3), std::invalid_argument);
}

TEST_CASE("opposite flips everything and is an involution") {
    Quiver q = make_quiver(3, "-++");
    Quiver op = opposite(q);
    CHECK(op.eps == std::vector<Sign>{Sign::plus, Sign::minus, Sign::minus});
    CHECK(opposite(op) == q);
    CHECK(opposite(make_quiver(2, "-+")) == make_quiver(2, "+-"));
    for (int n = 2; n <= 5; ++n)
        for (const Quiver& r : testing::proper_orientations(n)) {
            Quiver o = opposite(r);
            CHECK(o.inner_points() == r.outer_points());
            CHECK(o.outer_points() == r.inner_points());
            for (int v = 0; v < n; ++v)
                CHECK(o.boundary_of_vertex(v) != r.boundary_of_vertex(v));
        }
}

TEST_CASE("quiver JSON round trip") {
    Quiver q = make_quiver(3, "-++");
    auto j = quiver_to_json(q);
    CHECK(j.dump() == R"({"n":3,"epsilon":["-","+","+"]})");
    CHECK(quiver_from_json(nlohmann::json::parse(j.dump())) == q);
}
