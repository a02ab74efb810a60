#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

#include "ifsx/charvec.hpp"

#include <algorithm>

using namespace ifsx;
using namespace ifsx::testing;

namespace {

CharVec gamma_of(const IfsSystem& sys) {
    const AttractorContext ctx = make_context(sys);
    const AdjacencyGraph g = adjacency_graph(ctx);
    return characteristic_vector(sys, components(g));
}

CharVec exact_vec(std::initializer_list<std::pair<int, Rat>> items) {
    CharVec v;
    for (const auto& [n, q] : items)
        if (q != Rat(0)) v.entries.emplace(n, Scalar::exact(q));
    return v;
}

} // namespace

TEST_CASE("characteristic vector of f5 is (1/3, 2/3) exactly") {
    const CharVec g = gamma_of(f5());
    CHECK(g.exact);
    CHECK(!g.provisional);
    CHECK(g.max_index() == 2);
    CHECK(g.at(1).is_exact());
    CHECK(g.at(1).lo() == Rat(1, 3));
    CHECK(g.at(2).lo() == Rat(2, 3));
    CHECK(g.at(3).is_exact());
    CHECK(g.at(3).lo() == Rat(0)); // absent = exact zero
    CHECK(g.str().find("1/3") != std::string::npos);
}

TEST_CASE("characteristic vector of an ssc system is concentrated at index 1") {
    const CharVec g = gamma_of(c4());
    CHECK(g.exact);
    CHECK(g.max_index() == 1);
    CHECK(g.at(1).lo() == Rat(1));
}

TEST_CASE("characteristic vector of a connected system sits at index N") {
    const CharVec g = gamma_of(conn2());
    CHECK(g.max_index() == 2);
    CHECK(g.at(2).lo() == Rat(1));
    CHECK(g.at(1).is_exact_zero());
}

TEST_CASE("characteristic vector of the f5 square") {
    const IfsSystem sys = ifs_power(f5(), 2);
    const CharVec g = gamma_of(sys);
    CHECK(g.exact);
    // Components: {1}, {2,3}, {4}, {5,6,7}, {8,9} (1-based) ->
    // two singletons, two pairs, one triple; each map carries mass 1/9.
    CHECK(g.at(1).lo() == Rat(2, 9));
    CHECK(g.at(2).lo() == Rat(4, 9));
    CHECK(g.at(3).lo() == Rat(1, 3));
}

TEST_CASE("partition must cover the index set") {
    const IfsSystem sys = f5();
    ComponentPartition bad;
    bad.components = {{0}, {1}}; // map 2 missing
    CHECK_THROWS_AS(characteristic_vector(sys, bad), std::invalid_argument);
}

TEST_CASE("compare decides at the largest differing index") {
    const CharVec x = exact_vec({{1, Rat(1)}});
    const CharVec y = exact_vec({{1, Rat(1, 3)}, {2, Rat(2, 3)}});
    const OrderResult r = compare(x, y);
    CHECK(r.kind == OrderKind::less); // index 2: 0 < 2/3 decides
    CHECK(r.index == 2);
    CHECK(r.gap.lo() == Rat(2, 3));

    const OrderResult rr = compare(y, x);
    CHECK(rr.kind == OrderKind::greater);
    CHECK(rr.index == 2);

    const OrderResult eq = compare(y, y);
    CHECK(eq.kind == OrderKind::equal);
    CHECK(eq.index == 0);

    // Mass moving from index 1 to index 3 increases the vector even though
    // the index-1 entry shrinks.
    const CharVec z = exact_vec({{1, Rat(2, 3)}, {3, Rat(1, 3)}});
    const OrderResult rz = compare(y, z);
    CHECK(rz.kind == OrderKind::less);
    CHECK(rz.index == 3);
}

TEST_CASE("gamma grows strictly from f5 to its square") {
    const CharVec a = gamma_of(f5());
    const IfsSystem sq = ifs_power(f5(), 2);
    const CharVec b = gamma_of(sq);
    const OrderResult r = compare(a, b);
    CHECK(r.kind == OrderKind::less);
    CHECK(r.index == 3);
    CHECK(r.gap.lo() == Rat(1, 3));
}

TEST_CASE("enclosure entries can be incomparable, exact ones never") {
    CharVec x, y;
    x.entries.emplace(2, Scalar::range(Rat(2, 5), Rat(3, 5)));
    x.exact = false;
    y.entries.emplace(2, Scalar::range(Rat(1, 2), Rat(7, 10)));
    y.exact = false;
    const OrderResult r = compare(x, y);
    CHECK(r.kind == OrderKind::incomparable);
    CHECK(r.index == 2);
}

TEST_CASE("linear_combine forms certified convex combinations") {
    const CharVec a = gamma_of(f5());
    const IfsSystem sq = ifs_power(f5(), 2);
    const CharVec b = gamma_of(sq);
    const std::vector<Scalar> half = {Scalar::exact(Rat(1, 2)), Scalar::exact(Rat(1, 2))};
    const CharVec m = linear_combine(half, {a, b});
    CHECK(m.exact);
    CHECK(m.at(1).lo() == Rat(5, 18));
    CHECK(m.at(2).lo() == Rat(5, 9));
    CHECK(m.at(3).lo() == Rat(1, 6));

    // Trivial combination reproduces the vector.
    const CharVec same = linear_combine({Scalar::exact(Rat(1))}, {a});
    CHECK(compare(same, a).kind == OrderKind::equal);

    // Errors: sum != 1, negative coefficient, size mismatch, empty.
    CHECK_THROWS_AS(linear_combine({Scalar::exact(Rat(1, 2))}, {a}), std::invalid_argument);
    CHECK_THROWS_AS(
        linear_combine({Scalar::exact(Rat(3, 2)), Scalar::exact(-Rat(1, 2))}, {a, b}),
        std::invalid_argument);
    CHECK_THROWS_AS(linear_combine({Scalar::exact(Rat(1))}, {a, b}), std::invalid_argument);
    CHECK_THROWS_AS(linear_combine({}, {}), std::invalid_argument);
}

TEST_CASE("charvec_sub produces signed residuals and drops exact zeros") {
    const CharVec a = exact_vec({{1, Rat(1, 3)}, {2, Rat(2, 3)}});
    const CharVec b = exact_vec({{1, Rat(1, 3)}, {3, Rat(2, 3)}});
    const CharVec d = charvec_sub(a, b);
    CHECK(d.at(1).is_exact_zero());
    CHECK(d.entries.find(1) == d.entries.end()); // dropped
    CHECK(d.at(2).lo() == Rat(2, 3));
    CHECK(d.at(3).lo() == Rat(-2, 3));
    const CharVec zero = charvec_sub(a, a);
    CHECK(zero.entries.empty());
}

TEST_CASE("verify_monotonicity certifies the strict step for f5 over itself") {
    const IfsSystem sys = f5();
    const MonotonicityReport rep = verify_monotonicity(sys, sys);
    CHECK(rep.failure.empty());
    CHECK(rep.preconditions_ok);
    CHECK(rep.strict_increase);
    CHECK(rep.order.kind == OrderKind::less);
    CHECK(rep.order.index == 3);
    CHECK(!rep.provisional);
    // The composite merges cylinders with different first factors exactly
    // once: the component {(2,2),(2,3),(3,1)} in 1-based double indices.
    REQUIRE(rep.merged_components.size() == 1);
    const std::vector<Word> expected = {Word{1, 1}, Word{1, 2}, Word{2, 0}};
    CHECK(rep.merged_components[0] == expected);
}

TEST_CASE("verify_monotonicity with the same-attractor assumption") {
    const IfsSystem sys = f5();
    MonotonicityOptions opts;
    opts.assume_same_attractor = true;
    const MonotonicityReport rep = verify_monotonicity(sys, sys, {}, opts);
    CHECK(rep.preconditions_ok);
    CHECK(rep.strict_increase);
    CHECK(rep.attractor_evidence.is_exact_zero());
}

TEST_CASE("verify_monotonicity rejects strongly separated left systems") {
    const IfsSystem sys = c4();
    const MonotonicityReport rep = verify_monotonicity(sys, sys);
    CHECK(!rep.preconditions_ok);
    CHECK(rep.failure.find("strong separation") != std::string::npos);
    CHECK(!rep.strict_increase);
}

TEST_CASE("verify_monotonicity demands osc attribution") {
    const IfsSystem plain =
        make_system(1, Mode::exact, {sim1(Rat(1, 5), Rat(0)), sim1(Rat(1, 5), Rat(3, 5)),
                                     sim1(Rat(1, 5), Rat(4, 5))},
                    OscStatus::unknown);
    const IfsSystem attributed = f5();
    const MonotonicityReport rep = verify_monotonicity(plain, attributed);
    CHECK(!rep.preconditions_ok);
    CHECK(rep.failure.find("open set condition") != std::string::npos);
}

TEST_CASE("verify_monotonicity rejects mismatched ambient dimensions") {
    CHECK_THROWS_AS(verify_monotonicity(f5(), planar3()), std::invalid_argument);
}

TEST_CASE("verify_monotonicity flags genuinely different attractors") {
    // f5 (not SSC) over c4: distinct attractors, no assumption -> the
    // evidence gate must refuse.
    const MonotonicityReport rep = verify_monotonicity(f5(), c4());
    CHECK(!rep.preconditions_ok);
    CHECK(rep.failure.find("evidence") != std::string::npos);
}
