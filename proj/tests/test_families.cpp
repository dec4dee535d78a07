#include <catch_amalgamated.hpp>

#include <memory>
#include <set>

#include "genwt/families.hpp"

using namespace genwt;

TEST_CASE("Hamming SOA family streams one member per coordinate subset") {
    GF F(2);
    HammingSOAFamily T(Space::hamming(4), F);
    CHECK(T.step() == 1);
    CHECK(T.axioms_guaranteed());
    CHECK(T.weights_label() == "T-weights");

    auto members = T.collect_members(2);
    CHECK(members.size() == 6);  // 4 choose 2
    for (const LinearCode& C : members) CHECK(T.is_member(C));
    CHECK(T.collect_members(0).size() == 1);
    CHECK(T.collect_members(4).size() == 1);

    CHECK_THROWS_AS(T.collect_members(5), std::invalid_argument);
    CHECK_THROWS_AS(T.collect_members(-1), std::invalid_argument);

    // repeated streams are deterministic
    CHECK(T.collect_members(2) == members);
}

TEST_CASE("membership predicate agrees with the generated stream") {
    GF F(2);
    Space H = Space::hamming(4);
    HammingSOAFamily T(H, F);
    std::set<Subspace> streamed;
    for (const LinearCode& C : T.collect_members(2)) streamed.insert(C.sub);

    int hits = 0;
    enumerate_subspaces(4, 2, F, [&](const Subspace& S) {
        bool pred = T.is_member(make_code(H, S));
        CHECK(pred == (streamed.count(S) > 0));
        if (pred) ++hits;
        return true;
    });
    CHECK(hits == 6);
}

TEST_CASE("rank-support family emits the column-support spaces") {
    GF F(2);
    Space R = Space::rank(2, 2);
    RankSupportFamily T(R, F);
    CHECK(T.step() == 2);

    auto members = T.collect_members(2);
    CHECK(members.size() == 3);  // one per line of GF(2)^2
    std::set<Subspace> streamed;
    for (const LinearCode& C : members) {
        CHECK(C.k() == 2);
        CHECK(T.is_member(C));
        streamed.insert(C.sub);
    }

    int hits = 0;
    enumerate_subspaces(4, 2, F, [&](const Subspace& S) {
        bool pred = T.is_member(make_code(R, S));
        CHECK(pred == (streamed.count(S) > 0));
        if (pred) ++hits;
        return true;
    });
    CHECK(hits == 3);

    CHECK_THROWS_AS(T.collect_members(1), std::invalid_argument);
}

TEST_CASE("rank OA family adds transposes on square spaces") {
    GF F(2);
    Space R = Space::rank(2, 2);
    RankOAFamily T(R, F);
    auto members = T.collect_members(2);
    CHECK(members.size() == 6);  // 3 supports + 3 transposed supports
    std::set<Subspace> distinct;
    for (const LinearCode& C : members) {
        CHECK(is_optimal_anticode(C));
        CHECK(T.is_member(C));
        distinct.insert(C.sub);
    }
    CHECK(distinct.size() == 6);

    // zero and full dimensions dedupe to a single member
    CHECK(T.collect_members(0).size() == 1);
    CHECK(T.collect_members(4).size() == 1);

    // a transposed support escapes the plain support family
    RankSupportFamily supp(R, F);
    int escaped = 0;
    for (const LinearCode& C : members)
        if (!supp.is_member(C)) ++escaped;
    CHECK(escaped == 3);
}

TEST_CASE("rank OA equals rank support on tall spaces") {
    GF F(2);
    Space R = Space::rank(1, 2);
    RankOAFamily oa(R, F);
    RankSupportFamily supp(R, F);
    CHECK(oa.collect_members(2) == supp.collect_members(2));
}

TEST_CASE("sum-rank SOA family composes block OAs with a tail SOA") {
    GF F(2);
    Space S = Space::sumrank({{2, 2}}, 2);
    SumRankSOAFamily T(S, F);
    CHECK(T.step() == 1);
    CHECK_FALSE(T.axioms_guaranteed());
    CHECK(T.weights_label() == "family-weights");

    auto members = T.collect_members(2);
    CHECK(members.size() == 7);  // 6 block OAs, or the full tail
    for (const LinearCode& C : members) CHECK(is_soa(C));

    int hits = 0;
    enumerate_subspaces(6, 2, F, [&](const Subspace& U) {
        if (T.is_member(make_code(S, U))) ++hits;
        return true;
    });
    CHECK(hits == 7);

    CHECK(T.collect_members(1).size() == 2);  // tail singletons only
}

TEST_CASE("fixed-width sum-rank SOA family validates its shape") {
    GF F(2);
    Space S = Space::sumrank({{2, 2}}, 2);
    SumRankMSOAFamily T(S, F, 2);
    CHECK(T.step() == 2);
    CHECK(T.axioms_guaranteed());
    CHECK(T.name() == "srk-msoa:2");
    CHECK(T.collect_members(2).size() == 7);
    CHECK(T.collect_members(4).size() == 7);
    CHECK_THROWS_AS(T.collect_members(1), std::invalid_argument);

    CHECK_THROWS_AS(SumRankMSOAFamily(Space::sumrank({{2, 2}}, 1), F, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(SumRankMSOAFamily(Space::sumrank({{2, 3}}, 2), F, 2),
                    std::invalid_argument);
}

TEST_CASE("MDS family of the binary triple repetition space") {
    GF F(2);
    Space H = Space::hamming(3);
    MDSFamily T(H, F);
    CHECK_FALSE(T.axioms_guaranteed());

    auto d1 = T.collect_members(1);
    REQUIRE(d1.size() == 1);
    CHECK(min_distance(d1[0]) == 3);  // repetition code

    auto d2 = T.collect_members(2);
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].sub == span(Mat(F, {{1, 0, 1}, {0, 1, 1}})));  // parity code

    CHECK(T.collect_members(0).size() == 1);
    CHECK(T.collect_members(3).size() == 1);
    CHECK(T.is_member(d2[0]));
    CHECK_FALSE(T.is_member(make_code(H, F, Mat(F, {{1, 0, 0}, {0, 1, 0}}))));
}

TEST_CASE("MRD family of binary 2x2 matrices has exactly two planes") {
    GF F(2);
    Space R = Space::rank(2, 2);
    MRDFamily T(R, F);
    CHECK(T.step() == 2);

    auto d2 = T.collect_members(2);
    CHECK(d2.size() == 2);  // the field plane and its twist
    for (const LinearCode& C : d2) CHECK(min_distance(C) == 2);
    CHECK(T.collect_members(4).size() == 1);
    CHECK_THROWS_AS(T.collect_members(1), std::invalid_argument);
}

TEST_CASE("chains validate nesting and constant step") {
    GF F(2);
    CodeChain ch = standard_hamming_chain(F, 4, 2);
    CHECK(ch.links.size() == 3);
    CHECK(ch.step() == 2);
    for (std::size_t i = 1; i < ch.links.size(); ++i)
        CHECK(contains(ch.links[i], ch.links[i - 1]));

    CHECK_THROWS_AS(standard_hamming_chain(F, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_chain({zero_subspace(F, 4)}), std::invalid_argument);
    CHECK_THROWS_AS(make_chain({zero_subspace(F, 4), span(Mat(F, {{1, 0, 0, 0}}))}),
                    std::invalid_argument);  // top link must be V
    std::vector<Subspace> bad = {zero_subspace(F, 4),
                                 span(Mat(F, {{1, 0, 0, 0}, {0, 1, 0, 0}})),
                                 full_space(F, 4)};
    CHECK_NOTHROW(make_chain(bad));
    bad[1] = span(Mat(F, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
    CHECK_NOTHROW(make_chain(bad));
    std::vector<Subspace> mixed = {zero_subspace(F, 4), span(Mat(F, {{1, 0, 0}})),
                                   full_space(F, 4)};
    CHECK_THROWS_AS(make_chain(mixed), std::invalid_argument);

    std::vector<Subspace> skew = {zero_subspace(F, 3), span(Mat(F, {{1, 0, 0}})),
                                  span(Mat(F, {{0, 1, 0}, {0, 0, 1}})), full_space(F, 3)};
    CHECK_THROWS_AS(make_chain(skew), std::invalid_argument);
}

TEST_CASE("chain orbit family is the monomial orbit of the chain links") {
    GF F(2);
    Space H = Space::hamming(4);
    ChainOrbitFamily T(H, F, standard_hamming_chain(F, 4, 2));
    CHECK(T.step() == 2);
    CHECK(T.axioms_guaranteed());

    auto d2 = T.collect_members(2);
    CHECK(d2.size() == 6);  // coordinate pairs
    for (const LinearCode& C : d2) CHECK(T.is_member(C));
    CHECK_FALSE(T.is_member(make_code(H, F, Mat(F, {{1, 1, 0, 0}, {0, 0, 1, 1}}))));

    CHECK_THROWS_AS(ChainOrbitFamily(Space::hamming(7), F, standard_hamming_chain(F, 7)),
                    BudgetExceeded);
}

TEST_CASE("union family merges member streams without duplicates") {
    GF F(2);
    Space H = Space::hamming(3);
    auto soa = std::make_shared<HammingSOAFamily>(H, F);
    auto mds = std::make_shared<MDSFamily>(H, F);
    auto u = union_family({soa, mds});
    CHECK(u->step() == 1);
    CHECK_FALSE(u->axioms_guaranteed());
    CHECK(u->name() == "union(soa,mds)");

    CHECK(u->collect_members(2).size() == 4);  // 3 coordinate planes + parity
    CHECK(u->collect_members(0).size() == 1);  // zero code appears once
    CHECK(u->is_member(make_code(H, F, Mat(F, {{1, 0, 1}, {0, 1, 1}}))));
    CHECK(u->is_member(make_code(H, F, Mat(F, {{1, 0, 0}, {0, 1, 0}}))));
    CHECK_FALSE(u->is_member(make_code(H, F, Mat(F, {{1, 1, 0}}))));
}

TEST_CASE("product family enumerates direct sums across the factor spaces") {
    GF F(2);
    auto a = std::make_shared<HammingSOAFamily>(Space::hamming(2), F);
    auto b = std::make_shared<HammingSOAFamily>(Space::hamming(2), F);
    auto p = product_family(a, b);
    CHECK(p->space().to_string() == "hamming:4");
    CHECK(p->axioms_guaranteed());

    auto d2 = p->collect_members(2);
    CHECK(d2.size() == 6);  // (0,2) + (1,1) + (2,0) compositions
    std::set<Subspace> distinct;
    for (const LinearCode& C : d2) distinct.insert(C.sub);
    CHECK(distinct.size() == 6);

    Space H4 = Space::hamming(4);
    CHECK(p->is_member(make_code(H4, F, Mat(F, {{1, 0, 0, 0}, {0, 0, 1, 0}}))));
    CHECK_FALSE(p->is_member(make_code(H4, F, Mat(F, {{1, 1, 0, 0}}))));
}

TEST_CASE("multiple-of family filters dimensions to multiples of m") {
    GF F(2);
    Space H = Space::hamming(4);
    auto base = std::make_shared<HammingSOAFamily>(H, F);
    auto t = multiple_of(base, 2);
    CHECK(t->step() == 2);
    CHECK(t->collect_members(2).size() == 6);
    CHECK(t->collect_members(1).empty());
    CHECK_FALSE(t->is_member(make_code(H, F, Mat(F, {{1, 0, 0, 0}}))));
    CHECK(t->is_member(make_code(H, F, Mat(F, {{1, 0, 0, 0}, {0, 1, 0, 0}}))));
    CHECK_THROWS_AS(multiple_of(base, 3), std::invalid_argument);  // 3 does not divide 4
}

TEST_CASE("Gabidulin codes hit the rank Singleton bound") {
    GF F2(2);
    LinearCode g22 = gabidulin_code(F2, Space::rank(2, 2), 1);
    CHECK(g22.k() == 2);
    CHECK(is_mrd(g22));

    GF F3(3);
    LinearCode g33 = gabidulin_code(F3, Space::rank(2, 2), 1);
    CHECK(is_mrd(g33));

    LinearCode big = gabidulin_code(F2, Space::rank(3, 3), 2);
    CHECK(big.k() == 6);
    CHECK(is_mrd(big));

    CHECK_THROWS_AS(gabidulin_code(F2, Space::rank(2, 2), 0), std::invalid_argument);
    CHECK_THROWS_AS(gabidulin_code(F2, Space::rank(2, 2), 3), std::invalid_argument);
    CHECK_THROWS_AS(gabidulin_code(F2, Space::hamming(4), 1), std::invalid_argument);
    GF F4(2, 2);
    CHECK_THROWS_AS(gabidulin_code(F4, Space::rank(2, 2), 1), std::invalid_argument);
}

TEST_CASE("axiom checker passes a genuine test family") {
    GF F(2);
    HammingSOAFamily T(Space::hamming(4), F);
    AxiomCheckOptions opt;
    opt.check_metric = true;
    AxiomReport rep = verify_test_family_axioms(T, opt);
    CHECK(rep.complete);
    CHECK(rep.all_pass());
    CHECK_FALSE(rep.any_failure());
    REQUIRE(rep.metric_closed.has_value());
    CHECK(*rep.metric_closed);
    CHECK(rep.members_checked == 16);  // all coordinate subsets of [4]
}

TEST_CASE("axiom checker flags the missing MDS subcode") {
    GF F(2);
    MDSFamily T(Space::hamming(3), F);
    AxiomReport rep = verify_test_family_axioms(T);
    CHECK(rep.complete);
    CHECK(rep.any_failure());
    CHECK(rep.axiom3.state == CheckState::fail);
    REQUIRE(rep.axiom3.witness.has_value());
    CHECK(rep.axiom3.witness->k() == 2);  // the parity code has no MDS line
}

TEST_CASE("axiom checker certifies a probe without a full scan") {
    GF F(2);
    Space H = Space::hamming(3);
    MDSFamily T(H, F);
    AxiomCheckOptions opt;
    opt.full_scan = false;
    opt.probes.push_back(make_code(H, F, Mat(F, {{1, 0, 1}, {0, 1, 1}})));
    AxiomReport rep = verify_test_family_axioms(T, opt);
    CHECK_FALSE(rep.complete);
    CHECK(rep.axiom3.state == CheckState::fail);
    CHECK(rep.members_checked == 1);

    // a probe outside the family is ignored
    opt.probes[0] = make_code(H, F, Mat(F, {{1, 0, 0}, {0, 1, 0}}));
    rep = verify_test_family_axioms(T, opt);
    CHECK(rep.members_checked == 0);
    CHECK(rep.axiom3.state == CheckState::incomplete);
}

TEST_CASE("metric closure check catches the transpose escape") {
    GF F(2);
    RankSupportFamily T(Space::rank(2, 2), F);
    AxiomCheckOptions opt;
    opt.check_metric = true;
    AxiomReport rep = verify_test_family_axioms(T, opt);
    CHECK(rep.all_pass());  // duality and chain axioms hold
    REQUIRE(rep.metric_closed.has_value());
    CHECK_FALSE(*rep.metric_closed);
    CHECK(rep.metric_witness.has_value());

    RankOAFamily oa(Space::rank(2, 2), F);
    AxiomReport rep2 = verify_test_family_axioms(oa, opt);
    CHECK(rep2.all_pass());
    REQUIRE(rep2.metric_closed.has_value());
    CHECK(*rep2.metric_closed);
}

TEST_CASE("axiom checker covers the fixed-width sum-rank family") {
    GF F(2);
    SumRankMSOAFamily T(Space::sumrank({{2, 2}}, 2), F, 2);
    AxiomReport rep = verify_test_family_axioms(T);
    CHECK(rep.complete);
    CHECK(rep.all_pass());
    CHECK(rep.members_checked == 16);  // 1 + 7 + 7 + 1
}
