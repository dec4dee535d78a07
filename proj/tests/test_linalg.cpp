#include <catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "genwt/budget.hpp"
#include "genwt/linalg.hpp"

using namespace genwt;

TEST_CASE("rref reduces pivot columns to the identity over GF(5)") {
    GF F(5);
    Mat m(F, {{2, 1, 0, 3}, {1, 4, 2, 0}, {3, 0, 1, 1}});
    RrefResult r = rref(m);
    CHECK(r.rank == 3);
    CHECK(r.pivots == std::vector<int>{0, 1, 2});
    // pivot columns reduced to the identity
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(r.m.at(i, j) == (i == j ? 1 : 0));
    CHECK(rref(r.m).m == r.m);  // idempotent
}

TEST_CASE("rref finds dependent rows") {
    GF F(2);
    Mat m(F, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});  // row3 = row1 + row2
    RrefResult r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<int>{0, 1});
}

TEST_CASE("kernel is the orthogonal complement computationally") {
    GF F(7);
    Mat m(F, {{1, 0, 2, 3, 4}, {0, 1, 5, 6, 1}});
    Subspace K = kernel(m);
    CHECK(K.dim() == 3);
    // every kernel basis row maps to zero
    for (int i = 0; i < K.dim(); ++i)
        for (int r = 0; r < m.rows; ++r) {
            int s = 0;
            for (int c = 0; c < m.cols; ++c) s = F.add(s, F.mul(m.at(r, c), K.basis.at(i, c)));
            CHECK(s == 0);
        }
    CHECK(kernel(K.basis).dim() == 2);
    CHECK(K.basis == rref(K.basis).m);  // canonical
}

TEST_CASE("span canonicalizes and subspace equality is basis equality") {
    GF F(3);
    Mat a(F, {{1, 2, 0}, {0, 0, 1}});
    Mat b(F, {{2, 1, 0}, {1, 2, 1}, {0, 0, 2}});  // same row space, messier
    CHECK(span(a) == span(b));
    CHECK(span(a).dim() == 2);
    Mat c(F, {{1, 2, 1}});
    CHECK(span(a) != span(c));
}

TEST_CASE("membership and containment") {
    GF F(2);
    Subspace S = span(Mat(F, {{1, 0, 1, 0}, {0, 1, 1, 1}}));
    CHECK(member(S, {1, 1, 0, 1}));
    CHECK(!member(S, {1, 1, 1, 0}));
    CHECK(member(S, {0, 0, 0, 0}));
    CHECK(contains(S, span(Mat(F, {{1, 1, 0, 1}}))));
    CHECK(contains(S, zero_subspace(F, 4)));
    CHECK(contains(full_space(F, 4), S));
    CHECK(!contains(S, full_space(F, 4)));
}

TEST_CASE("sum, intersection and the dimension law") {
    GF F(3);
    Subspace A = span(Mat(F, {{1, 0, 0, 1}, {0, 1, 0, 2}}));
    Subspace B = span(Mat(F, {{1, 0, 0, 1}, {0, 0, 1, 1}}));
    Subspace I = intersect(A, B);
    CHECK(I.dim() == 1);
    CHECK(member(I, {1, 0, 0, 1}));
    CHECK(subspace_sum(A, B).dim() == 3);
    CHECK(dim_intersection(A, B) == 1);
    CHECK(dim_intersection(A, zero_subspace(F, 4)) == 0);
    CHECK(dim_intersection(A, full_space(F, 4)) == 2);
}

TEST_CASE("Gaussian binomials") {
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(3, 2, 7) == 57);
    CHECK(gaussian_binomial(4, 3, 7) == 400);
    CHECK(gaussian_binomial(9, 3, 2) == BigInt("788035"));
    CHECK(gaussian_binomial(5, 0, 3) == 1);
    CHECK(gaussian_binomial(5, 5, 3) == 1);
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(gaussian_binomial(n, k, 2) == gaussian_binomial(n, n - k, 2));  // symmetry
}

TEST_CASE("enumerate_subspaces hits the Gaussian binomial count, all canonical, no repeats",
          "[property]") {
    for (auto [nu, q] : std::vector<std::pair<int, int>>{{4, 2}, {3, 3}, {3, 7}, {2, 4}}) {
        GF F(q == 4 ? 2 : q, q == 4 ? 2 : 1);
        for (int r = 0; r <= nu; ++r) {
            std::set<Subspace> seen;
            enumerate_subspaces(nu, r, F, [&](const Subspace& S) {
                CHECK(S.dim() == r);
                CHECK(S.ambient() == nu);
                CHECK(S.basis == rref(S.basis).m);
                seen.insert(S);
                return true;
            });
            CHECK(BigInt(seen.size()) == gaussian_binomial(nu, r, F.q()));
        }
    }
}

TEST_CASE("enumeration respects the early-stop protocol") {
    GF F(2);
    int count = 0;
    bool completed = enumerate_subspaces(4, 2, F, [&](const Subspace&) { return ++count < 10; });
    CHECK(!completed);
    CHECK(count == 10);
}

TEST_CASE("first pivot set is the colex-least coordinate set") {
    GF F(2);
    std::vector<Subspace> first;
    enumerate_subspaces(4, 2, F, [&](const Subspace& S) {
        first.push_back(S);
        return first.size() < 2;
    });
    // colex order starts with pivots {0,1}; the all-free-zero member is the
    // coordinate subspace itself
    CHECK(first[0] == span(Mat(F, {{1, 0, 0, 0}, {0, 1, 0, 0}})));
}

TEST_CASE("budget cuts off runaway enumeration") {
    GF F(2);
    budget_reset();
    std::uint64_t before = budget_used();
    BudgetScope scope(before + 5);
    int seen = 0;
    CHECK_THROWS_AS(enumerate_subspaces(9, 3, F,
                                        [&](const Subspace&) {
                                            ++seen;
                                            return true;
                                        }),
                    BudgetExceeded);
    CHECK(seen <= 5);
    budget_reset();
}

TEST_CASE("r = 0 enumeration yields exactly the zero subspace") {
    GF F(3);
    int count = 0;
    enumerate_subspaces(4, 0, F, [&](const Subspace& S) {
        CHECK(S.dim() == 0);
        ++count;
        return true;
    });
    CHECK(count == 1);
}

TEST_CASE("matrix product and transpose sanity") {
    GF F(5);
    Mat a(F, {{1, 2, 3}, {4, 0, 1}});
    Mat b(F, {{1, 0}, {0, 1}, {1, 1}});
    Mat ab = mat_mul(a, b);
    CHECK(ab.at(0, 0) == 4);  // 1 + 3
    CHECK(ab.at(0, 1) == 0);  // 2 + 3
    CHECK(ab.at(1, 0) == 0);  // 4 + 1
    CHECK(ab.at(1, 1) == 1);
    Mat at = transpose(a);
    CHECK(at.rows == 3);
    CHECK(at.at(2, 1) == 1);
    CHECK(transpose(at) == a);
}
