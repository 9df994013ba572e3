#include <doctest.h>

#include "pcascade/cascade.hpp"
#include "pcascade/errors.hpp"
#include "support/oracles.hpp"

using namespace pcascade;

namespace {

std::vector<Coords> betas(const RestrictedRootSystem& sys, const Cascade& c) {
    std::vector<Coords> out;
    for (RootId b : c.betas) out.push_back(sys.coords(b));
    return out;
}

std::set<Coords> layer(const RestrictedRootSystem& sys, const Cascade& c, int r) {
    std::set<Coords> out;
    for (RootId a : c.layers[static_cast<size_t>(r)]) out.insert(sys.coords(a));
    return out;
}

}  // namespace

TEST_CASE("A2 cascade") {
    const auto sys = build_system({Family::A, 2});
    const auto c = build_cascade(sys);
    CHECK(betas(sys, c) == std::vector<Coords>{{1, 1}});
    CHECK(layer(sys, c, 0) == std::set<Coords>{{1, 0}, {0, 1}});
}

TEST_CASE("A3 cascade") {
    const auto sys = build_system({Family::A, 3});
    const auto c = build_cascade(sys);
    CHECK(betas(sys, c) == std::vector<Coords>{{1, 1, 1}, {0, 1, 0}});
    CHECK(layer(sys, c, 0) == std::set<Coords>{{1, 0, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}});
    CHECK(layer(sys, c, 1).empty());
}

TEST_CASE("A5 cascade is psi1+...+psi5, psi2+psi3+psi4, psi3") {
    const auto sys = build_system({Family::A, 5});
    const auto c = build_cascade(sys);
    CHECK(betas(sys, c) == std::vector<Coords>{{1, 1, 1, 1, 1}, {0, 1, 1, 1, 0}, {0, 0, 1, 0, 0}});
}

TEST_CASE("cascade invariants across families") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::BC})
        for (int n = min_rank(f); n <= 8; ++n) {
            CAPTURE(family_name(f));
            CAPTURE(n);
            const auto sys = build_system({f, n});
            const auto c = build_cascade(sys);
            // strong orthogonality and membership in Delta_0
            for (int i = 0; i < c.size(); ++i) {
                const RootId bi = c.betas[static_cast<size_t>(i)];
                CHECK(sys.nonmultipliable(bi));
                for (int j = i + 1; j < c.size(); ++j) {
                    const RootId bj = c.betas[static_cast<size_t>(j)];
                    CHECK(sys.pairing(bi, bj) == 0);
                    CHECK_FALSE(sys.is_root(add(sys.coords(bi), sys.coords(bj))));
                    CHECK_FALSE(sys.is_root(subtract(sys.coords(bi), sys.coords(bj))));
                }
            }
            // exact partition of Delta^+
            std::vector<int> hits(static_cast<size_t>(sys.size()), 0);
            for (RootId b : c.betas) ++hits[static_cast<size_t>(b)];
            for (const auto& l : c.layers)
                for (RootId a : l) ++hits[static_cast<size_t>(a)];
            for (int h : hits) CHECK(h == 1);
            // sigma is an involution pairing each root with beta_r minus itself
            for (int r = 0; r < c.size(); ++r) {
                const Coords& beta = sys.coords(c.betas[static_cast<size_t>(r)]);
                for (RootId a : c.layers[static_cast<size_t>(r)]) {
                    const RootId s = sigma_r(sys, c, r, a);
                    CHECK(sigma_r(sys, c, r, s) == a);
                    CHECK(add(sys.coords(a), sys.coords(s)) == beta);
                    // alpha + alpha' is a root only for alpha' = sigma(alpha)
                    for (RootId b : c.layers[static_cast<size_t>(r)])
                        if (sys.is_root(add(sys.coords(a), sys.coords(b)))) CHECK(b == s);
                }
            }
        }
}

TEST_CASE("cascade length is maximal among strongly orthogonal sets") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::BC})
        for (int n = min_rank(f); n <= 5; ++n) {
            CAPTURE(family_name(f));
            CAPTURE(n);
            const auto sys = build_system({f, n});
            std::vector<oracle::Vec> roots;
            for (RootId a = 0; a < sys.size(); ++a)
                if (sys.nonmultipliable(a)) roots.push_back(sys.root(a).ambient);
            CHECK(build_cascade(sys).size() == oracle::max_strongly_orthogonal(roots));
        }
}

TEST_CASE("first cascade root is the highest root") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D})
        for (int n = min_rank(f); n <= 8; ++n) {
            const auto sys = build_system({f, n});
            const auto c = build_cascade(sys);
            for (RootId a = 0; a < sys.size(); ++a)
                for (int i = 0; i < n; ++i)
                    CHECK(sys.coords(a)[static_cast<size_t>(i)] <= sys.coords(c.betas[0])[static_cast<size_t>(i)]);
        }
}

TEST_CASE("cascade coefficients weakly decrease for A and C") {
    for (Family f : {Family::A, Family::C})
        for (int n = min_rank(f); n <= 8; ++n) {
            const auto sys = build_system({f, n});
            const auto c = build_cascade(sys);
            for (int r = 0; r + 1 < c.size(); ++r)
                for (int i = 0; i < n; ++i)
                    CHECK(sys.coords(c.betas[static_cast<size_t>(r + 1)])[static_cast<size_t>(i)] <=
                          sys.coords(c.betas[static_cast<size_t>(r)])[static_cast<size_t>(i)]);
        }
}

TEST_CASE("B3 ties break toward the lexicographically larger root") {
    // after beta_1 = eps_3 + eps_2, both eps_1 and eps_3 - eps_2 are maximal among the orthogonal roots
    const auto sys = build_system({Family::B, 3});
    const auto c = build_cascade(sys);
    CHECK(betas(sys, c) == std::vector<Coords>{{2, 2, 1}, {1, 0, 0}, {0, 0, 1}});
}

TEST_CASE("sigma examples and layer mismatch") {
    const auto a2 = build_system({Family::A, 2});
    const auto c2 = build_cascade(a2);
    CHECK(a2.coords(sigma_r(a2, c2, 0, a2.id_of({1, 0}))) == Coords{0, 1});
    const auto a3 = build_system({Family::A, 3});
    const auto c3 = build_cascade(a3);
    CHECK(a3.coords(sigma_r(a3, c3, 0, a3.id_of({1, 0, 0}))) == Coords{0, 1, 1});
    CHECK_THROWS_AS(sigma_r(a3, c3, 1, a3.id_of({1, 0, 0})), LayerMismatch);
    CHECK_THROWS_AS(sigma_r(a3, c3, 0, a3.id_of({1, 1, 1})), LayerMismatch);
}

TEST_CASE("layers are Heisenberg") {
    const auto a2 = build_system({Family::A, 2});
    CHECK(heisenberg_check(a2, build_cascade(a2), 0));
    for (Family f : {Family::A, Family::B, Family::C, Family::D})
        for (int n = min_rank(f); n <= 7; ++n) {
            const auto sys = build_system({f, n});
            const auto c = build_cascade(sys);
            for (int r = 0; r < c.size(); ++r) CHECK(heisenberg_check(sys, c, r));
        }
}
