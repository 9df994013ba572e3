#include <doctest.h>

#include <random>

#include "pcascade/errors.hpp"
#include "pcascade/poly.hpp"
#include "support/oracles.hpp"

using namespace pcascade;

namespace {

const std::vector<std::string> kVars{"x", "y", "z"};

Polynomial var(size_t i) { return Polynomial::variable(kVars, i); }
Polynomial num(long long c) { return Polynomial::constant(kVars, c); }

Polynomial random_poly(std::mt19937& rng, int terms, int max_exp) {
    std::uniform_int_distribution<int> e(0, max_exp), c(-5, 5);
    Polynomial p(kVars);
    for (int t = 0; t < terms; ++t) p.add_term({e(rng), e(rng), e(rng)}, c(rng));
    return p;
}

AntisymmetricPolyMatrix random_linear_matrix(std::mt19937& rng, size_t n) {
    std::uniform_int_distribution<int> c(-3, 3);
    AntisymmetricPolyMatrix m(n, kVars);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Polynomial p = num(c(rng));
            for (size_t v = 0; v < kVars.size(); ++v) p += var(v) * BigInt(c(rng));
            m.set(i, j, p);
        }
    return m;
}

std::vector<std::vector<Polynomial>> full(const AntisymmetricPolyMatrix& m) {
    std::vector<std::vector<Polynomial>> out(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) out[i].push_back(m.at(i, j));
    return out;
}

}  // namespace

TEST_CASE("canonical text form") {
    const Polynomial x = var(0), y = var(1), z = var(2);
    CHECK(Polynomial(kVars).to_string() == "0");
    CHECK(num(4).to_string() == "4");
    CHECK((x * x * z * BigInt(2) - y + num(4)).to_string() == "2*x^2*z - y + 4");
    CHECK((y + x).to_string() == "x + y");
    CHECK((-x).to_string() == "-x");
    CHECK((x * y - y * x).is_zero());
}

TEST_CASE("degrees and homogeneity") {
    const Polynomial x = var(0), y = var(1);
    CHECK(Polynomial(kVars).total_degree() == -1);
    CHECK(num(3).total_degree() == 0);
    CHECK((x * x * y + x).total_degree() == 3);
    CHECK((x * y + y * y).is_homogeneous());
    CHECK_FALSE((x * y + y).is_homogeneous());
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_poly(rng, 4, 2), b = random_poly(rng, 4, 2), c = random_poly(rng, 3, 2);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Polynomial(kVars));
        const auto pt = oracle::random_point(rng, 3, -4, 4, false);
        CHECK(evaluate(a * b + c, pt) == evaluate(a, pt) * evaluate(b, pt) + evaluate(c, pt));
    }
}

TEST_CASE("exact division") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_poly(rng, 3, 2), b = random_poly(rng, 3, 2);
        if (b.is_zero()) continue;
        CHECK((a * b).divide_exact(b) == a);
    }
    CHECK_THROWS_AS((var(0) * var(0) + num(1)).divide_exact(var(0)), StructureViolation);
    CHECK_THROWS((var(0)).divide_exact(Polynomial(kVars)));
}

TEST_CASE("evaluation and variables used") {
    const std::vector<std::string> l{"l"};
    const Polynomial lam = Polynomial::variable(l, 0);
    CHECK(evaluate(lam * lam, {Rational(3)}) == 9);
    CHECK(evaluate(lam * lam, {Rational(1, 2)}) == Rational(1, 4));
    const std::vector<std::string> v2{"l1", "l2"};
    const Polynomial l1 = Polynomial::variable(v2, 0), l2 = Polynomial::variable(v2, 1);
    CHECK(variables_used(l1 * l2 - l1 * l2).empty());
    CHECK(variables_used(l2 * l2 + Polynomial::constant(v2, 1)) == std::vector<std::string>{"l2"});
    CHECK_THROWS_AS(evaluate(l1, {Rational(1)}), ArityError);
}

TEST_CASE("bare constants combine with any variable list") {
    const Polynomial five = Polynomial::constant({}, 5);
    CHECK((five * var(0)).to_string() == "5*x");
    CHECK((var(1) + five).variables() == kVars);
}

TEST_CASE("small Pfaffians") {
    const std::vector<std::string> l{"l"};
    const Polynomial lam = Polynomial::variable(l, 0);
    AntisymmetricPolyMatrix m2(2, l);
    m2.set(0, 1, lam);
    CHECK(pfaffian(m2) == lam);

    AntisymmetricPolyMatrix m4(4, l);
    m4.set(0, 1, lam);
    m4.set(2, 3, lam);
    CHECK(pfaffian(m4) == lam * lam);
    CHECK(m4.blocks() == std::vector<std::vector<size_t>>{{0, 1}, {2, 3}});
    CHECK(pfaffian(m4.submatrix({2, 3})) == lam);

    CHECK(pfaffian(AntisymmetricPolyMatrix(0, l)).to_string() == "1");
    CHECK_THROWS_AS(pfaffian(AntisymmetricPolyMatrix(3, l)), OddDimension);
}

TEST_CASE("antisymmetry is validated") {
    const std::vector<std::string> l{"l"};
    const Polynomial lam = Polynomial::variable(l, 0), zero(l);
    CHECK_THROWS_AS(AntisymmetricPolyMatrix::from_entries({{zero, lam}, {lam, zero}}), NotAntisymmetric);
    CHECK_THROWS_AS(AntisymmetricPolyMatrix::from_entries({{lam, lam}, {-lam, zero}}), NotAntisymmetric);
    CHECK_NOTHROW(AntisymmetricPolyMatrix::from_entries({{zero, lam}, {-lam, zero}}));
}

TEST_CASE("integer Pfaffians square to Bareiss determinants") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(-9, 9);
    for (size_t n : {2u, 4u, 6u, 8u}) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n, 0));
            AntisymmetricPolyMatrix m(n, kVars);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j) {
                    const int v = c(rng);
                    a[i][j] = v;
                    a[j][i] = -v;
                    m.set(i, j, num(v));
                }
            const Polynomial pf = pfaffian(m);
            const BigInt value = numerator(evaluate(pf, {0, 0, 0}));
            CHECK(value * value == oracle::bareiss_det(a));
            CHECK(value == oracle::matching_pfaffian(a));
        }
    }
}

TEST_CASE("symbolic Pfaffians square to symbolic determinants") {
    std::mt19937 rng(5);
    for (size_t n : {2u, 4u, 6u}) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto m = random_linear_matrix(rng, n);
            const Polynomial pf = pfaffian(m);
            CHECK(pf * pf == oracle::bareiss_det(full(m), kVars));
            if (!pf.is_zero()) CHECK(pf.total_degree() <= static_cast<int>(n / 2));
        }
    }
}

TEST_CASE("Pf(P^T M P) = det(P) Pf(M)") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> c(-2, 2);
    for (size_t n : {4u, 6u}) {
        for (int trial = 0; trial < 4; ++trial) {
            const auto m = random_linear_matrix(rng, n);
            std::vector<std::vector<BigInt>> p(n, std::vector<BigInt>(n));
            for (auto& row : p)
                for (auto& x : row) x = c(rng);
            AntisymmetricPolyMatrix t(n, kVars);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j) {
                    Polynomial s(kVars);
                    for (size_t k = 0; k < n; ++k)
                        for (size_t l = 0; l < n; ++l)
                            if (k != l) s += m.at(k, l) * (p[k][i] * p[l][j]);
                    t.set(i, j, s);
                }
            CHECK(pfaffian(t) == pfaffian(m) * oracle::bareiss_det(p));
        }
    }
}

TEST_CASE("audit hook sees every Pfaffian") {
    int calls = 0;
    set_pfaffian_audit([&](const AntisymmetricPolyMatrix& m, const Polynomial& pf) {
        ++calls;
        CHECK(pf * pf == oracle::bareiss_det(full(m), m.variables()));
    });
    std::mt19937 rng(1);
    for (int i = 0; i < 3; ++i) pfaffian(random_linear_matrix(rng, 4));
    set_pfaffian_audit(nullptr);
    pfaffian(random_linear_matrix(rng, 4));
    CHECK(calls == 3);
}
