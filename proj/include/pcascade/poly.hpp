#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pcascade/numbers.hpp"

namespace pcascade {

/**
 * Sparse multivariate polynomial with arbitrary-precision integer coefficients
 * over an explicit, ordered list of named variables. Zero coefficients are never stored.
 *
 * Binary operations require equal variable lists; a polynomial without variables
 * (a bare constant) combines with any list.
 */
class Polynomial {
public:
    using Exponents = std::vector<int>;
    using Terms = std::map<Exponents, BigInt>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {}

    static Polynomial constant(std::vector<std::string> variables, const BigInt& c);
    static Polynomial variable(std::vector<std::string> variables, size_t index);

    const std::vector<std::string>& variables() const { return vars_; }
    const Terms& terms() const { return terms_; }
    size_t num_variables() const { return vars_.size(); }

    bool is_zero() const { return terms_.empty(); }
    /// -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;

    /// Adds c * x^e; drops the term if the result is zero.
    void add_term(const Exponents& e, const BigInt& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const BigInt& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const BigInt& c) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    /// Quotient q with q * d == *this; throws StructureViolation if d does not divide exactly.
    Polynomial divide_exact(const Polynomial& d) const;

    /// Canonical text: terms by decreasing total degree, then decreasing exponent vector.
    std::string to_string() const;

private:
    void align(const Polynomial& o);

    std::vector<std::string> vars_;
    Terms terms_;
};

Rational evaluate(const Polynomial& p, const std::vector<Rational>& point);
std::vector<std::string> variables_used(const Polynomial& p);

/// Antisymmetric square matrix of polynomials with zero diagonal.
class AntisymmetricPolyMatrix {
public:
    /// Zero matrix of size n over the given variables.
    AntisymmetricPolyMatrix(size_t n, std::vector<std::string> variables);
    /// Validates entries; throws NotAntisymmetric.
    static AntisymmetricPolyMatrix from_entries(std::vector<std::vector<Polynomial>> entries);

    size_t size() const { return n_; }
    const std::vector<std::string>& variables() const { return vars_; }
    const Polynomial& at(size_t i, size_t j) const { return entries_[i * n_ + j]; }
    /// Sets (i, j) to p and (j, i) to -p.
    void set(size_t i, size_t j, const Polynomial& p);

    /// Index sets of the connected components of the nonzero pattern.
    std::vector<std::vector<size_t>> blocks() const;
    AntisymmetricPolyMatrix submatrix(const std::vector<size_t>& idx) const;

private:
    size_t n_;
    std::vector<std::string> vars_;
    std::vector<Polynomial> entries_;
};

/// Pfaffian by first-row expansion, memoized on the set of remaining indices.
/// Throws OddDimension; Pf of the 0x0 matrix is 1.
Polynomial pfaffian(const AntisymmetricPolyMatrix& m);

/// Optional observer called with every matrix and its Pfaffian (used by test builds).
using PfaffianAudit = std::function<void(const AntisymmetricPolyMatrix&, const Polynomial&)>;
void set_pfaffian_audit(PfaffianAudit audit);

}  // namespace pcascade
