#include "pcascade/poly.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "pcascade/errors.hpp"

namespace pcascade {

namespace {

int degree(const Polynomial::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Canonical order: higher total degree first, then larger exponent vector first.
bool canonical_before(const Polynomial::Exponents& a, const Polynomial::Exponents& b) {
    int da = degree(a), db = degree(b);
    if (da != db) return da > db;
    return a > b;
}

Polynomial promote(const Polynomial& p, const std::vector<std::string>& vars) {
    Polynomial out(vars);
    for (const auto& [e, c] : p.terms()) {
        if (degree(e) != 0) throw ArityError("polynomials over different variables");
        out.add_term(Polynomial::Exponents(vars.size(), 0), c);
    }
    return out;
}

PfaffianAudit& audit_slot() {
    static PfaffianAudit slot;
    return slot;
}

}  // namespace

Polynomial Polynomial::constant(std::vector<std::string> variables, const BigInt& c) {
    Polynomial p(std::move(variables));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, size_t index) {
    if (index >= variables.size()) throw ArityError("variable index out of range");
    Polynomial p(std::move(variables));
    Exponents e(p.vars_.size(), 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, degree(e));
    return d;
}

bool Polynomial::is_homogeneous() const {
    int d = total_degree();
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return degree(t.first) == d; });
}

void Polynomial::add_term(const Exponents& e, const BigInt& c) {
    if (e.size() != vars_.size()) throw ArityError("exponent vector length does not match the variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::align(const Polynomial& o) {
    if (vars_ == o.vars_ || o.vars_.empty()) return;
    if (!vars_.empty()) throw ArityError("polynomials over different variables");
    *this = promote(*this, o.vars_);
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    align(o);
    const Polynomial& b = o.vars_ == vars_ ? o : promote(o, vars_);
    for (const auto& [e, c] : b.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const BigInt& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a0, const Polynomial& b0) {
    if (a0.vars_ != b0.vars_) {
        Polynomial a = a0;
        a.align(b0);
        return a * (b0.vars_ == a.vars_ ? b0 : promote(b0, a.vars_));
    }
    Polynomial out(a0.vars_);
    Polynomial::Exponents e(a0.vars_.size());
    for (const auto& [ea, ca] : a0.terms_)
        for (const auto& [eb, cb] : b0.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    try {
        return (a - b).is_zero();
    } catch (const ArityError&) {
        return false;
    }
}

Polynomial Polynomial::divide_exact(const Polynomial& d0) const {
    if (d0.is_zero()) throw StructureViolation("division by the zero polynomial");
    Polynomial rem = *this;
    rem.align(d0);
    const Polynomial d = d0.vars_ == rem.vars_ ? d0 : promote(d0, rem.vars_);
    // lexicographic leading terms; map order is increasing, so the leader is the last entry
    const auto& [de, dc] = *d.terms_.rbegin();
    Polynomial q(rem.vars_);
    while (!rem.is_zero()) {
        const auto [re, rc] = *rem.terms_.rbegin();
        Exponents e(re.size());
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = re[i] - de[i];
            if (e[i] < 0) throw StructureViolation("inexact polynomial division");
        }
        if (rc % dc != 0) throw StructureViolation("inexact polynomial division");
        const BigInt qc = rc / dc;
        q.add_term(e, qc);
        Exponents f(e.size());
        for (const auto& [dt, dv] : d.terms_) {
            for (size_t i = 0; i < f.size(); ++i) f[i] = e[i] + dt[i];
            rem.add_term(f, -qc * dv);
        }
    }
    return q;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* x, auto* y) { return canonical_before(x->first, y->first); });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        BigInt c = t->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        bool constant_term = degree(t->first) == 0;
        bool wrote = false;
        if (c != 1 || constant_term) {
            os << c;
            wrote = true;
        }
        for (size_t i = 0; i < vars_.size(); ++i) {
            int k = t->first[i];
            if (k == 0) continue;
            os << (wrote ? "*" : "") << vars_[i];
            if (k > 1) os << '^' << k;
            wrote = true;
        }
    }
    return os.str();
}

Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
    if (point.size() != p.num_variables())
        throw ArityError("point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                         std::to_string(p.num_variables()) + " variables");
    Rational sum = 0;
    for (const auto& [e, c] : p.terms()) {
        Rational term = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        sum += term;
    }
    return sum;
}

std::vector<std::string> variables_used(const Polynomial& p) {
    std::vector<bool> used(p.num_variables(), false);
    for (const auto& [e, c] : p.terms())
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) used[i] = true;
    std::vector<std::string> out;
    for (size_t i = 0; i < used.size(); ++i)
        if (used[i]) out.push_back(p.variables()[i]);
    return out;
}

AntisymmetricPolyMatrix::AntisymmetricPolyMatrix(size_t n, std::vector<std::string> variables)
    : n_(n), vars_(std::move(variables)), entries_(n * n, Polynomial(vars_)) {}

AntisymmetricPolyMatrix AntisymmetricPolyMatrix::from_entries(std::vector<std::vector<Polynomial>> entries) {
    const size_t n = entries.size();
    std::vector<std::string> vars;
    for (const auto& row : entries) {
        if (row.size() != n) throw NotAntisymmetric("matrix is not square");
        for (const auto& p : row)
            if (!p.variables().empty()) vars = p.variables();
    }
    AntisymmetricPolyMatrix m(n, vars);
    for (size_t i = 0; i < n; ++i) {
        if (!entries[i][i].is_zero())
            throw NotAntisymmetric("nonzero diagonal entry at " + std::to_string(i));
        for (size_t j = i + 1; j < n; ++j) {
            if (!(entries[i][j] + entries[j][i]).is_zero())
                throw NotAntisymmetric("entries (" + std::to_string(i) + "," + std::to_string(j) + ") are not opposite");
            m.set(i, j, entries[i][j]);
        }
    }
    return m;
}

void AntisymmetricPolyMatrix::set(size_t i, size_t j, const Polynomial& p) {
    if (i == j) {
        if (!p.is_zero()) throw NotAntisymmetric("nonzero diagonal entry");
        return;
    }
    Polynomial q = p;
    if (q.variables().empty() && !vars_.empty()) q = Polynomial(vars_) + p;
    entries_[i * n_ + j] = q;
    entries_[j * n_ + i] = -q;
}

std::vector<std::vector<size_t>> AntisymmetricPolyMatrix::blocks() const {
    std::vector<int> comp(n_, -1);
    std::vector<std::vector<size_t>> out;
    for (size_t s = 0; s < n_; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<size_t> block, stack{s};
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            size_t i = stack.back();
            stack.pop_back();
            block.push_back(i);
            for (size_t j = 0; j < n_; ++j)
                if (comp[j] < 0 && !at(i, j).is_zero()) {
                    comp[j] = comp[s];
                    stack.push_back(j);
                }
        }
        std::sort(block.begin(), block.end());
        out.push_back(std::move(block));
    }
    return out;
}

AntisymmetricPolyMatrix AntisymmetricPolyMatrix::submatrix(const std::vector<size_t>& idx) const {
    AntisymmetricPolyMatrix m(idx.size(), vars_);
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = a + 1; b < idx.size(); ++b) m.set(a, b, at(idx[a], idx[b]));
    return m;
}

Polynomial pfaffian(const AntisymmetricPolyMatrix& m) {
    const size_t n = m.size();
    if (n % 2) throw OddDimension("Pfaffian of a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    if (n > 64) throw std::length_error("Pfaffian limited to 64 rows");
    const Polynomial one = Polynomial::constant(m.variables(), 1);
    std::unordered_map<std::uint64_t, Polynomial> memo;

    std::function<Polynomial(std::uint64_t)> rec = [&](std::uint64_t mask) -> Polynomial {
        if (mask == 0) return one;
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        const int i0 = std::countr_zero(mask);
        const std::uint64_t rest = mask & ~(std::uint64_t{1} << i0);
        Polynomial sum(m.variables());
        int k = 0;
        for (std::uint64_t r = rest; r; r &= r - 1, ++k) {
            const int j = std::countr_zero(r);
            const Polynomial& a = m.at(static_cast<size_t>(i0), static_cast<size_t>(j));
            if (a.is_zero()) continue;
            Polynomial sub = rec(rest & ~(std::uint64_t{1} << j));
            if (sub.is_zero()) continue;
            if (k % 2) sum -= a * sub;
            else sum += a * sub;
        }
        memo.emplace(mask, sum);
        return sum;
    };
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    Polynomial pf = rec(full);
    if (const auto& audit = audit_slot()) audit(m, pf);
    return pf;
}

void set_pfaffian_audit(PfaffianAudit audit) { audit_slot() = std::move(audit); }

}  // namespace pcascade
