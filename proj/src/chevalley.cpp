#include "pcascade/chevalley.hpp"

#include <boost/rational.hpp>
#include <mutex>

#include "pcascade/errors.hpp"

namespace pcascade {

namespace {

using Q = boost::rational<long long>;
using Sparse = std::map<std::pair<int, int>, Q>;

Sparse multiply(const Sparse& x, const Sparse& y) {
    std::map<int, std::vector<std::pair<int, Q>>> rows_y;
    for (const auto& [ij, v] : y) rows_y[ij.first].emplace_back(ij.second, v);
    Sparse out;
    for (const auto& [ij, v] : x) {
        auto it = rows_y.find(ij.second);
        if (it == rows_y.end()) continue;
        for (const auto& [k, w] : it->second) {
            Q& slot = out[{ij.first, k}];
            slot += v * w;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == Q(0) ? out.erase(it) : std::next(it);
    return out;
}

Sparse commutator(const Sparse& x, const Sparse& y) {
    Sparse out = multiply(x, y);
    for (const auto& [ij, v] : multiply(y, x)) out[ij] -= v;
    for (auto it = out.begin(); it != out.end();)
        it = it->second == Q(0) ? out.erase(it) : std::next(it);
    return out;
}

Sparse transpose(const Sparse& x) {
    Sparse out;
    for (const auto& [ij, v] : x) out[{ij.second, ij.first}] = v;
    return out;
}

Sparse scale(Sparse x, Q s) {
    for (auto& [ij, v] : x) v *= s;
    return x;
}

// N with x == N * y, or absent if x is not a multiple of y.
std::optional<Q> ratio(const Sparse& x, const Sparse& y) {
    if (y.empty()) return std::nullopt;
    auto it = x.find(y.begin()->first);
    if (it == x.end()) return x.empty() ? std::optional<Q>(Q(0)) : std::nullopt;
    Q n = it->second / y.begin()->second;
    if (x.size() != y.size()) return std::nullopt;
    for (const auto& [ij, v] : y) {
        auto jt = x.find(ij);
        if (jt == x.end() || jt->second != n * v) return std::nullopt;
    }
    return n;
}

// Matrix realization: weights of the standard basis vectors and the invariant form J.
struct Realization {
    int dim = 0;
    std::vector<std::vector<int>> weight;
    Sparse J, J_inv;  // empty for gl
};

Realization realize(const RestrictedRootSystem& sys) {
    Realization r;
    const int n = sys.rank();
    const int amb = sys.ambient_dim();
    auto unit = [&](int k, int sign) {
        std::vector<int> w(static_cast<size_t>(amb), 0);
        w[static_cast<size_t>(k)] = sign;
        return w;
    };
    switch (sys.type().family) {
        case Family::A:
            r.dim = n + 1;
            for (int a = 0; a <= n; ++a) r.weight.push_back(unit(a, 1));
            break;
        case Family::B:
            r.dim = 2 * n + 1;
            r.weight.emplace_back(static_cast<size_t>(amb), 0);
            for (int k = 0; k < n; ++k) r.weight.push_back(unit(k, 1));
            for (int k = 0; k < n; ++k) r.weight.push_back(unit(k, -1));
            r.J[{0, 0}] = 1;
            for (int k = 1; k <= n; ++k) r.J[{k, n + k}] = r.J[{n + k, k}] = 1;
            r.J_inv = r.J;
            break;
        case Family::C:
        case Family::D:
            r.dim = 2 * n;
            for (int k = 0; k < n; ++k) r.weight.push_back(unit(k, 1));
            for (int k = 0; k < n; ++k) r.weight.push_back(unit(k, -1));
            for (int k = 0; k < n; ++k) {
                r.J[{k, n + k}] = 1;
                r.J[{n + k, k}] = sys.type().family == Family::C ? -1 : 1;
            }
            r.J_inv = sys.type().family == Family::C ? scale(r.J, -1) : r.J;
            break;
        case Family::BC:
            throw UnsupportedForm("BC has no split realization");
    }
    return r;
}

// Nonzero element of the root space for the ambient vector alpha.
Sparse root_space_vector(const Realization& r, const std::vector<int>& alpha) {
    for (int a = 0; a < r.dim; ++a)
        for (int b = 0; b < r.dim; ++b) {
            if (a == b) continue;
            bool match = true;
            for (size_t k = 0; k < alpha.size(); ++k)
                if (r.weight[static_cast<size_t>(a)][k] - r.weight[static_cast<size_t>(b)][k] != alpha[k]) match = false;
            if (!match) continue;
            Sparse x{{{a, b}, Q(1)}};
            if (!r.J.empty()) {
                // projection X -> (X - J^{-1} X^T J) / 2 onto the Lie algebra of the form
                Sparse y = multiply(multiply(r.J_inv, transpose(x)), r.J);
                for (const auto& [ij, v] : y) x[ij] -= v;
                for (auto it = x.begin(); it != x.end();)
                    it = it->second == Q(0) ? x.erase(it) : std::next(it);
            }
            if (x.empty()) continue;
            Q lead = x.begin()->second;
            if (lead < Q(0)) lead = -lead;
            return scale(std::move(x), Q(1) / lead);
        }
    throw StructureViolation("no root vector in the realization");
}

// alpha(H) for diagonal H, read off as H_aa - H_bb for any E_ab of weight alpha.
Q evaluate_root(const Realization& r, const std::vector<int>& alpha, const Sparse& h) {
    for (const auto& [ij, v] : h)
        if (ij.first != ij.second) throw StructureViolation("coroot is not diagonal");
    auto diag = [&](int i) {
        auto it = h.find({i, i});
        return it == h.end() ? Q(0) : it->second;
    };
    for (int a = 0; a < r.dim; ++a)
        for (int b = 0; b < r.dim; ++b) {
            bool match = a != b;
            for (size_t k = 0; match && k < alpha.size(); ++k)
                match = r.weight[static_cast<size_t>(a)][k] - r.weight[static_cast<size_t>(b)][k] == alpha[k];
            if (match) return diag(a) - diag(b);
        }
    throw StructureViolation("root without a matrix unit");
}

std::mutex cache_mutex;
std::map<RootSystemType, std::shared_ptr<const StructureTable>> cache;

}  // namespace

int string_length_below(const RestrictedRootSystem& sys, const Coords& alpha, const Coords& beta) {
    int p = 0;
    Coords cur = subtract(beta, alpha);
    while (sys.is_root(cur)) {
        ++p;
        cur = subtract(cur, alpha);
    }
    return p;
}

int StructureTable::signed_id(const Coords& c) const {
    auto it = ids_.find(c);
    if (it == ids_.end()) throw NotARoot(coords_to_string(c) + " is not a root");
    return it->second;
}

std::optional<int> StructureTable::constant(const Coords& alpha, const Coords& beta) const {
    const int a = signed_id(alpha), b = signed_id(beta);
    if (is_zero(add(alpha, beta)))
        throw CartanDirection("bracket of " + coords_to_string(alpha) + " with its negative");
    int n = table_[index(a, b)];
    if (n == 0) return std::nullopt;
    return n;
}

std::vector<std::tuple<Coords, Coords, int>> StructureTable::entries() const {
    std::vector<std::tuple<Coords, Coords, int>> out;
    for (int a = 0; a < 2 * m_; ++a)
        for (int b = 0; b < 2 * m_; ++b)
            if (int n = table_[index(a, b)]) out.emplace_back(roots_[static_cast<size_t>(a)], roots_[static_cast<size_t>(b)], n);
    return out;
}

std::shared_ptr<const StructureTable> build_constants(const RestrictedRootSystem& sys) {
    if (!sys.is_split() || sys.type().family == Family::BC)
        throw UnsupportedForm("structure constants are available for split forms of type A-D only");
    {
        std::lock_guard lock(cache_mutex);
        auto it = cache.find(sys.type());
        if (it != cache.end()) return it->second;
    }

    const Realization real = realize(sys);
    const int m = sys.size();
    auto t = std::make_shared<StructureTable>();
    t->type_ = sys.type();
    t->m_ = m;
    for (RootId a = 0; a < m; ++a) t->roots_.push_back(sys.coords(a));
    for (RootId a = 0; a < m; ++a) t->roots_.push_back(negate(sys.coords(a)));
    for (int i = 0; i < 2 * m; ++i) t->ids_[t->roots_[static_cast<size_t>(i)]] = i;

    // vec[a] = x_alpha, vec[m + a] = x_{-alpha}; the negative half is the image of the
    // positive half under the Chevalley involution fixed by x_{-psi} = c * x_psi^T.
    std::vector<Sparse> vec(static_cast<size_t>(2 * m));
    auto at = [&](int i) -> Sparse& { return vec[static_cast<size_t>(i)]; };
    for (RootId xi = 0; xi < m; ++xi) {
        const Coords& c = sys.coords(xi);
        if (sys.root(xi).height() == 1) {
            at(xi) = root_space_vector(real, sys.root(xi).ambient);
            Sparse xt = transpose(at(xi));
            Q val = evaluate_root(real, sys.root(xi).ambient, commutator(at(xi), xt));
            at(m + xi) = scale(std::move(xt), Q(2) / val);
            continue;
        }
        // extraspecial pair: alpha minimal with xi - alpha positive
        for (RootId a = 0; a < xi; ++a) {
            auto b = sys.find_positive(subtract(c, sys.coords(a)));
            if (!b) continue;
            int p = string_length_below(sys, sys.coords(a), sys.coords(*b));
            at(xi) = scale(commutator(at(a), at(*b)), Q(1) / (p + 1));
            at(m + xi) = scale(commutator(at(m + a), at(m + *b)), Q(-1) / (p + 1));
            break;
        }
        if (at(xi).empty()) throw StructureViolation("vanishing extraspecial bracket");
    }

    t->table_.assign(static_cast<size_t>(4 * m * m), 0);
    for (int a = 0; a < 2 * m; ++a)
        for (int b = 0; b < 2 * m; ++b) {
            const Coords s = add(t->roots_[static_cast<size_t>(a)], t->roots_[static_cast<size_t>(b)]);
            auto it = t->ids_.find(s);
            if (it == t->ids_.end()) continue;
            auto n = ratio(commutator(vec[static_cast<size_t>(a)], vec[static_cast<size_t>(b)]),
                           vec[static_cast<size_t>(it->second)]);
            if (!n || n->denominator() != 1 || n->numerator() == 0)
                throw StructureViolation("non-integral structure constant for " +
                                         coords_to_string(t->roots_[static_cast<size_t>(a)]) + ", " +
                                         coords_to_string(t->roots_[static_cast<size_t>(b)]));
            t->table_[t->index(a, b)] = static_cast<int>(n->numerator());
        }

    std::lock_guard lock(cache_mutex);
    return cache.emplace(sys.type(), std::move(t)).first->second;
}

RootVectorCombination bracket(const StructureTable& table, const RootVectorCombination& x,
                              const RootVectorCombination& y) {
    RootVectorCombination out;
    for (const auto& [a, ca] : x) {
        if (ca == 0) continue;
        for (const auto& [b, cb] : y) {
            if (cb == 0) continue;
            auto n = table.constant(a, b);
            if (n) out[add(a, b)] += ca * cb * (*n);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

void export_csv(const StructureTable& table, std::ostream& out) {
    auto join = [](const Coords& c) {
        std::string s;
        for (size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
        return s;
    };
    out << "alpha,beta,N\n";
    for (const auto& [a, b, n] : table.entries()) out << join(a) << ',' << join(b) << ',' << n << '\n';
}

}  // namespace pcascade
