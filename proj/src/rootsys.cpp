#include "pcascade/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "pcascade/errors.hpp"

namespace pcascade {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::BC: return "BC";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    if (name == "A") return Family::A;
    if (name == "B") return Family::B;
    if (name == "C") return Family::C;
    if (name == "D") return Family::D;
    if (name == "BC") return Family::BC;
    throw UsageError("unknown family '" + std::string(name) + "'");
}

int min_rank(Family f) {
    switch (f) {
        case Family::A: return 1;
        case Family::B:
        case Family::BC: return 2;
        case Family::C: return 3;
        case Family::D: return 4;
    }
    return 1;
}

int Root::height() const {
    return std::accumulate(simple_coords.begin(), simple_coords.end(), 0);
}

int expected_positive_count(const RootSystemType& t) {
    const int n = t.rank;
    switch (t.family) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B:
        case Family::C: return n * n;
        case Family::D: return n * (n - 1);
        case Family::BC: return n * n + n;
    }
    return 0;
}

std::string coords_to_string(const Coords& c) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        os << c[i];
    }
    os << ']';
    return os.str();
}

Coords negate(Coords c) {
    for (auto& x : c) x = -x;
    return c;
}

Coords add(const Coords& a, const Coords& b) {
    Coords r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Coords subtract(const Coords& a, const Coords& b) {
    Coords r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool is_zero(const Coords& c) {
    return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

namespace {

using Vec = std::vector<int>;

Vec unit(int dim, int i, int scale = 1) {
    Vec v(static_cast<size_t>(dim), 0);
    v[static_cast<size_t>(i)] = scale;
    return v;
}

Vec vsum(const Vec& a, const Vec& b, int sb = 1) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + sb * b[i];
    return r;
}

int dot(const Vec& a, const Vec& b) {
    int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

struct Realization {
    int dim = 0;
    std::vector<Vec> simple;
    std::vector<Vec> positive;  // ambient vectors of all positive roots
};

// eps_i with i counted from 1
Vec eps(int n, int i) { return unit(n, i - 1); }

Realization realize(const RootSystemType& t) {
    Realization r;
    const int n = t.rank;
    switch (t.family) {
        case Family::A: {
            r.dim = n + 1;
            for (int i = 0; i < n; ++i) r.simple.push_back(vsum(unit(n + 1, i), unit(n + 1, i + 1), -1));
            for (int i = 0; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) r.positive.push_back(vsum(unit(n + 1, i), unit(n + 1, j), -1));
            break;
        }
        case Family::B:
        case Family::C:
        case Family::BC: {
            r.dim = n;
            if (t.family == Family::C)
                r.simple.push_back(unit(n, 0, 2));
            else
                r.simple.push_back(eps(n, 1));
            for (int k = 2; k <= n; ++k) r.simple.push_back(vsum(eps(n, k), eps(n, k - 1), -1));
            for (int j = 1; j <= n; ++j)
                for (int i = 1; i < j; ++i) {
                    r.positive.push_back(vsum(eps(n, j), eps(n, i), -1));
                    r.positive.push_back(vsum(eps(n, j), eps(n, i), 1));
                }
            for (int i = 1; i <= n; ++i) {
                if (t.family != Family::C) r.positive.push_back(eps(n, i));
                if (t.family != Family::B) r.positive.push_back(unit(n, i - 1, 2));
            }
            break;
        }
        case Family::D: {
            r.dim = n;
            r.simple.push_back(vsum(eps(n, 2), eps(n, 1), -1));
            r.simple.push_back(vsum(eps(n, 2), eps(n, 1), 1));
            for (int k = 3; k <= n; ++k) r.simple.push_back(vsum(eps(n, k), eps(n, k - 1), -1));
            for (int j = 1; j <= n; ++j)
                for (int i = 1; i < j; ++i) {
                    r.positive.push_back(vsum(eps(n, j), eps(n, i), -1));
                    r.positive.push_back(vsum(eps(n, j), eps(n, i), 1));
                }
            break;
        }
    }
    return r;
}

}  // namespace

bool RestrictedRootSystem::is_split() const {
    return std::all_of(mult_.begin(), mult_.end(), [](int m) { return m == 1; });
}

std::optional<RootId> RestrictedRootSystem::find_positive(const Coords& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

RootId RestrictedRootSystem::id_of(const Coords& v) const {
    auto id = find_positive(v);
    if (!id) throw NotARoot(coords_to_string(v) + " is not a positive root");
    return *id;
}

bool RestrictedRootSystem::is_root(const Coords& v) const {
    if (static_cast<int>(v.size()) != rank()) return false;
    return find_positive(v).has_value() || find_positive(negate(v)).has_value();
}

std::optional<Coords> RestrictedRootSystem::sum_root(const Coords& a, const Coords& b) const {
    Coords s = add(a, b);
    if (is_root(s)) return s;
    return std::nullopt;
}

std::optional<RootId> RestrictedRootSystem::sum_positive(RootId a, RootId b) const {
    int s = sum_table_[index2(a, b)];
    if (s < 0) return std::nullopt;
    return s;
}

int RestrictedRootSystem::pairing(const Coords& a, const Coords& b) const {
    int s = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) s += a[static_cast<size_t>(i)] * simple_gram_[i][j] * b[static_cast<size_t>(j)];
    return s;
}

std::vector<int> RestrictedRootSystem::ambient_of(const Coords& c) const {
    std::vector<int> v(static_cast<size_t>(ambient_dim_), 0);
    for (int i = 0; i < rank(); ++i)
        for (int k = 0; k < ambient_dim_; ++k)
            v[static_cast<size_t>(k)] += c[static_cast<size_t>(i)] * simple_[static_cast<size_t>(i)].ambient[static_cast<size_t>(k)];
    return v;
}

Coords RestrictedRootSystem::reflect(const Coords& beta, const Coords& alpha) const {
    if (!is_root(beta)) throw NotARoot(coords_to_string(beta) + " is not a root");
    if (!is_root(alpha)) throw NotARoot(coords_to_string(alpha) + " is not a root");
    const int bb = pairing(beta, beta);
    const int ab = pairing(alpha, beta);
    // Cartan integers are integral for any pair of roots
    if ((2 * ab) % bb != 0) throw StructureViolation("non-integral Cartan integer");
    const int k = 2 * ab / bb;
    Coords r(alpha.size());
    for (size_t i = 0; i < alpha.size(); ++i) r[i] = alpha[i] - k * beta[i];
    return r;
}

RestrictedRootSystem build_system(const RootSystemType& type, const MultiplicityPreset& preset) {
    if (type.rank < min_rank(type.family) || type.rank > 30) {
        throw InvalidRank("rank " + std::to_string(type.rank) + " is out of range for family " +
                          std::string(family_name(type.family)));
    }
    const Realization real = realize(type);
    const int n = type.rank;

    RestrictedRootSystem sys;
    sys.type_ = type;
    sys.ambient_dim_ = real.dim;
    for (int i = 0; i < n; ++i) sys.simple_.push_back(Root{unit(n, i), real.simple[static_cast<size_t>(i)]});

    // Every positive root is reached from a simple root by adding simple roots one at a time.
    std::map<Vec, bool> candidates;
    for (const auto& v : real.positive) candidates[v] = false;
    std::map<Vec, Coords> found;
    std::deque<std::pair<Vec, Coords>> queue;
    for (int i = 0; i < n; ++i) {
        found[real.simple[static_cast<size_t>(i)]] = unit(n, i);
        queue.emplace_back(real.simple[static_cast<size_t>(i)], unit(n, i));
    }
    while (!queue.empty()) {
        auto [amb, co] = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            Vec next = vsum(amb, real.simple[static_cast<size_t>(i)]);
            if (!candidates.count(next) || found.count(next)) continue;
            Coords nc = co;
            nc[static_cast<size_t>(i)] += 1;
            found[next] = nc;
            queue.emplace_back(next, nc);
        }
    }
    if (found.size() != real.positive.size() ||
        static_cast<int>(found.size()) != expected_positive_count(type)) {
        throw StructureViolation("positive root enumeration incomplete");
    }
    for (const auto& [amb, co] : found) sys.positive_.push_back(Root{co, amb});
    std::sort(sys.positive_.begin(), sys.positive_.end(), [](const Root& a, const Root& b) {
        if (a.height() != b.height()) return a.height() < b.height();
        return a.simple_coords < b.simple_coords;
    });
    for (size_t i = 0; i < sys.positive_.size(); ++i)
        sys.index_[sys.positive_[i].simple_coords] = static_cast<RootId>(i);

    sys.simple_gram_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            sys.simple_gram_[i][j] = dot(real.simple[static_cast<size_t>(i)], real.simple[static_cast<size_t>(j)]);

    const size_t m = sys.positive_.size();
    sys.gram_ids_.assign(m * m, 0);
    sys.sum_table_.assign(m * m, -1);
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) {
            sys.gram_ids_[a * m + b] = dot(sys.positive_[a].ambient, sys.positive_[b].ambient);
            auto s = sys.index_.find(add(sys.positive_[a].simple_coords, sys.positive_[b].simple_coords));
            if (s != sys.index_.end()) sys.sum_table_[a * m + b] = s->second;
        }

    sys.nonmult_.resize(m);
    for (size_t a = 0; a < m; ++a) {
        Coords twice = sys.positive_[a].simple_coords;
        for (auto& x : twice) x *= 2;
        sys.nonmult_[a] = !sys.index_.count(twice);
    }

    sys.mult_.assign(m, 1);
    if (preset.kind == MultiplicityPreset::Kind::user) {
        for (size_t a = 0; a < m; ++a) {
            auto it = preset.user.find(sys.positive_[a].simple_coords);
            if (it == preset.user.end())
                throw IncompleteMultiplicity("no multiplicity for root " +
                                             coords_to_string(sys.positive_[a].simple_coords));
            if (it->second < 1)
                throw InvalidMultiplicity("multiplicity must be positive at " + coords_to_string(it->first));
            sys.mult_[a] = it->second;
        }
        // Root space dimensions are Weyl invariant; check against the simple reflections.
        for (size_t a = 0; a < m; ++a)
            for (int i = 0; i < n; ++i) {
                Coords img = sys.reflect(unit(n, i), sys.positive_[a].simple_coords);
                auto pos = sys.find_positive(img);
                if (!pos) pos = sys.find_positive(negate(img));
                if (sys.mult_[static_cast<size_t>(*pos)] != sys.mult_[a])
                    throw InvalidMultiplicity("multiplicity is not Weyl invariant at " +
                                              coords_to_string(sys.positive_[a].simple_coords));
            }
    }
    return sys;
}

}  // namespace pcascade
