#include "ap3/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace ap3 {

FinitePoset FinitePoset::from_relation(std::size_t size, const std::function<bool(std::size_t, std::size_t)>& leq,
                                       std::vector<std::string> labels) {
    FinitePoset p;
    p.up_.assign(size, ElementSet(size));
    p.down_.assign(size, ElementSet(size));
    for (std::size_t a = 0; a < size; ++a) {
        if (!leq(a, a)) throw DomainError("order relation is not reflexive");
        for (std::size_t b = 0; b < size; ++b) {
            if (a != b && leq(a, b)) {
                p.up_[a].set(b);
                p.down_[b].set(a);
            }
        }
        p.up_[a].set(a);
        p.down_[a].set(a);
    }
    for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = p.up_[a].find_first(); b != ElementSet::npos; b = p.up_[a].find_next(b)) {
            if (b != a && p.up_[b][a]) throw DomainError("order relation is not antisymmetric");
            if (!p.up_[b].is_subset_of(p.up_[a])) throw DomainError("order relation is not transitive");
        }
    }
    p.finish(std::move(labels));

    // Transitive reduction: scanning the strict up-set in linear-extension
    // order, the first surviving element is a cover and shadows its own up-set.
    std::vector<std::size_t> pos(size);
    for (std::size_t i = 0; i < size; ++i) pos[p.order_[i]] = i;
    p.upper_.assign(size, {});
    p.lower_.assign(size, {});
    for (std::size_t x = 0; x < size; ++x) {
        ElementSet cand = p.up_[x];
        cand.reset(x);
        for (std::size_t i = pos[x] + 1; i < size && cand.any(); ++i) {
            std::size_t y = p.order_[i];
            if (!cand[y]) continue;
            p.upper_[x].push_back(y);
            p.lower_[y].push_back(x);
            cand -= p.up_[y];
        }
    }
    for (auto& v : p.upper_) std::sort(v.begin(), v.end());
    for (auto& v : p.lower_) std::sort(v.begin(), v.end());
    return p;
}

FinitePoset FinitePoset::from_covers(std::size_t size, const std::vector<Cover>& edges, std::vector<std::string> labels) {
    std::vector<std::vector<std::size_t>> succ(size);
    std::vector<std::size_t> indeg(size, 0);
    for (auto [a, b] : edges) {
        if (a >= size || b >= size) throw DomainError("cover edge out of range");
        if (a == b) throw DomainError("cover edge is a loop");
        succ[a].push_back(b);
    }
    for (auto& s : succ) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        for (auto b : s) ++indeg[b];
    }
    std::vector<std::size_t> topo;
    topo.reserve(size);
    for (std::size_t x = 0; x < size; ++x)
        if (indeg[x] == 0) topo.push_back(x);
    for (std::size_t h = 0; h < topo.size(); ++h)
        for (auto b : succ[topo[h]])
            if (--indeg[b] == 0) topo.push_back(b);
    if (topo.size() != size) throw DomainError("cover edges contain a cycle");

    FinitePoset p;
    p.up_.assign(size, ElementSet(size));
    p.down_.assign(size, ElementSet(size));
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        p.up_[*it].set(*it);
        for (auto b : succ[*it]) p.up_[*it] |= p.up_[b];
    }
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = p.up_[a].find_first(); b != ElementSet::npos; b = p.up_[a].find_next(b))
            p.down_[b].set(a);

    p.upper_.assign(size, {});
    p.lower_.assign(size, {});
    for (std::size_t a = 0; a < size; ++a) {
        for (auto c : succ[a]) {
            bool redundant = std::any_of(succ[a].begin(), succ[a].end(),
                                         [&](std::size_t b) { return b != c && p.up_[b][c]; });
            if (!redundant) {
                p.upper_[a].push_back(c);
                p.lower_[c].push_back(a);
            }
        }
    }
    for (auto& v : p.lower_) std::sort(v.begin(), v.end());
    p.finish(std::move(labels));
    return p;
}

void FinitePoset::finish(std::vector<std::string> labels) {
    const std::size_t n = up_.size();
    if (!labels.empty() && labels.size() != n) throw DomainError("label count differs from poset size");
    labels_ = std::move(labels);
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<std::size_t> depth(n);
    for (std::size_t x = 0; x < n; ++x) depth[x] = down_[x].count();
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return depth[a] < depth[b]; });
}

std::string FinitePoset::label(std::size_t x) const {
    return labels_.empty() ? std::to_string(x) : labels_[x];
}

std::vector<std::size_t> FinitePoset::minimal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < size(); ++x)
        if (lower_[x].empty()) out.push_back(x);
    return out;
}

std::vector<std::size_t> FinitePoset::maximal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < size(); ++x)
        if (upper_[x].empty()) out.push_back(x);
    return out;
}

std::vector<Cover> covers(const FinitePoset& p) {
    std::vector<Cover> out;
    for (std::size_t x = 0; x < p.size(); ++x)
        for (auto y : p.upper_covers(x)) out.emplace_back(x, y);
    std::sort(out.begin(), out.end());
    return out;
}

FinitePoset induced_subposet(const FinitePoset& p, const std::vector<std::size_t>& elements) {
    std::vector<std::string> labels;
    for (auto e : elements) labels.push_back(p.label(e));
    return FinitePoset::from_relation(
        elements.size(), [&](std::size_t a, std::size_t b) { return p.leq(elements[a], elements[b]); },
        std::move(labels));
}

std::uint64_t for_each_ideal(const FinitePoset& p, const std::function<void(const ElementSet&)>& visit,
                             const Budget& budget) {
    const auto& order = p.linear_extension();
    const std::size_t n = p.size();
    ElementSet current(n);
    std::uint64_t count = 0;
    // Iterative DFS: state[pos] is 0 (try exclude), 1 (try include), 2 (done).
    std::vector<int> state(n + 1, 0);
    std::size_t pos = 0;
    while (true) {
        if (pos == n) {
            ++count;
            if (!budget.force && count > budget.max_items)
                throw BudgetExceeded("order-ideal enumeration exceeded budget of " + std::to_string(budget.max_items));
            visit(current);
            if (pos == 0) return count;
            --pos;
            continue;
        }
        std::size_t x = order[pos];
        if (state[pos] == 0) {
            state[pos] = 1;
            current.reset(x);
            state[pos + 1] = 0;
            ++pos;
        } else if (state[pos] == 1) {
            state[pos] = 2;
            const auto& lc = p.lower_covers(x);
            bool includable = std::all_of(lc.begin(), lc.end(), [&](std::size_t y) { return current[y]; });
            if (includable) {
                current.set(x);
                state[pos + 1] = 0;
                ++pos;
            }
        } else {
            current.reset(x);
            state[pos] = 0;
            if (pos == 0) return count;
            --pos;
        }
    }
}

IdealFamily order_ideals(std::shared_ptr<const FinitePoset> p, const Budget& budget) {
    IdealFamily fam{p, {}};
    for_each_ideal(*p, [&](const ElementSet& s) { fam.ideals.push_back(s); }, budget);
    return fam;
}

bool is_ideal(const FinitePoset& p, const ElementSet& s) {
    for (std::size_t x = s.find_first(); x != ElementSet::npos; x = s.find_next(x))
        if (!p.down_set(x).is_subset_of(s)) return false;
    return true;
}

bool is_antichain(const FinitePoset& p, const ElementSet& s) {
    for (std::size_t x = s.find_first(); x != ElementSet::npos; x = s.find_next(x))
        for (std::size_t y = s.find_next(x); y != ElementSet::npos; y = s.find_next(y))
            if (p.comparable(x, y)) return false;
    return true;
}

ElementSet ideal_to_antichain(const FinitePoset& p, const ElementSet& ideal) {
    if (ideal.size() != p.size()) throw DomainError("ideal belongs to a different poset");
    ElementSet out(p.size());
    for (std::size_t x = ideal.find_first(); x != ElementSet::npos; x = ideal.find_next(x)) {
        const auto& uc = p.upper_covers(x);
        if (std::none_of(uc.begin(), uc.end(), [&](std::size_t y) { return ideal[y]; })) out.set(x);
    }
    return out;
}

ElementSet antichain_to_ideal(const FinitePoset& p, const ElementSet& antichain) {
    if (antichain.size() != p.size()) throw DomainError("antichain belongs to a different poset");
    if (!is_antichain(p, antichain)) throw DomainError("input contains comparable elements");
    ElementSet out(p.size());
    for (std::size_t x = antichain.find_first(); x != ElementSet::npos; x = antichain.find_next(x))
        out |= p.down_set(x);
    return out;
}

std::size_t covered_count(const FinitePoset& p, const ElementSet& ideal) {
    return ideal_to_antichain(p, ideal).count();
}

FinitePoset lattice_of_ideals(const FinitePoset& p, const Budget& budget, std::vector<ElementSet>* ideals_out) {
    std::vector<ElementSet> ideals;
    for_each_ideal(p, [&](const ElementSet& s) { ideals.push_back(s); }, budget);
    std::map<ElementSet, std::size_t> index;
    for (std::size_t i = 0; i < ideals.size(); ++i) index.emplace(ideals[i], i);
    std::vector<Cover> edges;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        const auto& I = ideals[i];
        std::string lab = "{";
        for (std::size_t x = I.find_first(); x != ElementSet::npos; x = I.find_next(x)) {
            if (lab.size() > 1) lab += ",";
            lab += p.label(x);
        }
        labels.push_back(lab + "}");
        for (std::size_t x = 0; x < p.size(); ++x) {
            if (I[x]) continue;
            const auto& lc = p.lower_covers(x);
            if (!std::all_of(lc.begin(), lc.end(), [&](std::size_t y) { return I[y]; })) continue;
            ElementSet J = I;
            J.set(x);
            edges.emplace_back(i, index.at(J));
        }
    }
    auto lat = FinitePoset::from_covers(ideals.size(), edges, std::move(labels));
    if (ideals_out) *ideals_out = std::move(ideals);
    return lat;
}

bool is_lattice(const FinitePoset& p, std::size_t samples) {
    const std::size_t n = p.size();
    if (n == 0) return false;
    const auto& order = p.linear_extension();
    // Re-index in linear-extension coordinates so that the least element of a
    // set is its first bit (for up-sets) and the greatest is the first bit of
    // the reversed down-set.
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<ElementSet> up(n, ElementSet(n)), down(n, ElementSet(n));
    for (std::size_t x = 0; x < n; ++x) {
        const auto& u = p.up_set(x);
        for (std::size_t y = u.find_first(); y != ElementSet::npos; y = u.find_next(y)) {
            up[x].set(pos[y]);
            down[y].set(n - 1 - pos[x]);
        }
    }
    ElementSet s(n);
    auto pair_ok = [&](std::size_t x, std::size_t y) {
        s = up[x];
        s &= up[y];
        std::size_t f = s.find_first();
        if (f == ElementSet::npos || !s.is_subset_of(up[order[f]])) return false;
        s = down[x];
        s &= down[y];
        f = s.find_first();
        if (f == ElementSet::npos || !s.is_subset_of(down[order[n - 1 - f]])) return false;
        return true;
    };
    if (n <= kExhaustiveLatticeCheck) {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = x + 1; y < n; ++y)
                if (!pair_ok(x, y)) return false;
        return true;
    }
    std::mt19937_64 rng(0x5eedULL + n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t t = 0; t < samples; ++t)
        if (!pair_ok(pick(rng), pick(rng))) return false;
    return p.minimal_elements().size() == 1 && p.maximal_elements().size() == 1;
}

std::vector<std::size_t> join_irreducible_indices(const FinitePoset& lattice) {
    if (!is_lattice(lattice)) throw DomainError("join_irreducibles requires a lattice");
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < lattice.size(); ++x)
        if (lattice.lower_covers(x).size() == 1) out.push_back(x);
    return out;
}

FinitePoset join_irreducibles(const FinitePoset& lattice) {
    return induced_subposet(lattice, join_irreducible_indices(lattice));
}

std::optional<std::vector<long long>> height_rank(const FinitePoset& p) {
    std::vector<long long> h(p.size(), 0);
    for (auto x : p.linear_extension())
        for (auto y : p.lower_covers(x)) h[x] = std::max(h[x], h[y] + 1);
    for (std::size_t x = 0; x < p.size(); ++x)
        for (auto y : p.lower_covers(x))
            if (h[x] != h[y] + 1) return std::nullopt;
    for (auto x : p.minimal_elements())
        if (h[x] != 0) return std::nullopt;
    return h;
}

RankPolynomial rank_polynomial(const FinitePoset& p, const std::function<long long(std::size_t)>& rank) {
    RankPolynomial out;
    for (std::size_t x = 0; x < p.size(); ++x) {
        long long r = rank(x);
        if (r < 0) throw DomainError("negative rank");
        out.add_term(static_cast<std::size_t>(r));
    }
    return out;
}

FinitePoset disjoint_sum(const FinitePoset& a, const FinitePoset& b) {
    std::vector<Cover> edges = covers(a);
    for (auto [x, y] : covers(b)) edges.emplace_back(x + a.size(), y + a.size());
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < a.size(); ++x) labels.push_back(a.label(x));
    for (std::size_t x = 0; x < b.size(); ++x) labels.push_back(b.label(x));
    return FinitePoset::from_covers(a.size() + b.size(), edges, std::move(labels));
}

FinitePoset direct_product(const FinitePoset& a, const FinitePoset& b) {
    const std::size_t nb = b.size();
    std::vector<Cover> edges;
    for (auto [x, y] : covers(a))
        for (std::size_t j = 0; j < nb; ++j) edges.emplace_back(x * nb + j, y * nb + j);
    for (auto [x, y] : covers(b))
        for (std::size_t i = 0; i < a.size(); ++i) edges.emplace_back(i * nb + x, i * nb + y);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < nb; ++j) labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
    return FinitePoset::from_covers(a.size() * nb, edges, std::move(labels));
}

bool is_order_isomorphism(const FinitePoset& a, const FinitePoset& b, const std::vector<std::size_t>& map) {
    if (a.size() != b.size() || map.size() != a.size()) return false;
    std::vector<bool> hit(b.size(), false);
    for (auto y : map) {
        if (y >= b.size() || hit[y]) return false;
        hit[y] = true;
    }
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < a.size(); ++y)
            if (a.leq(x, y) != b.leq(map[x], map[y])) return false;
    return true;
}

}  // namespace ap3
