#include <algorithm>
#include <map>

#include "ap3/poset.hpp"

namespace ap3 {

namespace {

using Signature = std::vector<std::size_t>;

// Colour refinement over the cover graph, run on both posets with a shared
// colour dictionary so colours are comparable across them.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine(const FinitePoset& a, const FinitePoset& b) {
    auto initial = [](const FinitePoset& p, std::size_t x) {
        return Signature{p.down_set(x).count(), p.up_set(x).count(), p.lower_covers(x).size(),
                         p.upper_covers(x).size()};
    };
    std::vector<std::size_t> ca(a.size()), cb(b.size());
    {
        std::map<Signature, std::size_t> dict;
        for (std::size_t x = 0; x < a.size(); ++x) ca[x] = dict.emplace(initial(a, x), dict.size()).first->second;
        for (std::size_t x = 0; x < b.size(); ++x) cb[x] = dict.emplace(initial(b, x), dict.size()).first->second;
    }
    auto signature = [](const FinitePoset& p, const std::vector<std::size_t>& col, std::size_t x) {
        Signature s{col[x]};
        Signature lo, hi;
        for (auto y : p.lower_covers(x)) lo.push_back(col[y]);
        for (auto y : p.upper_covers(x)) hi.push_back(col[y]);
        std::sort(lo.begin(), lo.end());
        std::sort(hi.begin(), hi.end());
        s.push_back(lo.size());
        s.insert(s.end(), lo.begin(), lo.end());
        s.insert(s.end(), hi.begin(), hi.end());
        return s;
    };
    std::size_t classes = 0;
    while (true) {
        std::map<Signature, std::size_t> dict;
        std::vector<std::size_t> na(a.size()), nb(b.size());
        for (std::size_t x = 0; x < a.size(); ++x) na[x] = dict.emplace(signature(a, ca, x), dict.size()).first->second;
        for (std::size_t x = 0; x < b.size(); ++x) nb[x] = dict.emplace(signature(b, cb, x), dict.size()).first->second;
        ca = std::move(na);
        cb = std::move(nb);
        if (dict.size() == classes) break;
        classes = dict.size();
    }
    return {ca, cb};
}

class IsoSearch {
public:
    IsoSearch(const FinitePoset& a, const FinitePoset& b, std::vector<std::size_t> ca, std::vector<std::size_t> cb,
              std::uint64_t budget)
        : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)), budget_(budget) {
        seq_ = a.linear_extension();
        // Most constrained colour classes first, keeping the linear-extension
        // order within ties so images of lower elements are fixed early.
        std::map<std::size_t, std::size_t> freq;
        for (auto c : ca_) ++freq[c];
        std::stable_sort(seq_.begin(), seq_.end(),
                         [&](std::size_t x, std::size_t y) { return freq[ca_[x]] < freq[ca_[y]]; });
        map_.assign(a.size(), SIZE_MAX);
        used_.assign(b.size(), false);
    }

    // 1 found, 0 exhausted, -1 budget hit.
    int run() { return step(0); }
    const std::vector<std::size_t>& map() const { return map_; }

private:
    int step(std::size_t depth) {
        if (depth == seq_.size()) return 1;
        std::size_t x = seq_[depth];
        for (std::size_t y = 0; y < b_.size(); ++y) {
            if (used_[y] || cb_[y] != ca_[x]) continue;
            if (++nodes_ > budget_) return -1;
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d) {
                std::size_t x2 = seq_[d], y2 = map_[x2];
                ok = a_.leq(x2, x) == b_.leq(y2, y) && a_.leq(x, x2) == b_.leq(y, y2);
            }
            if (!ok) continue;
            map_[x] = y;
            used_[y] = true;
            int r = step(depth + 1);
            if (r != 0) return r;
            used_[y] = false;
            map_[x] = SIZE_MAX;
        }
        return 0;
    }

    const FinitePoset& a_;
    const FinitePoset& b_;
    std::vector<std::size_t> ca_, cb_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::size_t> seq_, map_;
    std::vector<bool> used_;
};

}  // namespace

IsoResult are_isomorphic(const FinitePoset& a, const FinitePoset& b, std::uint64_t node_budget) {
    IsoResult res;
    if (a.size() != b.size() || covers(a).size() != covers(b).size()) {
        res.status = IsoStatus::not_isomorphic;
        return res;
    }
    auto [ca, cb] = refine(a, b);
    std::vector<std::size_t> ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) {
        res.status = IsoStatus::not_isomorphic;
        return res;
    }
    IsoSearch search(a, b, std::move(ca), std::move(cb), node_budget);
    int r = search.run();
    if (r == 1) {
        res.status = IsoStatus::isomorphic;
        res.witness = search.map();
    } else {
        res.status = r == 0 ? IsoStatus::not_isomorphic : IsoStatus::undecided;
    }
    return res;
}

}  // namespace ap3
