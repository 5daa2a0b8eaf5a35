#include "ap3/verify.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <ostream>
#include <random>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "ap3/formulas.hpp"
#include "ap3/kn.hpp"
#include "ap3/mn.hpp"
#include "ap3/pn_posets.hpp"
#include "ap3/poset.hpp"
#include "ap3/triples.hpp"

namespace ap3 {

const char* to_string(ReportStatus s) {
    switch (s) {
        case ReportStatus::pass: return "pass";
        case ReportStatus::fail: return "fail";
        case ReportStatus::skipped: return "skipped";
    }
    return "?";
}

VerificationReport compare_values(std::string quantity, int n, const BigInt& closed, const BigInt& enumerated) {
    return {std::move(quantity), n, closed.str(), enumerated.str(),
            closed == enumerated ? ReportStatus::pass : ReportStatus::fail, {}};
}

VerificationReport compare_values(std::string quantity, int n, const RankPolynomial& closed,
                                  const RankPolynomial& enumerated) {
    return {std::move(quantity), n, closed.to_string(), enumerated.to_string(),
            closed == enumerated ? ReportStatus::pass : ReportStatus::fail, {}};
}

VerificationReport counterexamples(std::string quantity, int n, std::uint64_t found, std::string note) {
    return {std::move(quantity), n, "0", std::to_string(found), found == 0 ? ReportStatus::pass : ReportStatus::fail,
            std::move(note)};
}

VerificationReport skipped(std::string quantity, int n, std::string why) {
    return {std::move(quantity), n, "", "", ReportStatus::skipped, std::move(why)};
}

namespace {

using TableauSet = std::unordered_set<Tableau, TableauHash>;
using TableauIndex = std::unordered_map<Tableau, std::size_t, TableauHash>;

TableauIndex index_of(const std::vector<Tableau>& els) {
    TableauIndex idx;
    idx.reserve(els.size());
    for (std::size_t i = 0; i < els.size(); ++i) idx.emplace(els[i], i);
    return idx;
}

// Counts (x, y) with x <= y in one order but not the other.
template <typename LeqA, typename LeqB>
std::uint64_t order_mismatches(std::size_t size, LeqA&& leq_a, LeqB&& leq_b) {
    std::uint64_t bad = 0;
    for (std::size_t x = 0; x < size; ++x)
        for (std::size_t y = 0; y < size; ++y)
            if (leq_a(x, y) != leq_b(x, y)) ++bad;
    return bad;
}

// Number of images that fall outside `target` or collide, plus target
// elements that are missed: zero exactly for a bijection onto `target`.
std::uint64_t bijection_defects(const std::vector<Tableau>& images, const std::vector<Tableau>& target) {
    TableauIndex idx = index_of(target);
    std::vector<bool> hit(target.size(), false);
    std::uint64_t bad = 0;
    for (const auto& t : images) {
        auto it = idx.find(t);
        if (it == idx.end() || hit[it->second]) {
            ++bad;
            continue;
        }
        hit[it->second] = true;
    }
    return bad + static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), false));
}

FinitePoset tableau_poset(const std::vector<Tableau>& els) {
    return FinitePoset::from_relation(els.size(), [&](std::size_t x, std::size_t y) { return els[x].leq(els[y]); });
}

// Index tables for join and meet over an explicit element list.
struct OperationTables {
    std::size_t size = 0;
    std::vector<std::uint32_t> join, meet;
    std::uint64_t missing = 0;  // joins/meets that left the set
};

OperationTables operation_tables(const std::vector<Tableau>& els) {
    OperationTables t;
    t.size = els.size();
    t.join.resize(t.size * t.size);
    t.meet.resize(t.size * t.size);
    TableauIndex idx = index_of(els);
    for (std::size_t x = 0; x < t.size; ++x) {
        for (std::size_t y = 0; y < t.size; ++y) {
            auto j = idx.find(entrywise_max(els[x], els[y]));
            auto m = idx.find(entrywise_min(els[x], els[y]));
            if (j == idx.end() || m == idx.end()) {
                ++t.missing;
                j = m = idx.find(els[x]);
            }
            t.join[x * t.size + y] = static_cast<std::uint32_t>(j->second);
            t.meet[x * t.size + y] = static_cast<std::uint32_t>(m->second);
        }
    }
    return t;
}

// Counterexamples to the distributive-lattice laws, all pairs and triples.
std::uint64_t exhaustive_law_failures(const OperationTables& t) {
    const std::size_t n = t.size;
    const auto* J = t.join.data();
    const auto* M = t.meet.data();
    std::uint64_t bad = t.missing;
    for (std::size_t x = 0; x < n; ++x) {
        if (J[x * n + x] != x || M[x * n + x] != x) ++bad;
        for (std::size_t y = 0; y < n; ++y) {
            const std::uint32_t jxy = J[x * n + y], mxy = M[x * n + y];
            if (jxy != J[y * n + x] || mxy != M[y * n + x]) ++bad;
            if (J[x * n + mxy] != x || M[x * n + jxy] != x) ++bad;  // absorption
            const auto* Jy = J + y * n;
            const auto* My = M + y * n;
            const auto* Jx = J + x * n;
            const auto* Mx = M + x * n;
            const auto* Jjxy = J + static_cast<std::size_t>(jxy) * n;
            const auto* Mmxy = M + static_cast<std::size_t>(mxy) * n;
            const auto* Jmxy = J + static_cast<std::size_t>(mxy) * n;
            std::uint64_t local = 0;
            for (std::size_t z = 0; z < n; ++z) {
                local += Jjxy[z] != Jx[Jy[z]];     // associativity of join
                local += Mmxy[z] != Mx[My[z]];     // associativity of meet
                local += Mx[Jy[z]] != Jmxy[Mx[z]];  // distributivity
            }
            bad += local;
        }
    }
    return bad;
}

// Counterexamples to the laws on random triples drawn by `draw`, with
// membership of every join/meet checked by `member`.
template <typename Draw, typename Member>
std::uint64_t sampled_law_failures(std::uint64_t samples, Draw&& draw, Member&& member) {
    std::uint64_t bad = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        Tableau x = draw(), y = draw(), z = draw();
        Tableau jxy = entrywise_max(x, y), mxy = entrywise_min(x, y);
        Tableau jyz = entrywise_max(y, z), myz = entrywise_min(y, z);
        if (!member(jxy) || !member(mxy) || !member(jyz) || !member(myz)) ++bad;
        if (!(jxy == entrywise_max(y, x)) || !(mxy == entrywise_min(y, x))) ++bad;
        if (!(entrywise_max(x, mxy) == x) || !(entrywise_min(x, jxy) == x)) ++bad;
        if (!(entrywise_max(jxy, z) == entrywise_max(x, jyz))) ++bad;
        if (!(entrywise_min(mxy, z) == entrywise_min(x, myz))) ++bad;
        Tableau lhs = entrywise_min(x, jyz);
        if (!member(lhs) || !(lhs == entrywise_max(mxy, entrywise_min(x, z)))) ++bad;
    }
    return bad;
}

RankPolynomial entry_sum_polynomial(const std::vector<Tableau>& els) {
    if (els.empty()) return RankPolynomial{};
    long long base = els.front().entry_sum();
    for (const auto& t : els) base = std::min(base, t.entry_sum());
    RankPolynomial p;
    for (const auto& t : els) p.add_term(static_cast<std::size_t>(t.entry_sum() - base));
    return p;
}

// Packs a tableau with entries below 8 into 4-bit fields whose top bit is a
// guard, so that x <= y entrywise iff ((y | H) - x) & H == H.
struct PackedTableau {
    std::uint64_t bits = 0;
};

constexpr std::uint64_t guard_mask(std::size_t cells) {
    std::uint64_t h = 0;
    for (std::size_t c = 0; c < cells; ++c) h |= std::uint64_t{8} << (4 * c);
    return h;
}

PackedTableau pack(const Tableau& t) {
    PackedTableau p;
    const auto& e = t.entries();
    for (std::size_t c = 0; c < e.size(); ++c) p.bits |= static_cast<std::uint64_t>(e[c]) << (4 * c);
    return p;
}

}  // namespace

namespace checks {

Reports Pn_ideals(int n, const Budget& budget) {
    FinitePoset p = build_Pn(n);
    std::uint64_t count = 0, at_max = 0;
    std::size_t best = 0;
    for_each_ideal(
        p,
        [&](const ElementSet& ideal) {
            ++count;
            std::size_t c = covered_count(p, ideal);
            if (c > best) {
                best = c;
                at_max = 1;
            } else if (c == best) {
                ++at_max;
            }
        },
        budget);
    return {compare_values("f: order ideals of P_n", n, f_closed(n), count),
            compare_values("sigma: largest antichain of P_n", n, sigma_closed(n), best),
            compare_values("g: largest antichains of P_n", n, g_closed(n), at_max)};
}

Reports valid_subsets(int n, const Budget& budget) {
    auto stats = max_valid_stats(n, budget);
    return {compare_values("f: valid subsets", n, f_closed(n), count_valid(n, budget)),
            compare_values("sigma: largest valid subset", n, sigma_closed(n), stats.sigma),
            compare_values("g: largest valid subsets", n, g_closed(n), stats.g)};
}

Reports consistency(int n) {
    auto ts = all_triples(n);
    std::uint64_t bad = 0, pairs = 0;
    for (std::size_t x = 0; x < ts.size(); ++x) {
        for (std::size_t y = x + 1; y < ts.size(); ++y) {
            ++pairs;
            bool oracle = realize(TripleSystem(n, {ts[x], ts[y]})).has_value();
            if (oracle != is_consistent(ts[x], ts[y])) ++bad;
        }
    }
    return {counterexamples("consistency criterion vs realization oracle", n, bad,
                            std::to_string(pairs) + " pairs")};
}

Reports Mn(int n, const Budget& budget) {
    auto st = Mn_statistics(n, budget);
    Reports r{compare_values("f: |M_n| enumerated", n, f_closed(n), st.count),
              compare_values("f: |M_n| transfer matrix", n, f_closed(n), count_Mn_transfer(n)),
              compare_values("F(M_n,q)", n, F_Mn(n), st.rank_polynomial),
              counterexamples("column bound on reducible entries", n, st.column_bound_violations)};
    if (n >= 2) {
        r.push_back(compare_values("sigma: max reducible entries in M_n", n, sigma_closed(n), st.max_reducible));
        r.push_back(compare_values("g: M_n tableaux at the reducible bound", n, g_closed(n), st.at_bound));
    }
    return r;
}

Reports Mn_profile(int n) {
    auto pr = Mn_reducible_profile(n);
    return {compare_values("sigma: max reducible entries in M_n (column DP)", n, sigma_closed(n), pr.max_reducible),
            compare_values("g: M_n tableaux at the reducible bound (column DP)", n, g_closed(n), pr.at_max)};
}

Reports Kn(int n, const Budget& budget) {
    Reports r;
    auto elements = enumerate_Kn_product(n);
    r.push_back(compare_values("g: |K_n| by product construction", n, g_closed(n), elements.size()));
    if (n >= 3) r.push_back(compare_values("F(K_n,q)", n, F_Kn(n), entry_sum_polynomial(elements)));

    std::uint64_t bad = 0;
    for (const auto& t : elements) {
        if (!in_Kn(t, n)) ++bad;
        auto [l, rt] = split(t, n);
        if (!(glue(l, rt, n) == t)) ++bad;
    }
    r.push_back(counterexamples("split/glue round trip on K_n", n, bad));

    auto l = enumerate_KnL(n);
    BigInt l1 = 0, l2 = 0;
    for (const auto& t : l) (corner_label(t) == CornerLabel::one ? l1 : l2) += 1;
    BigInt split_count = l1 * enumerate_KnR(n, CornerLabel::one).size() + l2 * enumerate_KnR(n, CornerLabel::two).size();
    r.push_back(compare_values("|K_n| = |L1||R1| + |L2||R2|", n, split_count, elements.size()));

    if (n <= 8) {
        std::vector<Tableau> filtered;
        std::uint64_t disagreements = 0;
        for_each_Mn(
            n,
            [&](const Tableau& t) {
                bool a = in_Kn(t, n);
                if (a != in_Kn_by_reducibles(t, n)) ++disagreements;
                if (a) filtered.push_back(t);
            },
            budget);
        std::sort(filtered.begin(), filtered.end());
        r.push_back(counterexamples("K_n characterization vs reducible-count definition", n, disagreements));
        r.push_back(counterexamples("K_n filter enumeration vs product enumeration", n,
                                    filtered == elements ? 0 : std::max<std::uint64_t>(1, bijection_defects(filtered, elements))));
    }
    return r;
}

Reports Kn_even_parts(int m) {
    return {compare_values("F(K_2m,q) closed product vs two-part sum", 2 * m, F_Kn(2 * m), F_Kn_even_parts(m))};
}

Reports phi_isomorphism(int n) {
    auto src = Phin_elements(n);
    auto dst = Pn_elements(n);
    std::uint64_t bad = 0;
    std::vector<PnElement> img;
    for (const auto& e : src) {
        PnElement p = phi(e, n);
        if (!is_Pn_element(p, n) || !(phi_inverse(p, n) == e)) ++bad;
        img.push_back(p);
    }
    auto sorted = img;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != dst) ++bad;
    bad += order_mismatches(
        src.size(), [&](std::size_t x, std::size_t y) { return Phin_leq(src[x], src[y]); },
        [&](std::size_t x, std::size_t y) { return Pn_leq(img[x], img[y]); });
    return {counterexamples("phi: Phi_n -> P_n order isomorphism", n, bad)};
}

Reports psi_isomorphism(int n, const Budget& budget) {
    std::vector<Tableau> q;
    for_each_Mn(
        n,
        [&](const Tableau& t) {
            if (reducible_entries(t, n).size() == 1) q.push_back(t);
        },
        budget);
    std::sort(q.begin(), q.end());
    auto src = Phin_elements(n);
    std::vector<Tableau> img;
    std::uint64_t bad = 0;
    for (const auto& e : src) {
        Tableau t = psi(e, n);
        if (!has_unique_reducible_at(t, n, e.a, e.b)) ++bad;
        img.push_back(std::move(t));
    }
    bad += bijection_defects(img, q);
    bad += order_mismatches(
        src.size(), [&](std::size_t x, std::size_t y) { return Phin_leq(src[x], src[y]); },
        [&](std::size_t x, std::size_t y) { return img[x].leq(img[y]); });
    Reports r{counterexamples("psi: Phi_n -> Q_n order isomorphism", n, bad),
              compare_values("|Q_n| = sum C(alpha+1,2)", n, count_Qn(n), q.size())};
    return r;
}

Reports ideal_lattice_isomorphism(int n, const Budget& budget) {
    if (n > 7) throw DomainError("ideal_lattice_isomorphism packs tableaux for n <= 7 only");
    FinitePoset p = build_Pn(n);
    auto pts = Pn_elements(n);
    std::vector<Tableau> generators;
    for (const auto& x : pts) generators.push_back(psi(phi_inverse(x, n), n));
    const Tableau bottom = minimal_tableau(n);

    std::vector<std::uint64_t> ideals;
    std::vector<Tableau> images;
    for_each_ideal(
        p,
        [&](const ElementSet& ideal) {
            std::uint64_t bits = 0;
            Tableau t = bottom;
            for (std::size_t x = ideal.find_first(); x != ElementSet::npos; x = ideal.find_next(x)) {
                bits |= std::uint64_t{1} << x;
                t = entrywise_max(t, generators[x]);
            }
            ideals.push_back(bits);
            images.push_back(std::move(t));
        },
        budget);

    std::uint64_t bad = bijection_defects(images, enumerate_Mn(n, budget));
    const std::size_t cells = bottom.entries().size();
    const std::uint64_t H = guard_mask(cells);
    std::vector<std::uint64_t> packed;
    packed.reserve(images.size());
    for (const auto& t : images) packed.push_back(pack(t).bits);
    const std::size_t N = ideals.size();
    for (std::size_t x = 0; x < N; ++x) {
        const std::uint64_t ix = ideals[x], tx = packed[x];
        std::uint64_t local = 0;
        for (std::size_t y = 0; y < N; ++y) {
            bool sub = (ix & ~ideals[y]) == 0;
            bool leq = (((packed[y] | H) - tx) & H) == H;
            local += sub != leq;
        }
        bad += local;
    }
    return {counterexamples("J(P_n) -> M_n order isomorphism", n, bad)};
}

Reports theta_isomorphism(int n) {
    const int h = half_size(n);
    auto left = enumerate_KnL(n);
    std::vector<Tableau> img;
    for (const auto& t : left) img.push_back(theta(t, n));
    std::uint64_t bad = bijection_defects(img, enumerate_Mn(h + 1, Budget::unlimited()));
    bad += order_mismatches(
        left.size(), [&](std::size_t x, std::size_t y) { return left[x].leq(left[y]); },
        [&](std::size_t x, std::size_t y) { return img[x].leq(img[y]); });
    Reports r{counterexamples("theta: K_n^L -> M_{h+1} order isomorphism", n, bad)};

    auto a = enumerate_An(n);
    std::vector<Tableau> aimg;
    std::uint64_t weak = 0;
    for (const auto& t : a) {
        aimg.push_back(theta(t, n));
        if (in_KnL(t, n) != in_Mn(aimg.back(), h + 1)) ++weak;
    }
    std::uint64_t ord = order_mismatches(
        a.size(), [&](std::size_t x, std::size_t y) { return a[x].leq(a[y]); },
        [&](std::size_t x, std::size_t y) { return aimg[x].leq(aimg[y]); });
    r.push_back(counterexamples("theta order equivalence on A_n", n, ord));
    r.push_back(counterexamples("K_n^L membership vs theta image in M_{h+1}", n, weak));
    return r;
}

Reports right_isomorphism(int m) {
    Reports r;
    auto source = enumerate_Mn(m + 1, Budget::unlimited());
    for (auto variant : {RightVariant::even, RightVariant::odd}) {
        const bool even = variant == RightVariant::even;
        const int n = even ? 2 * m : 2 * m + 1;
        auto target = enumerate_KnR(n, even ? CornerLabel::one : CornerLabel::two);
        std::vector<Tableau> img;
        std::uint64_t bad = 0;
        for (const auto& t : source) {
            img.push_back(right_iso(t, m, variant));
            if (!(right_iso_inverse(img.back(), m, variant) == t)) ++bad;
        }
        bad += bijection_defects(img, target);
        bad += order_mismatches(
            source.size(), [&](std::size_t x, std::size_t y) { return source[x].leq(source[y]); },
            [&](std::size_t x, std::size_t y) { return img[x].leq(img[y]); });
        if (!(right_iso(minimal_tableau(m + 1), m, variant) == canonical_min_right(m, variant))) ++bad;
        r.push_back(counterexamples(even ? "right_iso (even): M_{m+1} -> K_2m^{R,1}" : "right_iso (odd): M_{m+1} -> K_{2m+1}^{R,2}",
                                    m, bad));
    }
    return r;
}

Reports Un_structure(int n) {
    Reports r;
    KnStructure S(n);
    const int h = half_size(n), m = n / 2;
    const Tableau T_h = canonical_min_right(std::max(h, 1), RightVariant::odd);

    std::array<std::vector<Tableau>, 4> cls;  // left1, left2, right1, right2
    for (const auto& l : S.left()) {
        if (!S.left_join_irreducible(l)) continue;
        CornerLabel c = corner_label(l);
        cls[c == CornerLabel::one ? 0 : 1].push_back(glue(l, S.right_min(c), n));
    }
    const CornerLabel c0 = corner_label(S.left_min());
    for (const auto& rt : S.right(c0)) {
        if (!S.right_join_irreducible(rt, c0)) continue;
        cls[h >= 2 && rt.leq(T_h) ? 3 : 2].push_back(glue(S.left_min(), rt, n));
    }
    std::vector<Tableau> U;
    std::uint64_t misclassified = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        for (const auto& t : cls[k]) {
            auto c = S.classify(t);
            if (!c || static_cast<std::size_t>(*c) != k) ++misclassified;
            U.push_back(t);
        }
    }
    std::sort(U.begin(), U.end());
    if (std::adjacent_find(U.begin(), U.end()) != U.end()) ++misclassified;
    r.push_back(counterexamples("U_n classes are disjoint and match classify", n, misclassified));

    if (n <= 9) {
        auto all = S.elements();
        FinitePoset k = tableau_poset(all);
        std::vector<Tableau> direct;
        for (auto x : join_irreducible_indices(k)) direct.push_back(all[x]);
        std::sort(direct.begin(), direct.end());
        std::uint64_t bad = bijection_defects(direct, U);
        for (const auto& t : all) {
            bool ji = std::binary_search(direct.begin(), direct.end(), t);
            if (ji != S.classify(t).has_value()) ++bad;
        }
        r.push_back(counterexamples("classify vs join-irreducibles of K_n", n, bad));
    }

    auto iso_defects = [](const std::vector<Tableau>& els, const FinitePoset& model) -> std::uint64_t {
        auto res = are_isomorphic(tableau_poset(els), model);
        return res.status == IsoStatus::isomorphic ? 0 : 1;
    };
    auto comparable_pairs = [](const std::vector<Tableau>& a, const std::vector<Tableau>& b) {
        std::uint64_t c = 0;
        for (const auto& x : a)
            for (const auto& y : b)
                if (x.leq(y) || y.leq(x)) ++c;
        return c;
    };
    std::vector<Tableau> Ul = cls[0], Ur = cls[2];
    Ul.insert(Ul.end(), cls[1].begin(), cls[1].end());
    Ur.insert(Ur.end(), cls[3].begin(), cls[3].end());

    if (n >= 3) {
        FinitePoset q_h1 = build_Phin(h + 1);
        r.push_back(counterexamples("U_n^l ~ Q_{h+1}", n, iso_defects(Ul, q_h1)));
        r.push_back(counterexamples("U_n^r ~ Q_{h+1}", n, iso_defects(Ur, q_h1)));
    }
    if (n % 2 == 0 && m >= 2) {
        FinitePoset q_m = build_Phin(m);
        r.push_back(counterexamples("(b) U_n^{l,1} ~ Q_m", n, iso_defects(cls[0], q_m)));
        r.push_back(counterexamples("(b) U_n^{r,1} ~ Q_m", n, iso_defects(cls[2], q_m)));
        r.push_back(counterexamples("(c) U_n^{l,1} incomparable to U_n^r", n, comparable_pairs(cls[0], Ur)));
        r.push_back(counterexamples("(d) U_n^{r,1} incomparable to U_n^l", n, comparable_pairs(cls[2], Ul)));
        std::uint64_t below = 0;
        for (const auto& y : cls[3])
            for (const auto& x : cls[1])
                if (!(y.leq(x) && !(y == x))) ++below;
        r.push_back(counterexamples("(e) U_n^{r,2} below every element of U_n^{l,2}", n, below));
        r.push_back(compare_values("|U_n^{r,2}| = C(m,2)", n, binomial(m, 2), cls[3].size()));
    }
    if (n % 2 == 1 && n >= 3) {
        r.push_back(counterexamples("U_n^l incomparable to U_n^r", n, comparable_pairs(Ul, Ur)));
        std::uint64_t l1 = 0;
        for (const auto& l : S.left())
            if (corner_label(l) == CornerLabel::one) ++l1;
        r.push_back(counterexamples("K_n^{L,1} is empty", n, l1));

        // Explicit isomorphism K_n -> M_{m+1} x M_{m+1}.
        auto all = S.elements();
        auto factor = enumerate_Mn(m + 1, Budget::unlimited());
        TableauIndex fidx = index_of(factor);
        std::vector<std::pair<Tableau, Tableau>> img;
        std::uint64_t bad = 0;
        std::vector<bool> hit(factor.size() * factor.size(), false);
        for (const auto& t : all) {
            auto [l, rt] = split(t, n);
            Tableau a = theta(l, n), b = right_iso_inverse(rt, m, RightVariant::odd);
            auto ia = fidx.find(a), ib = fidx.find(b);
            if (ia == fidx.end() || ib == fidx.end() || hit[ia->second * factor.size() + ib->second]) {
                ++bad;
            } else {
                hit[ia->second * factor.size() + ib->second] = true;
            }
            img.emplace_back(std::move(a), std::move(b));
        }
        bad += static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), false));
        bad += order_mismatches(
            all.size(), [&](std::size_t x, std::size_t y) { return all[x].leq(all[y]); },
            [&](std::size_t x, std::size_t y) {
                return img[x].first.leq(img[y].first) && img[x].second.leq(img[y].second);
            });
        r.push_back(counterexamples("K_n -> M_{m+1} x M_{m+1} order isomorphism", n, bad));
    }
    return r;
}

Reports Mn_lattice_laws(int n, std::uint64_t samples, std::uint64_t seed) {
    if (predicted_Mn_size(n) <= 1024) {
        auto els = enumerate_Mn(n);
        return {counterexamples("distributive lattice laws on M_n (exhaustive)", n,
                                exhaustive_law_failures(operation_tables(els)))};
    }
    MnSampler sampler(n);
    std::mt19937_64 rng(seed);
    std::uint64_t bad = sampled_law_failures(
        samples, [&] { return sampler.sample(rng); }, [&](const Tableau& t) { return in_Mn(t, n); });
    return {counterexamples("distributive lattice laws on M_n (sampled)", n, bad,
                            std::to_string(samples) + " random triples")};
}

Reports Kn_lattice_laws(int n, std::uint64_t samples, std::uint64_t seed) {
    auto els = enumerate_Kn_product(n);
    Reports r;
    if (els.size() <= 1024) {
        r.push_back(counterexamples("distributive lattice laws on K_n (exhaustive)", n,
                                    exhaustive_law_failures(operation_tables(els))));
    } else {
        TableauSet members(els.begin(), els.end());
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
        std::uint64_t bad = sampled_law_failures(
            samples, [&] { return els[pick(rng)]; }, [&](const Tableau& t) { return members.count(t) > 0; });
        r.push_back(counterexamples("distributive lattice laws on K_n (sampled)", n, bad,
                                    std::to_string(samples) + " random triples"));
    }
    if (n <= 9) {
        TableauSet members(els.begin(), els.end());
        std::uint64_t outside = 0;
        for (std::size_t x = 0; x < els.size(); ++x) {
            for (std::size_t y = x + 1; y < els.size(); ++y) {
                if (!members.count(entrywise_max(els[x], els[y]))) ++outside;
                if (!members.count(entrywise_min(els[x], els[y]))) ++outside;
            }
        }
        r.push_back(counterexamples("K_n closed under join and meet of M_n", n, outside));
    }
    return r;
}

}  // namespace checks

namespace {

struct Task {
    std::string name;
    int n;
    std::function<Reports()> run;
};

std::vector<Task> task_list(const VerifyOptions& o) {
    std::vector<Task> tasks;
    const Budget& b = o.budget;
    auto add = [&](std::string name, int lo, int hi, auto fn) {
        for (int n = lo; n <= std::min(hi, o.n_max); ++n) tasks.push_back({name, n, [fn, n] { return fn(n); }});
    };
    add("valid subsets", 2, 6, [b](int n) { return checks::valid_subsets(n, b); });
    add("order ideals of P_n", 2, 8, [b](int n) { return checks::Pn_ideals(n, b); });
    add("consistency", 4, 8, [](int n) { return checks::consistency(n); });
    add("M_n statistics", 2, 8, [b](int n) { return checks::Mn(n, b); });
    add("M_n column DP", 9, 9, [](int n) { return checks::Mn_profile(n); });
    add("K_n", 2, 10, [b](int n) { return checks::Kn(n, b); });
    add("F(K_2m) parts", 4, 10, [](int n) { return n % 2 == 0 ? checks::Kn_even_parts(n / 2) : Reports{}; });
    add("phi", 2, 8, [](int n) { return checks::phi_isomorphism(n); });
    add("psi", 2, 8, [b](int n) { return checks::psi_isomorphism(n, b); });
    add("J(P_n) ~ M_n", 2, 7, [b](int n) { return checks::ideal_lattice_isomorphism(n, b); });
    add("theta", 4, 10, [](int n) { return checks::theta_isomorphism(n); });
    // right_iso for m lands in K_2m and K_{2m+1}; run it once both fit.
    add("right_iso", 3, 9, [](int n) { return n % 2 == 1 ? checks::right_isomorphism((n - 1) / 2) : Reports{}; });
    add("U_n", 4, 10, [](int n) { return checks::Un_structure(n); });
    add("M_n lattice laws", 2, 9, [](int n) { return checks::Mn_lattice_laws(n); });
    add("K_n lattice laws", 2, 9, [](int n) { return checks::Kn_lattice_laws(n); });
    return tasks;
}

}  // namespace

Reports verify_all(const VerifyOptions& options) {
    auto tasks = task_list(options);
    std::vector<Reports> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            const auto& t = tasks[i];
            if (options.budget.expired()) {
                results[i] = {skipped(t.name, t.n, "deadline reached")};
                continue;
            }
            try {
                results[i] = t.run();
            } catch (const BudgetExceeded& e) {
                results[i] = {skipped(t.name, t.n, e.what())};
            }
        }
    };
    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    Reports out;
    for (auto& r : results) out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    return out;
}

void write_report_table(std::ostream& out, const Reports& reports) {
    std::size_t qw = 8;
    for (const auto& r : reports) qw = std::max(qw, r.quantity.size());
    out << std::left << std::setw(static_cast<int>(qw)) << "quantity" << "  " << std::setw(3) << "n" << "  "
        << std::setw(8) << "status" << "  closed | enumerated\n";
    for (const auto& r : reports) {
        out << std::left << std::setw(static_cast<int>(qw)) << r.quantity << "  " << std::setw(3) << r.n << "  "
            << std::setw(8) << to_string(r.status) << "  ";
        if (r.status == ReportStatus::skipped) out << "(" << r.note << ")";
        else out << r.closed << " | " << r.enumerated;
        out << '\n';
    }
}

namespace {

nlohmann::json value_json(const std::string& v) {
    if (!v.empty() && v.size() < 19 && std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return std::stoll(v);
    return v;
}

}  // namespace

void write_report_json_lines(std::ostream& out, const Reports& reports) {
    for (const auto& r : reports) {
        nlohmann::json j{{"quantity", r.quantity},
                         {"n", r.n},
                         {"closed", value_json(r.closed)},
                         {"enumerated", value_json(r.enumerated)},
                         {"status", to_string(r.status)}};
        if (!r.note.empty()) j["note"] = r.note;
        out << j.dump() << '\n';
    }
}

bool any_failed(const Reports& reports) {
    return std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.status == ReportStatus::fail; });
}

bool any_skipped(const Reports& reports) {
    return std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.status == ReportStatus::skipped; });
}

}  // namespace ap3
