#include "asmlat/verify.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <sstream>
#include <unordered_set>

#include "asmlat/hasse.hpp"
#include "asmlat/poset.hpp"
#include "asmlat/statistics.hpp"

namespace asmlat {

namespace {

constexpr int kNoCap = 1 << 20;
constexpr std::uint64_t kSeed = 0x5eed'a5'1a77ULL;

class Tally {
public:
    template <typename Describe>
    void check(bool ok, Describe&& describe) {
        ++total;
        if (ok) {
            ++passed;
        } else if (first_failure.empty()) {
            first_failure = describe();
        }
    }

    std::uint64_t passed = 0;
    std::uint64_t total = 0;
    std::string first_failure;
};

struct SizeContext {
    int n;
    int n_max;
    HasseGraph graph;
    std::vector<Asm> bigrassmannians;  // as matrices

    const Asm& node(std::size_t i) const { return graph.nodes[i].matrix; }
    std::size_t size() const { return graph.nodes.size(); }
};

struct Suite {
    std::function<std::string(int top)> name;
    int cap;
    std::function<void(const SizeContext&, Tally&)> run;
};

std::string describe(const Asm& a) {
    return "A=" + flat_string(a);
}

std::int64_t half_pairs(int n) {
    return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

// A < B with nothing strictly between, decided from `compare` alone.
std::vector<std::vector<bool>> generic_covers(const SizeContext& ctx) {
    const auto m = ctx.size();
    std::vector<std::vector<bool>> less(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            less[i][j] = compare(ctx.node(i), ctx.node(j)) == PosetOrdering::Less;
        }
    }
    std::vector<std::vector<bool>> cover(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (!less[i][j]) {
                continue;
            }
            bool between = false;
            for (std::size_t k = 0; k < m && !between; ++k) {
                between = less[i][k] && less[k][j];
            }
            cover[i][j] = !between;
        }
    }
    return cover;
}

bool lattice_laws_hold(const Asm& a, const Asm& b, const Asm& c) {
    const Asm ab_join = join(a, b);
    const Asm ab_meet = meet(a, b);
    return ab_join == join(b, a) && ab_meet == meet(b, a) &&
           join(ab_join, c) == join(a, join(b, c)) && meet(ab_meet, c) == meet(a, meet(b, c)) &&
           join(a, a) == a && meet(a, a) == a &&
           join(a, ab_meet) == a && meet(a, ab_join) == a &&
           meet(a, join(b, c)) == join(ab_meet, meet(a, c)) &&
           join(a, meet(b, c)) == meet(ab_join, join(a, c)) &&
           less_or_equal(a, ab_join) && less_or_equal(b, ab_join) &&
           less_or_equal(ab_meet, a) && less_or_equal(ab_meet, b) &&
           (!(less_or_equal(a, c) && less_or_equal(b, c)) || less_or_equal(ab_join, c)) &&
           (!(less_or_equal(c, a) && less_or_equal(c, b)) || less_or_equal(c, ab_meet));
}

std::int64_t permutation_beta_direct(const Permutation& w) {
    std::int64_t total = 0;
    for (int i = 1; i <= w.size(); ++i) {
        for (int j = i + 1; j <= w.size(); ++j) {
            if (w(i) > w(j)) {
                total += w(i) - w(j);
            }
        }
    }
    return total;
}

HalfIntPolynomial tally_polynomial(const SizeContext& ctx, const std::function<std::int64_t(const HasseNode&)>& exponent) {
    HalfIntPolynomial p(Variable::Lambda);
    for (const auto& node : ctx.graph.nodes) {
        p.add_term(exponent(node), 1);
    }
    return p;
}

std::vector<Suite> make_suites() {
    std::vector<Suite> s;
    auto fixed = [](std::string name) { return [name](int) { return name; }; };

    // --- matrices -----------------------------------------------------------
    s.push_back({fixed("Round-trip(corner-sum)"), kNoCap, [](const SizeContext& ctx, Tally& t) {
        for (const auto& node : ctx.graph.nodes) {
            t.check(from_corner_sum(corner_sum(node.matrix)) == node.matrix, [&] { return describe(node.matrix); });
        }
    }});
    s.push_back({fixed("CornerSum(monotone, unit steps, borders)"), kNoCap, [](const SizeContext& ctx, Tally& t) {
        for (const auto& node : ctx.graph.nodes) {
            t.check(corner_sum(node.matrix).well_formed(), [&] { return describe(node.matrix); });
        }
    }});
    s.push_back({fixed("Involutions(transpose, dual, N preserved)"), kNoCap, [](const SizeContext& ctx, Tally& t) {
        for (const auto& node : ctx.graph.nodes) {
            const Asm& a = node.matrix;
            const bool ok = transpose(transpose(a)) == a && dual(dual(a)) == a &&
                            minus_count(transpose(a)) == minus_count(a) && minus_count(dual(a)) == minus_count(a);
            t.check(ok, [&] { return describe(a); });
        }
    }});
    s.push_back({fixed("Embedding(permutation matrices validate)"), kNoCap, [](const SizeContext& ctx, Tally& t) {
        for_each_permutation(ctx.n, [&](const Permutation& w) {
            const Asm a = from_permutation(w);
            std::vector<int> raw(a.entries().begin(), a.entries().end());
            bool ok = true;
            try {
                ok = Asm::validate(ctx.n, raw) == a && to_permutation(a) == w;
            } catch (const AsmError&) {
                ok = false;
            }
            t.check(ok, [&] { return "w=" + w.to_string(); });
        });
    }});

    // --- statistics ---------------------------------------------------------
    s.push_back({fixed("Theorem1(beta-equivalence)"), kNoCap, [](const SizeContext& ctx, Tally& t) {
        for (const auto& node : ctx.graph.nodes) {
            const Asm& a = node.matrix;
            const auto b = beta_weighted(a);
            const bool ok = b == beta_row_weighted(a) && b == beta_corner(a) &&
                            b == beta_poset_oracle(a, ctx.bigrassmannians);
            t.check(ok, [&] { return describe(a); });
        }
    }});
    s.push_back({[](int top) { return "Duality(I+I*−N=" + std::to_string(half_pairs(top)) + ")"; }, kNoCap,
                 [](const SizeContext& ctx, Tally& t) {
        for (const auto& node : ctx.graph.nodes) {
            const auto& st = node.stats;
            t.check(st.inv + st.dual_inv - st.minus == half_pairs(ctx.n), [&] { return describe(node.matrix); });
        }
    }});
    s.push_back({fixed("InversionBound(I<=beta)"), kNoCap, [](const SizeContext& ctx, Tally& t) {
        for (const auto& node : ctx.graph.nodes) {
            t.check(node.stats.inv <= node.stats.beta, [&] { return describe(node.matrix); });
        }
    }});
    s.push_back({fixed("DualInversion(I*(A)=I(A*))"), kNoCap, [](const SizeContext& ctx, Tally& t) {
        for (const auto& node : ctx.graph.nodes) {
            t.check(node.stats.dual_inv == inversion_number(dual(node.matrix)), [&] { return describe(node.matrix); });
        }
    }});
    s.push_back({fixed("LocalWeak(sum of H_pq = H)"), kNoCap, [](const SizeContext& ctx, Tally& t) {
        for (const auto& node : ctx.graph.nodes) {
            std::int64_t quarters = 0;
            for (int p = 1; p <= ctx.n; ++p) {
                for (int q = 1; q <= ctx.n; ++q) {
                    quarters += local_weak_contribution(node.matrix, p, q).units;
                }
            }
            t.check(quarters == 2 * node.stats.weak.units, [&] { return describe(node.matrix); });
        }
    }});
    s.push_back({fixed("PermutationBeta(sum of w(i)-w(j) over inversions)"), kNoCap, [](const SizeContext& ctx, Tally& t) {
        for_each_permutation(ctx.n, [&](const Permutation& w) {
            const Asm a = from_permutation(w);
            const auto direct = permutation_beta_direct(w);
            t.check(beta_weighted(a) == direct && beta_corner(a) == direct && inversion_number(a) == w.inversions(),
                    [&] { return "w=" + w.to_string(); });
        });
    }});
    s.push_back({fixed("RandomPermutations(beta formulas agree, n<=50)"), kNoCap, [](const SizeContext& ctx, Tally& t) {
        if (ctx.n != ctx.n_max) {
            return;  // size independent; run once
        }
        std::mt19937_64 rng(kSeed);
        std::uniform_int_distribution<int> size_dist(1, 50);
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<int> images(static_cast<std::size_t>(size_dist(rng)));
            for (std::size_t i = 0; i < images.size(); ++i) {
                images[i] = static_cast<int>(i) + 1;
            }
            std::shuffle(images.begin(), images.end(), rng);
            const auto w = Permutation::from_images(images);
            const Asm a = from_permutation(w);
            const auto b = beta_corner(a);
            t.check(b == beta_weighted(a) && b == beta_row_weighted(a) && b == permutation_beta_direct(w),
                    [&] { return "w=" + w.to_string(); });
        }
    }});
    s.push_back({fixed("MaxH(max n(n-1)/2 only at w0, H>=0)"), kNoCap, [](const SizeContext& ctx, Tally& t) {
        const Asm top = from_permutation(Permutation::longest(ctx.n));
        for (const auto& node : ctx.graph.nodes) {
            const auto h2 = node.stats.weak.units;
            const bool at_max = h2 == 2 * half_pairs(ctx.n);
            const bool ok = h2 >= 0 && h2 <= 2 * half_pairs(ctx.n) && (at_max == (node.matrix == top));
            t.check(ok, [&] { return describe(node.matrix); });
        }
    }});

    // --- order and covers ---------------------------------------------------
    s.push_back({fixed("CoverCriterion(local block = generic poset cover)"), 4, [](const SizeContext& ctx, Tally& t) {
        const auto cover = generic_covers(ctx);
        for (std::size_t i = 0; i < ctx.size(); ++i) {
            for (std::size_t j = 0; j < ctx.size(); ++j) {
                t.check(try_cover(ctx.node(i), ctx.node(j)).has_value() == cover[i][j],
                        [&] { return describe(ctx.node(i)) + " B=" + flat_string(ctx.node(j)); });
            }
        }
    }});
    s.push_back({fixed("Grading(beta rises by 1 on every cover)"), kNoCap, [](const SizeContext& ctx, Tally& t) {
        for (const auto& e : ctx.graph.edges) {
            t.check(ctx.graph.nodes[e.upper].stats.beta == ctx.graph.nodes[e.lower].stats.beta + 1,
                    [&] { return describe(ctx.node(e.lower)); });
        }
    }});
    s.push_back({fixed("ChainRank(saturated chain length = beta)"), 6, [](const SizeContext& ctx, Tally& t) {
        for (const auto& node : ctx.graph.nodes) {
            t.check(rank_by_chain(node.matrix) == node.stats.beta, [&] { return describe(node.matrix); });
        }
    }});
    s.push_back({fixed("CoverDeltas(dI, dN, dH match the cover table)"), kNoCap, [](const SizeContext& ctx, Tally& t) {
        for (const auto& e : ctx.graph.edges) {
            const auto& lo = ctx.graph.nodes[e.lower].stats;
            const auto& hi = ctx.graph.nodes[e.upper].stats;
            const CoverDeltas actual{static_cast<int>(hi.inv - lo.inv), static_cast<int>(hi.minus - lo.minus),
                                     static_cast<int>(hi.weak.units - lo.weak.units)};
            const bool ok = actual == e.deltas && actual == cover_kind(e.type).deltas && actual.dI >= -1 &&
                            actual.dI <= 1 && actual.dH2x >= -2 && actual.dH2x <= 2;
            t.check(ok, [&] { return describe(ctx.node(e.lower)) + " type " + std::to_string(e.type); });
        }
    }});
    s.push_back({fixed("TypeDuality(type m dualizes to m*, dH equal)"), kNoCap, [](const SizeContext& ctx, Tally& t) {
        for (const auto& e : ctx.graph.edges) {
            const auto mirrored = try_cover(dual(ctx.node(e.upper)), dual(ctx.node(e.lower)));
            const bool ok = mirrored && mirrored->type == cover_kind(e.type).dual_type &&
                            mirrored->deltas.dH2x == e.deltas.dH2x;
            t.check(ok, [&] { return describe(ctx.node(e.lower)) + " type " + std::to_string(e.type); });
        }
    }});
    s.push_back({fixed("DualAntiAutomorphism(A<B iff B*<A*)"), 5, [](const SizeContext& ctx, Tally& t) {
        std::vector<Asm> duals;
        for (const auto& node : ctx.graph.nodes) {
            duals.push_back(dual(node.matrix));
        }
        for (std::size_t i = 0; i < ctx.size(); ++i) {
            for (std::size_t j = 0; j < ctx.size(); ++j) {
                const bool lhs = compare(ctx.node(i), ctx.node(j)) == PosetOrdering::Less;
                const bool rhs = compare(duals[j], duals[i]) == PosetOrdering::Less;
                t.check(lhs == rhs, [&] { return describe(ctx.node(i)) + " B=" + flat_string(ctx.node(j)); });
            }
        }
    }});
    s.push_back({fixed("TransposeIsomorphism(compare preserved)"), 4, [](const SizeContext& ctx, Tally& t) {
        for (std::size_t i = 0; i < ctx.size(); ++i) {
            for (std::size_t j = 0; j < ctx.size(); ++j) {
                t.check(compare(ctx.node(i), ctx.node(j)) == compare(transpose(ctx.node(i)), transpose(ctx.node(j))),
                        [&] { return describe(ctx.node(i)) + " B=" + flat_string(ctx.node(j)); });
            }
        }
    }});
    s.push_back({fixed("LatticeLaws(join/meet distributive lattice)"), kNoCap, [](const SizeContext& ctx, Tally& t) {
        const auto m = ctx.size();
        if (ctx.n <= 3) {
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t j = 0; j < m; ++j) {
                    for (std::size_t k = 0; k < m; ++k) {
                        t.check(lattice_laws_hold(ctx.node(i), ctx.node(j), ctx.node(k)),
                                [&] { return describe(ctx.node(i)); });
                    }
                }
            }
            return;
        }
        std::mt19937_64 rng(kSeed + static_cast<std::uint64_t>(ctx.n));
        std::uniform_int_distribution<std::size_t> pick(0, m - 1);
        for (int trial = 0; trial < 10'000; ++trial) {
            const auto& a = ctx.node(pick(rng));
            const auto& b = ctx.node(pick(rng));
            const auto& c = ctx.node(pick(rng));
            t.check(lattice_laws_hold(a, b, c), [&] { return describe(a) + " B=" + flat_string(b); });
        }
    }});
    s.push_back({fixed("JoinIrreducible(= bigrassmannian permutations)"), kNoCap, [](const SizeContext& ctx, Tally& t) {
        std::unordered_set<Asm, AsmHash> bg(ctx.bigrassmannians.begin(), ctx.bigrassmannians.end());
        for (const auto& node : ctx.graph.nodes) {
            t.check(node.join_irreducible == (bg.count(node.matrix) == 1), [&] { return describe(node.matrix); });
        }
    }});

    // --- enumeration and generating functions ------------------------------
    s.push_back({fixed("Count(|A_n| = product formula)"), kNoCap, [](const SizeContext& ctx, Tally& t) {
        t.check(count_formula(ctx.n) == static_cast<unsigned long>(ctx.size()),
                [&] { return "n=" + std::to_string(ctx.n); });
    }});
    s.push_back({fixed("Reachability(cover BFS from identity reaches all)"), kNoCap, [](const SizeContext& ctx, Tally& t) {
        std::unordered_set<Asm, AsmHash> seen;
        std::deque<Asm> queue{identity(ctx.n)};
        seen.insert(queue.front());
        while (!queue.empty()) {
            const Asm a = std::move(queue.front());
            queue.pop_front();
            for (auto& e : covers_up(a)) {
                if (seen.insert(e.upper).second) {
                    queue.push_back(std::move(e.upper));
                }
            }
        }
        for (const auto& node : ctx.graph.nodes) {
            t.check(seen.count(node.matrix) == 1, [&] { return describe(node.matrix); });
        }
        t.check(seen.size() == ctx.size(), [&] { return "BFS found extra matrices"; });
    }});
    s.push_back({fixed("Palindromic(sum q^beta)"), kNoCap, [](const SizeContext& ctx, Tally& t) {
        const auto p = tally_polynomial(ctx, [](const HasseNode& node) { return 2 * node.stats.beta; });
        t.check(p.is_palindromic(), [&] { return p.to_string(); });
    }});
    s.push_back({fixed("MonicSymmetric(sum λ^H, top λ^{n(n-1)/2})"), kNoCap, [](const SizeContext& ctx, Tally& t) {
        const auto p = tally_polynomial(ctx, [](const HasseNode& node) { return node.stats.weak.units; });
        t.check(p.is_monic() && p.is_palindromic() && p.top_half_units() == 2 * half_pairs(ctx.n) &&
                    p.bottom_half_units() == 0,
                [&] { return p.to_string(); });
    }});
    s.push_back({fixed("NotSymmetric(sum λ^I at n=3)"), 3, [](const SizeContext& ctx, Tally& t) {
        if (ctx.n != 3) {
            return;
        }
        const auto p = tally_polynomial(ctx, [](const HasseNode& node) { return 2 * node.stats.inv; });
        t.check(!p.is_palindromic(), [&] { return p.to_string(); });
    }});
    s.push_back({fixed("PermutationInversions(sum λ^I over S_n = product)"), kNoCap, [](const SizeContext& ctx, Tally& t) {
        HalfIntPolynomial p(Variable::Lambda);
        for (const auto& node : ctx.graph.nodes) {
            if (node.stats.minus == 0) {
                p.add_term(2 * node.stats.inv, 1);
            }
        }
        t.check(p == permutation_inversion_product(ctx.n), [&] { return p.to_string(); });
    }});
    s.push_back({fixed("EvaluateAtOne(genfuns sum to |A_n|)"), kNoCap, [](const SizeContext& ctx, Tally& t) {
        const auto count = count_formula(ctx.n);
        for (auto exponent : {+[](const HasseNode& n) { return 2 * n.stats.inv; },
                              +[](const HasseNode& n) { return n.stats.weak.units; },
                              +[](const HasseNode& n) { return 2 * n.stats.beta; }}) {
            const auto p = tally_polynomial(ctx, exponent);
            t.check(p.evaluate_at_one() == count, [&] { return p.to_string(); });
        }
    }});
    s.push_back({fixed("SignedIdentity(sum (-1)^I q^beta = prod (1-q^k)^(n-k))"), kNoCap,
                 [](const SizeContext& ctx, Tally& t) {
        const auto r = signed_identity_check(ctx.n, ~std::uint64_t{0});
        t.check(r.equal, [&] { return r.lhs.to_string() + " vs " + r.rhs.to_string(); });
    }});
    s.push_back({fixed("HasseGraph(edges graded, |JI| = bigrassmannians)"), kNoCap, [](const SizeContext& ctx, Tally& t) {
        const auto ji = std::count_if(ctx.graph.nodes.begin(), ctx.graph.nodes.end(),
                                      [](const HasseNode& node) { return node.join_irreducible; });
        t.check(static_cast<std::size_t>(ji) == ctx.bigrassmannians.size(), [&] { return "join-irreducible count"; });
        std::size_t edges_from_scan = 0;
        for (const auto& node : ctx.graph.nodes) {
            edges_from_scan += covers_down(node.matrix).size();
        }
        t.check(edges_from_scan == ctx.graph.edges.size(), [&] { return "up/down edge counts differ"; });
    }});
    return s;
}

}  // namespace

bool VerifyReport::all_passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& r) { return r.ok(); });
}

std::string VerifyReport::to_string() const {
    std::ostringstream os;
    std::size_t ok = 0;
    for (const auto& r : suites) {
        os << r.name << ": " << r.passed << "/" << r.total << " [n=" << r.top_size << "; all n<=" << r.top_size
           << ": " << r.passed_all << "/" << r.total_all << "] " << (r.ok() ? "PASS" : "FAIL");
        if (!r.ok()) {
            os << " first failure: " << r.first_failure;
        }
        os << '\n';
        ok += r.ok() ? 1 : 0;
    }
    os << "Summary: " << ok << "/" << suites.size() << " suites passed\n";
    return os.str();
}

VerifyReport verify(int n_max, std::uint64_t guard) {
    if (n_max < 1) {
        throw AsmError(ErrorKind::IndexOutOfRange, "verify needs n_max >= 1");
    }
    check_guard(n_max, guard);
    check_permutation_guard(n_max, guard);

    const auto suites = make_suites();
    std::vector<SuiteResult> results(suites.size());
    for (int n = 1; n <= n_max; ++n) {
        SizeContext ctx{n, n_max, build_hasse(n, guard), {}};
        for (const auto& w : enumerate_bigrassmannians(n)) {
            ctx.bigrassmannians.push_back(from_permutation(w));
        }
        for (std::size_t k = 0; k < suites.size(); ++k) {
            if (n > suites[k].cap) {
                continue;
            }
            Tally t;
            suites[k].run(ctx, t);
            auto& r = results[k];
            r.top_size = n;
            r.passed = t.passed;
            r.total = t.total;
            r.passed_all += t.passed;
            r.total_all += t.total;
            if (r.first_failure.empty() && !t.first_failure.empty()) {
                r.first_failure = "n=" + std::to_string(n) + " " + t.first_failure;
            }
        }
    }
    for (std::size_t k = 0; k < suites.size(); ++k) {
        results[k].name = suites[k].name(results[k].top_size);
    }
    return VerifyReport{n_max, std::move(results)};
}

}  // namespace asmlat
