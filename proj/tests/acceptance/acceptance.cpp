// Acceptance suite: one PASS/FAIL line per criterion, exact equality
// throughout. Exit status is the number of failed criteria.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mulli/mulli.hpp"

using namespace mulli;

namespace {

// Collects the first mismatch of a criterion.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok && failure_.empty()) failure_ = what;
    }
    bool ok() const { return failure_.empty(); }
    const std::string& failure() const { return failure_; }

private:
    std::string failure_;
};

std::string show(const Partition& lambda) { return "(" + format_partition(lambda) + ")"; }

Symbol columns(int p, SymbolKind kind, std::vector<int> a, std::vector<int> r) {
    std::vector<SymbolColumn> cols;
    for (std::size_t i = 0; i < a.size(); ++i) cols.push_back({a[i], r[i]});
    return Symbol(Modulus(p), cols, kind);
}

void golden_symbol(Check& c) {
    const Symbol got = compute_symbol({9, 6, 3, 1}, Modulus(5));
    c.expect(got == columns(5, SymbolKind::mullineux, {9, 5, 5}, {4, 2, 2}),
             "G_5(9,6,3,1) = " + format_symbol(got));
}

void golden_bg_symbol(Check& c) {
    const Modulus p(3);
    const Symbol got = compute_bg_symbol({6, 5, 5, 3, 3, 1}, p);
    c.expect(got == columns(3, SymbolKind::bg, {11, 6, 5, 1}, {6, 3, 3, 1}),
             "bg_3(6,5,5,3,3,1) = " + format_symbol(got));
    const auto chain = p_rim_star_chain({6, 5, 5, 3, 3, 1}, p);
    const std::vector<Partition> expected{{6, 5, 5, 3, 3, 1}, {4, 4, 2, 2}, {3, 2, 1}, {1}};
    c.expect(chain == expected, "p-rim* chain differs");
}

void golden_statistics(Check& c) {
    const Modulus p(3);
    const PRimStar a = p_rim_star({4, 4, 2, 2}, p);
    c.expect(a.a_star == 6 && a.eps_star == 0 && a.r_star == 3, "(4,4,2,2) statistics");
    const PRimStar b = p_rim_star({3, 2, 1}, p);
    c.expect(b.a_star == 5 && b.eps_star == 1 && b.r_star == 3, "(3,2,1) statistics");
}

void census_18(Check& c) {
    const CensusReport r = census(Modulus(3), 18);
    auto as_set = [](const std::vector<Partition>& xs) { return std::set<Partition>(xs.begin(), xs.end()); };
    c.expect(r.all_count == 385, "total " + std::to_string(r.all_count));
    c.expect(r.p_regular_count == 135, "3-regular " + std::to_string(r.p_regular_count));
    c.expect(r.self_conjugate.size() == 5 &&
                 as_set(r.self_conjugate) == std::set<Partition>{{9, 2, 1, 1, 1, 1, 1, 1, 1},
                                                                 {8, 3, 2, 1, 1, 1, 1, 1},
                                                                 {7, 4, 2, 2, 1, 1, 1},
                                                                 {6, 5, 2, 2, 2, 1},
                                                                 {5, 4, 4, 4, 1}},
             "self-conjugate list");
    c.expect(r.bg.size() == 3 && as_set(r.bg) == std::set<Partition>{{6, 5, 2, 2, 2, 1},
                                                                      {7, 4, 2, 2, 1, 1, 1},
                                                                      {9, 2, 1, 1, 1, 1, 1, 1, 1}},
             "BG_3^18");
    c.expect(r.self_mullineux.size() == 3 &&
                 as_set(r.self_mullineux) ==
                     std::set<Partition>{{7, 5, 2, 2, 1, 1}, {9, 4, 4, 1}, {10, 4, 4}},
             "M_3^18");
}

void extension_goldens(Check& c) {
    const Modulus p(3);
    const Partition base{6, 4, 2, 2, 1, 1};
    const Partition even = extend_by_rim_star(base, 0, 0, p);
    c.expect(even == Partition{9, 7, 2, 2, 2, 2, 2, 1, 1}, "eps=0 gives " + show(even));
    const Partition odd = extend_by_rim_star(base, 1, 2, p);
    c.expect(odd == Partition{9, 7, 5, 3, 3, 2, 2, 1, 1}, "eps=1, m=2 gives " + show(odd));
}

void bijection_golden(Check& c) {
    const Partition got = mullineux_to_bg({7, 6, 3, 2, 2}, Modulus(5));
    c.expect(got == Partition{7, 5, 2, 2, 2, 1, 1}, "m2bg(7,6,3,2,2) = " + show(got));
    c.expect(got != Partition{9, 3, 2, 1, 1, 1, 1, 1, 1}, "m2bg(7,6,3,2,2) = (9,3,2,1^6)");
}

void involution_suite(Check& c) {
    for (int p : {3, 5, 7}) {
        const Modulus m(p);
        for (int n = 0; n <= 22 && c.ok(); ++n) {
            for_each_partition(n, [&](const Partition& lambda) {
                if (!c.ok() || !is_p_regular(lambda, m)) return;
                const Partition image = mullineux_map(lambda, m);
                const std::string at = " at p=" + std::to_string(p) + " " + show(lambda);
                c.expect(mullineux_map(image, m) == lambda, "m(m(l)) != l" + at);
                c.expect(image.size() == lambda.size(), "|m(l)| != |l|" + at);
                c.expect(reconstruct(compute_symbol(lambda, m)) == lambda, "round trip" + at);
            });
        }
    }
}

void conjugation_degeneration(Check& c) {
    const Modulus p(13);
    for (int n = 0; n <= 12; ++n) {
        for_each_partition(n, [&](const Partition& lambda) {
            c.expect(mullineux_map(lambda, p) == conjugate(lambda), "m != conjugate at " + show(lambda));
        });
    }
}

void bijection_suite(Check& c) {
    for (int p : {3, 5, 7}) {
        const Modulus m(p);
        const auto gf = bg_count_via_gf(m, 25);
        for (int n = 0; n <= 25; ++n) {
            const CensusReport r = census(m, n);
            const std::string at = " at p=" + std::to_string(p) + ", n=" + std::to_string(n);
            std::set<Partition> images;
            for (const auto& lambda : r.bg) {
                const Partition mu = bg_to_mullineux(lambda, m);
                images.insert(mu);
                c.expect(mullineux_to_bg(mu, m) == lambda, "m2bg(bg2m(l)) != l" + at);
            }
            for (const auto& mu : r.self_mullineux) {
                c.expect(bg_to_mullineux(mullineux_to_bg(mu, m), m) == mu, "bg2m(m2bg(l)) != l" + at);
            }
            c.expect(images == std::set<Partition>(r.self_mullineux.begin(), r.self_mullineux.end()),
                     "image of BG is not M" + at);
            const auto count = static_cast<std::int64_t>(r.bg.size());
            c.expect(count == static_cast<std::int64_t>(r.self_mullineux.size()) &&
                         count == static_cast<std::int64_t>(r.distinct_odd_nondiv.size()) &&
                         count == gf[static_cast<std::size_t>(n)],
                     "counts disagree" + at);
        }
    }
}

void lemma_suite(Check& c) {
    // The implication "a* even => p | a*" does not reverse.
    const PRimStar witness = p_rim_star({5, 3, 2, 1, 1}, Modulus(3));
    c.expect(witness.a_star == 9 && witness.a_star % 3 == 0 && witness.a_star % 2 == 1,
             "converse witness (5,3,2,1,1)");

    for (int p : {3, 5, 7}) {
        const Modulus m(p);
        for (int n = 1; n <= 25; ++n) {
            std::set<std::vector<SymbolColumn>> symbols;
            for_each_partition(n, [&](const Partition& lambda) {
                if (!c.ok() || !is_self_conjugate(lambda)) return;
                const std::string at = " at p=" + std::to_string(p) + " " + show(lambda);
                const PRimStar s = p_rim_star(lambda, m);
                if (s.a_star % 2 == 0) c.expect(s.a_star % p == 0, "parity implication" + at);

                const Symbol bg = compute_bg_symbol(lambda, m);
                c.expect(symbols.insert({bg.columns().begin(), bg.columns().end()}).second,
                         "BG-symbol not injective" + at);

                if (!is_bg_partition(lambda, m)) return;
                const bool even = s.a_star % 2 == 0;
                c.expect(even == (s.eps_star == 0) && even == !s.has_diagonal_node() &&
                             even == (s.a_star % p == 0),
                         "four-way equivalence" + at);
                c.expect(is_p_regular(truncate_to_k(lambda), m), "truncation not p-regular" + at);
                c.expect(is_bg_partition(remove_p_rim_star(lambda, m), m), "BG not closed" + at);
                const Symbol as_mullineux = bg.retagged(SymbolKind::mullineux);
                c.expect(static_cast<bool>(validate_symbol(as_mullineux)), "BG-symbol invalid" + at);
                for (std::size_t i = 0; i < bg.size(); ++i) {
                    c.expect(bg[i].a == 2 * bg[i].r - as_mullineux.epsilon(i), "a* != 2r* - eps" + at);
                }
            });
        }
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"golden Mullineux symbol G_5(9,6,3,1)", golden_symbol},
        {"golden BG-symbol bg_3(6,5,5,3,3,1) and chain", golden_bg_symbol},
        {"golden p-rim* statistics", golden_statistics},
        {"census p=3, n=18", census_18},
        {"layer extension goldens", extension_goldens},
        {"bijection golden p=5, (7,6,3,2,2)", bijection_golden},
        {"involution suite p in {3,5,7}, n <= 22", involution_suite},
        {"conjugation degeneration p=13, n <= 12", conjugation_degeneration},
        {"bijection suite p in {3,5,7}, n <= 25", bijection_suite},
        {"lemma suite p in {3,5,7}, n <= 25", lemma_suite},
    };

    int failed = 0;
    int index = 0;
    for (const auto& [name, body] : criteria) {
        ++index;
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            body(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::cout << (check.ok() ? "PASS" : "FAIL") << "  [" << index << "] " << name << " (" << ms
                  << " ms)";
        if (!check.ok()) std::cout << ": " << check.failure();
        std::cout << '\n';
        failed += check.ok() ? 0 : 1;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed\n";
    return failed;
}
