#include "mulli/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "mulli/bg_symbol.hpp"
#include "mulli/enumeration.hpp"
#include "mulli/error.hpp"
#include "mulli/io.hpp"
#include "mulli/mullineux.hpp"
#include "mulli/rim.hpp"

namespace mulli {

namespace {

class Check {
public:
    explicit Check(std::string name) { result_.name = std::move(name); }

    // Records one case; `what` is only evaluated for the first failure.
    void expect(bool ok, const std::function<std::string()>& what) {
        ++result_.cases;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.counterexample = what();
        }
    }

    // Runs `body`, turning any library error into a recorded failure.
    void guarded(const std::string& where, const std::function<void()>& body) {
        try {
            body();
        } catch (const Error& e) {
            expect(false, [&] { return where + ": " + std::string(e.what()); });
        }
    }

    PropertyResult take() { return std::move(result_); }

private:
    PropertyResult result_;
};

std::string show(const Partition& lambda) { return "(" + format_partition(lambda) + ")"; }

std::vector<int> all_hooks(const Partition& lambda) {
    std::vector<int> hooks;
    for (Cell c : lambda.cells()) hooks.push_back(hook_length(lambda, c));
    std::sort(hooks.begin(), hooks.end());
    return hooks;
}

}  // namespace

std::vector<PropertyResult> verify_properties(Modulus p, int n_max) {
    if (n_max < 0) throw Error(ErrorKind::precondition, "n_max must be non-negative");

    Check conj("conjugate is a size-preserving involution");
    Check hooks("hook multiset invariant under conjugation (n <= 15)");
    Check diag("diagonal hooks of self-conjugate partitions are distinct odd, sum n");
    Check trunc("BG truncation to k rows is p-regular");
    Check rim_size("p-rim removal conserves size; segment lengths p except last");
    Check star("p-rim* statistics and removal keep self-conjugacy");
    Check even("a* even implies p | a*");
    Check parity("on BG: eps*=0 <=> a* even <=> no diagonal node <=> p | a*");
    Check closure("BG closed under p-rim* removal");
    Check round("reconstruct(compute_symbol(l)) = l, symbol valid");
    Check invol("Mullineux map is a size-preserving involution");
    Check fixed("symbol fixed-point criterion agrees with m(l) = l");
    Check degen("m equals conjugation when p > n");
    Check inject("BG-symbol injective on self-conjugate partitions");
    Check transfer("BG-symbols of BG-partitions are self-Mullineux symbols");
    Check extend("one-layer extension rebuilds every self-conjugate partition");
    Check bij("bg_to_mull and mull_to_bg are inverse bijections BG <-> M");
    Check counts("#BG = #M = #distinct odd non-divisible = GF coefficient");
    Check corr("diagonal hooks biject self-conjugate with distinct odd parts");

    const auto gf = bg_count_via_gf(p, n_max);

    for (int n = 0; n <= n_max; ++n) {
        std::int64_t bg_count = 0;
        std::int64_t m_count = 0;
        std::int64_t odd_count = 0;
        std::map<std::vector<int>, Partition> seen_symbols;  // a-row then r-row
        std::set<Partition> hook_images;
        std::vector<Partition> bg_list;
        std::vector<Partition> m_list;

        for_each_partition(n, [&](const Partition& lambda) {
            const Partition lc = conjugate(lambda);
            conj.expect(conjugate(lc) == lambda && lc.size() == n && lc.length() == lambda.part(1),
                        [&] { return show(lambda); });
            if (n <= 15) {
                hooks.expect(all_hooks(lambda) == all_hooks(lc), [&] { return show(lambda); });
            }
            if (is_distinct_odd_nondivisible(lambda, p)) ++odd_count;

            if (!lambda.empty()) {
                rim_size.guarded(show(lambda), [&] {
                    const PRim pr = p_rim(lambda, p);
                    bool segments_ok = pr.cells.back().row == lambda.length();
                    for (std::size_t s = 0; s + 1 < pr.segment_count(); ++s) {
                        segments_ok = segments_ok && pr.segment(s).size() == static_cast<std::size_t>(p.value());
                    }
                    const Partition rest = remove_p_rim(lambda, p);
                    rim_size.expect(segments_ok && rest.size() + pr.size() == n,
                                    [&] { return show(lambda); });
                });
            }

            if (is_p_regular(lambda, p)) {
                round.guarded(show(lambda), [&] {
                    const Symbol g = compute_symbol(lambda, p);
                    round.expect(validate_symbol(g).valid && reconstruct(g) == lambda &&
                                     g.total() == n,
                                 [&] { return show(lambda); });
                });
                invol.guarded(show(lambda), [&] {
                    const Partition m = mullineux_map(lambda, p);
                    invol.expect(m.size() == n && is_p_regular(m, p) && mullineux_map(m, p) == lambda,
                                 [&] { return show(lambda); });
                    const bool fixed_by_symbol = is_self_mullineux(lambda, p);
                    fixed.expect(fixed_by_symbol == (m == lambda), [&] { return show(lambda); });
                    if (fixed_by_symbol) {
                        ++m_count;
                        m_list.push_back(lambda);
                    }
                    if (p.value() > n) {
                        degen.expect(m == lc, [&] { return show(lambda); });
                    }
                });
            }

            if (!is_self_conjugate(lambda)) return;

            const auto dh = diagonal_hook_lengths(lambda);
            bool strictly_odd = true;
            int sum = 0;
            for (std::size_t i = 0; i < dh.size(); ++i) {
                strictly_odd = strictly_odd && dh[i] % 2 == 1 && (i == 0 || dh[i] < dh[i - 1]);
                sum += dh[i];
            }
            diag.expect(strictly_odd && sum == n, [&] { return show(lambda); });

            corr.guarded(show(lambda), [&] {
                const Partition h = diagonal_hook_partition(lambda);
                const bool fresh = hook_images.insert(h).second;
                corr.expect(fresh && self_conjugate_from_hooks(h) == lambda &&
                                is_bg_partition(lambda, p) == is_distinct_odd_nondivisible(h, p),
                            [&] { return show(lambda); });
            });

            const bool bg = is_bg_partition(lambda, p);
            if (bg) {
                ++bg_count;
                bg_list.push_back(lambda);
            }

            if (lambda.empty()) return;

            star.guarded(show(lambda), [&] {
                const PRimStar s = p_rim_star(lambda, p);
                bool mirror = s.lower.size() == s.upper.size();
                for (Cell c : s.upper) mirror = mirror && s.lower.contains(transpose(c));
                const Partition rest = remove_p_rim_star(lambda, p);
                star.expect(mirror && 2 * s.r_star == s.a_star + s.eps_star &&
                                is_self_conjugate(rest) && rest.size() + s.a_star == n,
                            [&] { return show(lambda); });

                even.expect(s.a_star % 2 == 1 || p.divides(s.a_star), [&] { return show(lambda); });

                if (bg) {
                    const bool e0 = s.eps_star == 0;
                    const bool a_even = s.a_star % 2 == 0;
                    const bool no_diag = std::none_of(s.upper.begin(), s.upper.end(),
                                                      [](Cell c) { return c.row == c.col; });
                    const bool divisible = p.divides(s.a_star);
                    parity.expect(e0 == a_even && a_even == no_diag && no_diag == divisible,
                                  [&] { return show(lambda); });
                    closure.expect(is_bg_partition(rest, p), [&] { return show(lambda); });
                    trunc.expect(is_p_regular(truncate_to_k(lambda), p), [&] { return show(lambda); });
                }

                const int residue = ((s.r_star - s.eps_star) % p.value() + p.value()) % p.value();
                if (s.eps_star == 1 || residue == 0) {
                    extend.expect(extend_by_rim_star(rest, s.eps_star, residue, p) == lambda,
                                  [&] { return show(lambda); });
                }
            });

            inject.guarded(show(lambda), [&] {
                const Symbol b = compute_bg_symbol(lambda, p);
                std::vector<int> key = b.a_row();
                const auto r = b.r_row();
                key.push_back(-1);
                key.insert(key.end(), r.begin(), r.end());
                const auto [it, fresh] = seen_symbols.emplace(key, lambda);
                inject.expect(fresh, [&] {
                    return show(lambda) + " and " + show(it->second) + " share " + format_symbol(b);
                });
                if (bg) {
                    bool ok = validate_symbol(b).valid && is_self_mullineux_symbol(b);
                    for (std::size_t i = 0; i < b.size(); ++i) {
                        ok = ok && b.epsilon(i) == mullineux_epsilon(b[i].a, p) &&
                             b[i].a == 2 * b[i].r - b.epsilon(i);
                    }
                    transfer.expect(ok, [&] { return show(lambda) + " -> " + format_symbol(b); });
                }
            });
        });

        std::set<Partition> images;
        for (const Partition& lambda : bg_list) {
            bij.guarded(show(lambda), [&] {
                const Partition m = bg_to_mullineux(lambda, p);
                images.insert(m);
                bij.expect(m.size() == n && is_self_mullineux(m, p) && mullineux_to_bg(m, p) == lambda,
                           [&] { return show(lambda) + " -> " + show(m); });
            });
        }
        bij.expect(images.size() == bg_list.size(), [&] { return "bg_to_mull not injective at n=" + std::to_string(n); });
        for (const Partition& mu : m_list) {
            bij.guarded(show(mu), [&] {
                const Partition b = mullineux_to_bg(mu, p);
                bij.expect(is_bg_partition(b, p) && bg_to_mullineux(b, p) == mu &&
                               compute_bg_symbol(b, p).same_entries(compute_symbol(mu, p)),
                           [&] { return show(mu) + " -> " + show(b); });
            });
        }

        counts.expect(bg_count == m_count && m_count == odd_count &&
                          odd_count == gf[static_cast<std::size_t>(n)],
                      [&] {
                          return "n=" + std::to_string(n) + ": BG " + std::to_string(bg_count) +
                                 ", M " + std::to_string(m_count) + ", odd " +
                                 std::to_string(odd_count) + ", GF " +
                                 std::to_string(gf[static_cast<std::size_t>(n)]);
                      });
    }

    // The implication of a* even => p | a* is strict; one known witness.
    if (p.value() == 3 && n_max >= 12) {
        const Partition witness{5, 3, 2, 1, 1};
        const PRimStar s = p_rim_star(witness, p);
        even.expect(s.a_star == 9 && s.a_star % 2 == 1 && p.divides(s.a_star),
                    [] { return std::string("converse witness (5,3,2,1,1) misbehaves"); });
    }

    std::vector<PropertyResult> out;
    for (Check* c : {&conj, &hooks, &diag, &trunc, &rim_size, &star, &even, &parity, &closure,
                     &round, &invol, &fixed, &degen, &inject, &transfer, &extend, &bij, &counts,
                     &corr}) {
        out.push_back(c->take());
    }
    return out;
}

}  // namespace mulli
