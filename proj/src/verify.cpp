#include "cq/verify.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "cq/audit.hpp"
#include "cq/orbits.hpp"

namespace cq {

const char* status_name(CheckResult::Status s) {
    switch (s) {
        case CheckResult::Status::Pass: return "pass";
        case CheckResult::Status::Fail: return "fail";
        case CheckResult::Status::Skip: return "skip";
    }
    return "?";
}

bool VerifyReport::all_passed() const {
    for (const CheckResult& c : checks)
        if (c.failed()) return false;
    return true;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string subset_str(const RootSubset& J) {
    std::string s = "{";
    for (std::size_t i = 0; i < J.members.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(J.members[i]);
    }
    return s + "}";
}

std::string perm_str(const Permutation& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.one_line.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w.one_line[i]);
    }
    return s + "]";
}

std::string shape_str(const SkewShape& shape) {
    std::string s;
    for (std::size_t f = 0; f < shape.factors.size(); ++f) {
        if (f) s += 'x';
        s += '(';
        const auto& parts = shape.factors[f].parts;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts[i]);
        }
        s += ')';
    }
    return s;
}

struct Window {
    const VerifyOptions& opt;

    unsigned lo() const { return opt.range ? std::max(1u, opt.range->first) : 1u; }
    unsigned hi(unsigned dflt) const {
        return opt.range ? std::min(dflt, opt.range->second) : dflt;
    }
    bool covers(unsigned n) const {
        return !opt.range || (opt.range->first <= n && n <= opt.range->second);
    }
};

template <class Fn>
CheckResult run_timed(std::string name, std::string range, Fn&& fn) {
    CheckResult r;
    r.name = std::move(name);
    r.range = std::move(range);
    r.status = CheckResult::Status::Pass;
    const auto t0 = Clock::now();
    try {
        fn(r);
    } catch (const std::exception& e) {
        r.status = CheckResult::Status::Fail;
        r.detail = e.what();
    }
    r.ms = ms_since(t0);
    return r;
}

CheckResult skipped(std::string name, std::string why) {
    CheckResult r;
    r.name = std::move(name);
    r.status = CheckResult::Status::Skip;
    r.detail = std::move(why);
    return r;
}

void fail(CheckResult& r, const std::string& witness) {
    r.status = CheckResult::Status::Fail;
    if (!r.detail.empty()) r.detail += "; ";
    r.detail += witness;
}

CheckResult check_example_n3(const Window& win, unsigned jobs) {
    if (!win.covers(3)) return skipped("example_agreement_n3", "n = 3 outside range");
    return run_timed("example_agreement_n3", "n = 3", [&](CheckResult& r) {
        const auto t0 = Clock::now();
        const Int expected = 22;
        const Int by_comp = b_via_compositions(3);
        const Int by_skew = b_via_skew(3);
        const Int by_herm = b_via_hermite(3);
        const Int by_desc = b_via_descents(3, kDefaultPermCutoff, jobs);
        const double elapsed = ms_since(t0);
        for (auto [name, got] : {std::pair<const char*, const Int*>{"compositions", &by_comp},
                                 {"skew", &by_skew},
                                 {"hermite", &by_herm},
                                 {"descents", &by_desc}}) {
            if (*got != expected) fail(r, std::string(name) + " gave " + dec(*got) + ", expected 22");
        }
        if (elapsed >= 10.0) fail(r, "took " + std::to_string(elapsed) + " ms, budget 10 ms");
        if (r.status == CheckResult::Status::Pass)
            r.detail = "all four routes give 22 in " + std::to_string(elapsed) + " ms";
    });
}

CheckResult check_three_way(const Window& win, unsigned jobs) {
    const unsigned lo = win.lo(), hi = win.hi(25), hi_desc = win.hi(9);
    if (lo > hi) return skipped("three_way_agreement", "range empty");
    std::ostringstream range;
    range << "n = " << lo << ".." << hi << " (descents to " << hi_desc << ")";
    return run_timed("three_way_agreement", range.str(), [&](CheckResult& r) {
        const auto t0 = Clock::now();
        for (unsigned n = lo; n <= hi; ++n) {
            const Int c = b_via_compositions(n);
            const Int s = b_via_skew(n);
            const Int h = b_via_hermite(n);
            if (c != s || c != h) {
                fail(r, "n=" + std::to_string(n) + ": compositions=" + dec(c) + " skew=" + dec(s) +
                            " hermite=" + dec(h));
                return;
            }
            if (n <= hi_desc) {
                const Int d = b_via_descents(n, kDefaultPermCutoff, jobs);
                if (d != c) {
                    fail(r, "n=" + std::to_string(n) + ": descents=" + dec(d) + " vs " + dec(c));
                    return;
                }
            }
        }
        const double elapsed = ms_since(t0);
        if (elapsed >= 60000.0) fail(r, "took " + std::to_string(elapsed / 1000.0) + " s, budget 60 s");
    });
}

CheckResult check_table_audit(const Window& win, unsigned jobs) {
    if (!win.covers(5)) return skipped("table_audit_n5", "n = 5 outside range");
    return run_timed("table_audit_n5", "n = 5, 16 rows", [&](CheckResult& r) {
        const TableAudit audit = audit_published_table(jobs);
        // every recomputed row must satisfy the coset-count identity
        for (const AuditRow& row : audit.rows)
            if (row.computed_at_one != row.identity_value)
                fail(r, "recomputed row " + subset_str(row.subset) +
                            " violates the coset-count identity");
        // the identity-violating misprint must be caught and fully diagnosed
        bool flagged = false;
        for (const AuditRow& row : audit.rows) {
            if (row.subset.members != std::vector<unsigned>{3, 4}) continue;
            flagged = !row.matches && row.computed.str() == "6q^2+13q+1" &&
                      row.published_at_one == 15 && row.identity_value == 20;
        }
        if (!flagged) fail(r, "{3,4} not flagged as 6q^2+13q+1 with published value 15 != 20");
        // stated expectation: exactly 15 of 16 rows match byte for byte,
        // {3,4} being the sole discrepancy
        if (audit.matching != 15) {
            std::string extra;
            for (const AuditRow& row : audit.rows) {
                if (row.matches || row.subset.members == std::vector<unsigned>{3, 4}) continue;
                if (!extra.empty()) extra += "; ";
                extra += subset_str(row.subset) + " computed " + row.computed.str() +
                         " vs published " + row.published.str() + " (both give " +
                         dec(row.published_at_one) + " at q=1)";
            }
            fail(r, std::to_string(audit.matching) +
                        "/16 rows match, stated expectation is 15/16; additional "
                        "identity-preserving discrepancy: " +
                        extra);
        }
        if (r.status == CheckResult::Status::Pass)
            r.detail = "15/16 rows match; published {3,4} row gives 15 at q=1, violating the "
                       "coset-count identity 20; recomputed row 6q^2+13q+1 satisfies it";
    });
}

CheckResult check_parabolic_identities(const Window& win, unsigned jobs) {
    const unsigned lo = win.lo(), hi_euler = win.hi(8), hi_value = win.hi(7);
    if (lo > std::max(hi_euler, hi_value))
        return skipped("parabolic_identities", "range empty");
    std::ostringstream range;
    range << "n <= " << hi_euler << " / value identity n <= " << hi_value;
    return run_timed("parabolic_identities", range.str(), [&](CheckResult& r) {
        for (unsigned n = lo; n <= hi_euler; ++n) {
            const RootSubset empty{n, {}};
            if (b_poly(n, empty, jobs) != eulerian_poly(n, jobs)) {
                fail(r, "empty-subset polynomial differs from descent histogram at n=" +
                            std::to_string(n));
                return;
            }
            RootSubset full{n, {}};
            for (unsigned i = 1; i + 1 <= n; ++i) full.members.push_back(i);
            if (b_poly(n, full, jobs) != IntPoly::one()) {
                fail(r, "full-subset polynomial is not 1 at n=" + std::to_string(n));
                return;
            }
        }
        for (unsigned n = lo; n <= hi_value; ++n) {
            for (const RootSubset& J : all_subsets(n)) {
                if (b_poly(n, J, jobs).eval(1) != coset_count(J)) {
                    fail(r, "value at 1 differs from coset count at n=" + std::to_string(n) +
                                " J=" + subset_str(J));
                    return;
                }
            }
        }
    });
}

CheckResult check_exponent_statistics(const Window& win) {
    const unsigned lo = win.lo(), hi = win.hi(7);
    if (lo > hi) return skipped("exponent_statistic_agreement", "range empty");
    return run_timed("exponent_statistic_agreement", "n = " + std::to_string(lo) + ".." + std::to_string(hi),
                     [&](CheckResult& r) {
        for (unsigned n = lo; n <= hi; ++n) {
            for (const RootSubset& J : special_subsets(n)) {
                for (const Permutation& w : min_coset_reps(n, J)) {
                    if (root_exponent(w, J) != stat_a(w, J) + stat_b(w, J)) {
                        fail(r, "n=" + std::to_string(n) + " J=" + subset_str(J) +
                                    " w=" + perm_str(w));
                        return;
                    }
                }
            }
        }
    });
}

CheckResult check_skew_vs_enumeration(const Window& win) {
    const unsigned lo = win.lo(), hi = win.hi(8);
    const bool pinned = win.covers(9);
    if (lo > hi && !pinned) return skipped("skew_formula_vs_enumeration", "range empty");
    std::string range = "all shapes of weight <= " + std::to_string(hi);
    if (pinned) range += " and the 9-box pinned shape";
    return run_timed("skew_formula_vs_enumeration", range, [&](CheckResult& r) {
        for (unsigned n = lo; n <= hi; ++n) {
            for (const SkewShape& shape : skew_shapes_of(n)) {
                if (num_skew_syt(shape) != enumerate_syt(shape)) {
                    fail(r, "shape " + shape_str(shape));
                    return;
                }
            }
        }
        if (pinned) {
            const SkewShape shape{{Partition{{3, 2}}, Partition{{2, 1, 1}}}};
            const Int formula = num_skew_syt(shape);
            if (formula != 1890) fail(r, "pinned shape formula gave " + dec(formula));
            if (enumerate_syt(shape) != 1890) fail(r, "pinned shape enumeration is not 1890");
        }
    });
}

CheckResult check_involution_identities(const Window& win) {
    const unsigned lo = win.lo();
    const unsigned hi_rsk = win.hi(12), hi_brute = win.hi(9), hi_gen = win.hi(20);
    if (lo > std::max({hi_rsk, hi_brute, hi_gen}))
        return skipped("involution_identities", "range empty");
    std::ostringstream range;
    range << "tableau sum n <= " << hi_rsk << ", brute force n <= " << hi_brute
          << ", row value n <= " << hi_gen;
    return run_timed("involution_identities", range.str(), [&](CheckResult& r) {
        for (unsigned n = lo; n <= hi_rsk; ++n) {
            if (involution_count(n) != total_syt(n)) {
                fail(r, "tableau sum differs at n=" + std::to_string(n));
                return;
            }
        }
        for (unsigned n = lo; n <= hi_brute; ++n) {
            if (Int(enumerate_involutions(n).size()) != involution_count(n)) {
                fail(r, "brute-force count differs at n=" + std::to_string(n));
                return;
            }
        }
        for (unsigned n = lo; n <= hi_gen; ++n) {
            if (hermite_eval(n, 1) != involution_count(n)) {
                fail(r, "row value at 1 differs at n=" + std::to_string(n));
                return;
            }
        }
    });
}

CheckResult check_polynomial_table(const Window& win) {
    const unsigned hi_conv = win.hi(12);
    return run_timed("polynomial_table", "rows 0..4 exact, convolution n,k <= " + std::to_string(hi_conv),
                     [&](CheckResult& r) {
        const std::vector<std::vector<long long>> expected = {
            {1}, {0, 1}, {0, 1, 1}, {0, 0, 3, 1}, {0, 0, 3, 6, 1}};
        for (unsigned k = 0; k < expected.size(); ++k) {
            std::vector<Int> coeffs(expected[k].begin(), expected[k].end());
            if (hermite_poly(k) != IntPoly(std::move(coeffs))) {
                fail(r, "row " + std::to_string(k) + " is " + hermite_poly(k).str("y"));
                return;
            }
        }
        for (unsigned n = 0; n <= hi_conv; ++n) {
            for (unsigned k = 1; k <= hi_conv; ++k) {
                if (hermite_eval(n, Int(k)) != hermite_via_convolution(n, k)) {
                    fail(r, "eval/convolution mismatch at n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
                    return;
                }
            }
        }
    });
}

CheckResult check_orbit_bounds(const Window& win) {
    const unsigned lo = win.lo(), hi = win.hi(20);
    if (lo > hi) return skipped("orbit_bounds", "range empty");
    return run_timed("orbit_bounds", "strict 3.." + std::to_string(hi) + ", equalities at n <= 2",
                     [&](CheckResult& r) {
        for (unsigned n = lo; n <= hi; ++n) {
            const BoundsReport b = check_bounds(n);
            if (!b.all_ok()) {
                fail(r, "chain broken at n=" + std::to_string(n) + ": " + dec(b.lower) + " / " +
                            dec(b.value) + " / " + dec(b.upper) + " / " + dec(b.equivariant));
                return;
            }
        }
        if (win.covers(2) && check_bounds(2).value != 4)
            fail(r, "upper bound not attained at n=2");
    });
}

CheckResult check_equivariant_identity(const Window& win) {
    const unsigned lo = win.lo(), hi = win.hi(9);
    if (lo > hi) return skipped("equivariant_identity", "range empty");
    return run_timed("equivariant_identity", "n = " + std::to_string(lo) + ".." + std::to_string(hi),
                     [&](CheckResult& r) {
        for (unsigned n = lo; n <= hi; ++n) {
            if (factorial(n) * ordered_bell(n) != wonderful_sum(n)) {
                fail(r, "subset sum differs at n=" + std::to_string(n));
                return;
            }
        }
    });
}

CheckResult check_asymptotics(const Window& win) {
    const bool bell = win.covers(20), fib = win.covers(30);
    if (!bell && !fib) return skipped("asymptotic_ratios", "n = 20 and 30 outside range");
    return run_timed("asymptotic_ratios", "bell at n = 20, fibonacci at n = 30", [&](CheckResult& r) {
        std::ostringstream note;
        if (bell) {
            const double ratio = asymptotic_ratios(20).bell_ratio;
            if (std::abs(ratio - 1.0) >= 1e-3)
                fail(r, "bell ratio at 20 is " + std::to_string(ratio));
            else
                note << "bell ratio 20: " << ratio;
        }
        if (fib) {
            const double ratio = asymptotic_ratios(30).fib_ratio;
            if (std::abs(ratio - 1.0) >= 1e-6)
                fail(r, "fibonacci ratio at 30 is " + std::to_string(ratio));
            else {
                if (note.tellp() > 0) note << ", ";
                note << "fibonacci ratio 30: " << ratio;
            }
        }
        if (r.status == CheckResult::Status::Pass) r.detail = note.str();
    });
}

CheckResult check_unimodality(const Window& win, unsigned jobs) {
    const unsigned lo = win.lo(), hi = win.hi(7);
    if (lo > hi) return skipped("unimodality_scan", "range empty");
    return run_timed("unimodality_scan", "all subsets, n = " + std::to_string(lo) + ".." + std::to_string(hi),
                     [&](CheckResult& r) {
        // Conjectural property: the outcome is recorded, never asserted.
        std::vector<std::string> counterexamples;
        unsigned scanned = 0;
        for (unsigned n = lo; n <= hi; ++n) {
            for (const RootSubset& J : all_subsets(n)) {
                ++scanned;
                const IntPoly p = b_poly(n, J, jobs);
                if (!is_unimodal(p))
                    counterexamples.push_back("n=" + std::to_string(n) + " J=" + subset_str(J) +
                                              ": " + p.str());
            }
        }
        if (counterexamples.empty()) {
            r.detail = "all " + std::to_string(scanned) + " polynomials unimodal";
        } else {
            r.detail = "counterexamples found: ";
            for (std::size_t i = 0; i < counterexamples.size(); ++i) {
                if (i) r.detail += "; ";
                r.detail += counterexamples[i];
            }
        }
    });
}

} // namespace

VerifyReport run_verification(const VerifyOptions& options) {
    const Window win{options};
    const unsigned jobs = std::max(1u, options.jobs);
    const auto t0 = Clock::now();
    VerifyReport report;
    report.checks.push_back(check_example_n3(win, jobs));
    report.checks.push_back(check_three_way(win, jobs));
    report.checks.push_back(check_table_audit(win, jobs));
    report.checks.push_back(check_parabolic_identities(win, jobs));
    report.checks.push_back(check_exponent_statistics(win));
    report.checks.push_back(check_skew_vs_enumeration(win));
    report.checks.push_back(check_involution_identities(win));
    report.checks.push_back(check_polynomial_table(win));
    report.checks.push_back(check_orbit_bounds(win));
    report.checks.push_back(check_equivariant_identity(win));
    report.checks.push_back(check_asymptotics(win));
    report.checks.push_back(check_unimodality(win, jobs));
    report.total_ms = ms_since(t0);
    return report;
}

} // namespace cq
