#include "cqorbits.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"

#include "cq/audit.hpp"
#include "cq/orbits.hpp"
#include "cq/verify.hpp"

using ordered_json = nlohmann::ordered_json;

struct cq_engine {
    unsigned perm_cutoff = cq::kDefaultPermCutoff;
    unsigned box_cutoff = cq::kDefaultBoxCutoff;
    unsigned jobs = 1;
    std::string last_error;
};

namespace {

constexpr unsigned kMaxSequenceCount = 100;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

cq_status set_error(cq_engine* engine, cq_status status, const std::string& message) {
    engine->last_error = message;
    return status;
}

template <class Fn>
cq_status guarded(cq_engine* engine, char** out, Fn&& fn) {
    if (!engine) return CQ_ERROR_INVALID_ARGUMENT;
    if (!out) return set_error(engine, CQ_ERROR_INVALID_ARGUMENT, "null output parameter");
    *out = nullptr;
    engine->last_error.clear();
    try {
        const std::string result = fn();
        *out = dup_string(result);
        if (!*out) return set_error(engine, CQ_ERROR_OUT_OF_MEMORY, "allocation failed");
        return CQ_OK;
    } catch (const cq::CutoffError& e) {
        return set_error(engine, CQ_ERROR_CUTOFF_EXCEEDED, e.what());
    } catch (const cq::InternalError& e) {
        return set_error(engine, CQ_ERROR_INTERNAL, e.what());
    } catch (const std::invalid_argument& e) {
        return set_error(engine, CQ_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return set_error(engine, CQ_ERROR_OUT_OF_MEMORY, "allocation failed");
    } catch (const std::exception& e) {
        return set_error(engine, CQ_ERROR_INTERNAL, e.what());
    }
}

ordered_json subset_json(const cq::RootSubset& J) {
    ordered_json arr = ordered_json::array();
    for (unsigned i : J.members) arr.push_back(i);
    return arr;
}

ordered_json poly_json(const cq::RootSubset& J, const cq::IntPoly& p) {
    ordered_json row;
    row["subset"] = subset_json(J);
    ordered_json coeffs = ordered_json::array();
    for (const cq::Int& c : p.coeffs()) coeffs.push_back(cq::dec(c));
    row["coefficients"] = std::move(coeffs);
    row["polynomial"] = p.str();
    row["value_at_one"] = cq::dec(p.eval(1));
    row["unimodal"] = cq::is_unimodal(p);
    return row;
}

struct SequenceSpec {
    const char* name;
    unsigned start_index;
    const char* provenance;
    cq::Int (*term)(unsigned);
};

cq::Int borel_term(unsigned n) {
    const cq::Int value = cq::b_via_compositions(n);
    if (cq::b_via_skew(n) != value || cq::b_via_hermite(n) != value)
        throw cq::InternalError("borel_orbits: counting routes disagree at n = " + std::to_string(n));
    return value;
}

const SequenceSpec kSequences[] = {
    {"borel_orbits", 1,
     "composition sum weighted by involution counts, cross-checked against the "
     "skew-tableau and polynomial-evaluation routes",
     &borel_term},
    {"ordered_bell", 0, "binomial recurrence b_n = sum_k C(n,k) b_{n-k}, b_0 = 1",
     &cq::ordered_bell},
    {"involutions", 0, "two-term recurrence I(n) = I(n-1) + (n-1) I(n-2)",
     &cq::involution_count},
    {"fibonacci", 1, "two-term recurrence with F_1 = F_2 = 1", &cq::fibonacci},
    {"equivariant_orbits", 1,
     "n! times the ordered Bell number, cross-checked against the subset sum for small n",
     &cq::b_equivariant},
    {"special_subset_counts", 1,
     "two-term recurrence counting subsets of [n-1] with no two consecutive members",
     &cq::special_subset_count},
};

} // namespace

extern "C" {

const char* cq_version(void) {
    return "0.1.0";
}

const char* cq_status_name(cq_status status) {
    switch (status) {
        case CQ_OK: return "ok";
        case CQ_ERROR_INVALID_ARGUMENT: return "invalid argument";
        case CQ_ERROR_CUTOFF_EXCEEDED: return "cutoff exceeded";
        case CQ_ERROR_OUT_OF_MEMORY: return "out of memory";
        case CQ_ERROR_INTERNAL: return "internal cross-check failure";
    }
    return "unknown status";
}

cq_engine* cq_engine_new(void) {
    return new (std::nothrow) cq_engine();
}

void cq_engine_free(cq_engine* engine) {
    delete engine;
}

cq_status cq_engine_configure(cq_engine* engine, const char* key, long long value) {
    if (!engine) return CQ_ERROR_INVALID_ARGUMENT;
    engine->last_error.clear();
    if (!key) return set_error(engine, CQ_ERROR_INVALID_ARGUMENT, "null configuration key");
    if (value <= 0 || value > 1'000'000)
        return set_error(engine, CQ_ERROR_INVALID_ARGUMENT,
                         std::string("configuration value for '") + key + "' must be positive");
    const unsigned v = static_cast<unsigned>(value);
    if (std::strcmp(key, "perm_cutoff") == 0)
        engine->perm_cutoff = v;
    else if (std::strcmp(key, "box_cutoff") == 0)
        engine->box_cutoff = v;
    else if (std::strcmp(key, "jobs") == 0)
        engine->jobs = v;
    else
        return set_error(engine, CQ_ERROR_INVALID_ARGUMENT,
                         std::string("unknown configuration key '") + key + "'");
    return CQ_OK;
}

const char* cq_engine_last_error(const cq_engine* engine) {
    return engine ? engine->last_error.c_str() : "";
}

void cq_string_free(char* s) {
    std::free(s);
}

cq_status cq_count(cq_engine* engine, unsigned n, const char* method, char** out_value) {
    return guarded(engine, out_value, [&]() -> std::string {
        if (!method) throw std::invalid_argument("null method name");
        cq::Method m;
        if (!cq::parse_method(method, m))
            throw std::invalid_argument(std::string("unknown method '") + method +
                                        "'; expected compositions, skew, hermite or descents");
        return cq::dec(cq::borel_orbit_count(n, m, engine->perm_cutoff, engine->jobs));
    });
}

cq_status cq_b_poly(cq_engine* engine, unsigned n, const unsigned* members,
                    size_t members_len, char** out_json) {
    return guarded(engine, out_json, [&]() -> std::string {
        if (n == 0) throw std::invalid_argument("n must be >= 1");
        if (members_len > 0 && !members) throw std::invalid_argument("null subset with nonzero length");
        if (n > engine->perm_cutoff)
            throw cq::CutoffError("n = " + std::to_string(n) +
                                      " exceeds the permutation-scan cutoff of " +
                                      std::to_string(engine->perm_cutoff),
                                  engine->perm_cutoff);
        cq::RootSubset J;
        J.n = n;
        J.members.assign(members, members + members_len);
        for (std::size_t i = 0; i < J.members.size(); ++i) {
            if (J.members[i] < 1 || J.members[i] >= n)
                throw std::invalid_argument("subset member out of [1, n-1]");
            if (i > 0 && J.members[i] <= J.members[i - 1])
                throw std::invalid_argument("subset members must be strictly increasing");
        }
        return poly_json(J, cq::b_poly(n, J, engine->jobs)).dump();
    });
}

cq_status cq_table_report(cq_engine* engine, unsigned n, char** out_json) {
    return guarded(engine, out_json, [&]() -> std::string {
        if (n == 0) throw std::invalid_argument("n must be >= 1");
        if (n > engine->perm_cutoff)
            throw cq::CutoffError("table for n = " + std::to_string(n) +
                                      " exceeds the permutation-scan cutoff of " +
                                      std::to_string(engine->perm_cutoff),
                                  engine->perm_cutoff);
        ordered_json doc;
        doc["n"] = n;
        doc["order"] = "by size then lexicographic";
        if (n == 5) {
            const cq::TableAudit audit = cq::audit_published_table(engine->jobs);
            ordered_json rows = ordered_json::array();
            ordered_json discrepancies = ordered_json::array();
            for (const cq::AuditRow& row : audit.rows) {
                ordered_json r = poly_json(row.subset, row.computed);
                r["published"] = row.published.str();
                r["matches"] = row.matches;
                rows.push_back(std::move(r));
                if (row.matches) continue;
                ordered_json d;
                d["subset"] = subset_json(row.subset);
                d["published"] = row.published.str();
                d["computed"] = row.computed.str();
                d["published_value_at_one"] = cq::dec(row.published_at_one);
                d["computed_value_at_one"] = cq::dec(row.computed_at_one);
                d["identity_value"] = cq::dec(row.identity_value);
                if (row.published_at_one != row.identity_value) {
                    d["note"] = "published row evaluates to " + cq::dec(row.published_at_one) +
                                " at q = 1, violating the coset-count identity " +
                                cq::dec(row.identity_value) + "; the recomputed row satisfies it";
                } else {
                    d["note"] = "published row satisfies the coset-count identity " +
                                cq::dec(row.identity_value) +
                                " but its coefficients differ from the recomputation";
                }
                discrepancies.push_back(std::move(d));
            }
            doc["rows"] = std::move(rows);
            ordered_json a;
            a["reference"] = "published n = 5 enumerator table";
            a["rows_total"] = audit.total();
            a["rows_matching"] = audit.matching;
            a["discrepancies"] = std::move(discrepancies);
            doc["audit"] = std::move(a);
        } else {
            ordered_json rows = ordered_json::array();
            for (const cq::TableRow& row : cq::enumerator_table(n, engine->jobs))
                rows.push_back(poly_json(row.subset, row.poly));
            doc["rows"] = std::move(rows);
        }
        return doc.dump();
    });
}

cq_status cq_conjecture_report(cq_engine* engine, unsigned n, char** out_json) {
    return guarded(engine, out_json, [&]() -> std::string {
        if (n == 0) throw std::invalid_argument("n must be >= 1");
        if (n > engine->perm_cutoff)
            throw cq::CutoffError("conjecture scan for n = " + std::to_string(n) +
                                      " exceeds the permutation-scan cutoff of " +
                                      std::to_string(engine->perm_cutoff),
                                  engine->perm_cutoff);
        ordered_json doc;
        doc["n"] = n;
        ordered_json rows = ordered_json::array();
        ordered_json counterexamples = ordered_json::array();
        unsigned checked = 0;
        for (const cq::TableRow& row : cq::enumerator_table(n, engine->jobs)) {
            ++checked;
            const bool uni = cq::is_unimodal(row.poly);
            ordered_json r;
            r["subset"] = subset_json(row.subset);
            r["polynomial"] = row.poly.str();
            r["unimodal"] = uni;
            rows.push_back(std::move(r));
            if (!uni) {
                ordered_json c;
                c["subset"] = subset_json(row.subset);
                c["polynomial"] = row.poly.str();
                counterexamples.push_back(std::move(c));
            }
        }
        doc["subsets_checked"] = checked;
        doc["all_unimodal"] = counterexamples.empty();
        doc["counterexamples"] = std::move(counterexamples);
        doc["rows"] = std::move(rows);
        return doc.dump();
    });
}

cq_status cq_verify_report(cq_engine* engine, unsigned lo, unsigned hi, char** out_json) {
    return guarded(engine, out_json, [&]() -> std::string {
        cq::VerifyOptions options;
        options.jobs = engine->jobs;
        std::string range_label = "default";
        if (lo != 0 || hi != 0) {
            if (lo == 0 || hi < lo)
                throw std::invalid_argument("verification range must satisfy 1 <= lo <= hi");
            options.range = std::make_pair(lo, hi);
            range_label = std::to_string(lo) + ".." + std::to_string(hi);
        }
        const cq::VerifyReport report = cq::run_verification(options);
        ordered_json doc;
        doc["range"] = range_label;
        ordered_json checks = ordered_json::array();
        for (const cq::CheckResult& c : report.checks) {
            ordered_json item;
            item["name"] = c.name;
            item["range"] = c.range;
            item["status"] = cq::status_name(c.status);
            item["detail"] = c.detail;
            item["ms"] = c.ms;
            checks.push_back(std::move(item));
        }
        doc["checks"] = std::move(checks);
        doc["overall"] = report.all_passed() ? "pass" : "fail";
        doc["total_ms"] = report.total_ms;
        return doc.dump();
    });
}

cq_status cq_sequence_report(cq_engine* engine, const char* name, unsigned count,
                             char** out_json) {
    return guarded(engine, out_json, [&]() -> std::string {
        if (!name) throw std::invalid_argument("null sequence name");
        const SequenceSpec* spec = nullptr;
        for (const SequenceSpec& s : kSequences)
            if (std::strcmp(name, s.name) == 0) spec = &s;
        if (!spec) {
            std::string known;
            for (const SequenceSpec& s : kSequences) {
                if (!known.empty()) known += ", ";
                known += s.name;
            }
            throw std::invalid_argument(std::string("unknown sequence '") + name +
                                        "'; expected one of: " + known);
        }
        if (count == 0 || count > kMaxSequenceCount)
            throw std::invalid_argument("sequence count must lie in [1, " +
                                        std::to_string(kMaxSequenceCount) + "]");
        ordered_json doc;
        doc["name"] = spec->name;
        doc["start_index"] = spec->start_index;
        doc["count"] = count;
        doc["provenance"] = spec->provenance;
        ordered_json terms = ordered_json::array();
        for (unsigned i = 0; i < count; ++i)
            terms.push_back(cq::dec(spec->term(spec->start_index + i)));
        doc["terms"] = std::move(terms);
        return doc.dump();
    });
}

} // extern "C"
