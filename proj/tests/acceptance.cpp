// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "skewcyc/oracle.hpp"
#include "skewcyc/text.hpp"

using namespace skewcyc;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string witness;

    void fail(const std::string& why) {
        if (pass) witness = why;
        pass = false;
    }
    void need(const VerdictReport& r) {
        if (!r.pass) fail(r.claim + " " + r.config.dump() + " " + r.witness.value_or(r.detail));
    }
};

TestMatrixEntry entry(std::uint32_t p, int m, std::vector<std::int64_t> mod, int n) {
    TestMatrixEntry e;
    e.p = p;
    e.m = m;
    e.modulus = std::move(mod);
    e.n = n;
    return e;
}

FieldPtr f9() { return FiniteField::create(3, 2, {1, 0, 1}); }

std::vector<SkewCyclicCode> codes_q9(int n) {
    const auto f = f9();
    return census(n, f, f->aut(1), 100'000);
}

Outcome gray_isometry() {
    Outcome o;
    std::size_t pairs = 0;
    for (int n : {1, 2}) {
        const auto r = verify_gray_isometry(entry(3, 1, {0, 1}, n));
        o.need(r);
        if (r.mode != VerdictMode::Exhaustive) o.fail("q=3 n=" + std::to_string(n) + " was not exhaustive");
        pairs += n == 1 ? 729 : 531441;
    }
    auto big = entry(3, 2, {1, 0, 1}, 5);
    big.bounds.isometry_samples = 10'000;
    const auto r = verify_gray_isometry(big);
    o.need(r);
    o.detail = "q=3 n=1,2 exhaustive (" + std::to_string(pairs) + " pairs), q=9 n=5 " + r.detail;
    return o;
}

Outcome idempotents() {
    Outcome o;
    for (const auto& f : {FiniteField::create(3, 1, {0, 1}), f9(), FiniteField::create(5, 2, {2, 0, 1})})
        o.need(verify_idempotents(*f, make_idempotents(*f)));
    o.detail = "q = 3, 9, 25";
    return o;
}

Outcome census_counts() {
    Outcome o;
    const auto f = f9();
    for (int n : {1, 3, 5, 7}) {
        const auto r = verify_census(entry(3, 2, {1, 0, 1}, n));
        o.need(r);
        if (r.mode == VerdictMode::Skipped) o.fail("census skipped at n=" + std::to_string(n));
        const auto c = count_skew_cyclic_codes(n, f, f->aut(1));
        if (c.over_r != c.over_fq * c.over_fq * c.over_fq) o.fail("R-count is not the cube at n=" + std::to_string(n));
        o.detail += "n=" + std::to_string(n) + ":" + std::to_string(c.over_fq) + "/" + std::to_string(c.over_r) + " ";
        if ((n == 3 || n == 5) && (c.over_fq != 4 || c.over_r != 64))
            o.fail("n=" + std::to_string(n) + " gave " + std::to_string(c.over_fq) + "/" + std::to_string(c.over_r));
    }
    return o;
}

Outcome cardinality() {
    Outcome o;
    std::size_t count = 0;
    for (int n = 1; n <= 5; ++n)
        for (const auto& code : codes_q9(n)) {
            int expect = 3 * n;
            for (int k = 0; k < 3; ++k) expect -= code.component(k).generator().degree();
            const auto r = rank(code.gray_generator_matrix());
            if (r != static_cast<std::size_t>(expect)) o.fail(code_to_json(code).dump() + " rank " + std::to_string(r));
            ++count;
        }
    o.detail = std::to_string(count) + " codes, n = 1..5";
    return o;
}

Outcome duality() {
    Outcome o;
    std::size_t count = 0;
    for (int n = 1; n <= 3; ++n)
        for (const auto& code : codes_q9(n)) {
            o.need(verify_duality(code));
            o.need(verify_self_duality(code));
            ++count;
        }
    o.detail = std::to_string(count) + " codes, n = 1..3";
    return o;
}

Outcome dual_gray() {
    Outcome o;
    std::size_t count = 0;
    for (int n = 1; n <= 3; ++n)
        for (const auto& code : codes_q9(n)) {
            o.need(verify_dual_gray_commutation(code));
            ++count;
        }
    if (count < 20) o.fail("only " + std::to_string(count) + " codes");
    o.detail = std::to_string(count) + " codes, n = 1..3";
    return o;
}

Outcome closure() {
    Outcome o;
    OracleBounds bounds;
    bounds.exhaustive_threshold = 10'000;
    std::size_t count = 0;
    for (int n = 1; n <= 5; ++n)
        for (const auto& code : codes_q9(n))
            for (const auto& c : {code, code.dual()}) {
                if (span_size(*c.field(), c.log_q_size()) > bounds.exhaustive_threshold) continue;
                const auto r = verify_closure(c, bounds);
                o.need(r);
                if (r.mode != VerdictMode::Exhaustive) o.fail("closure not exhaustive for " + code_to_json(c).dump());
                o.need(verify_oracle_agreement(c, bounds));
                ++count;
            }
    o.detail = std::to_string(count) + " enumerable codes and duals, n = 1..5";
    return o;
}

Outcome idempotent_generators() {
    Outcome o;
    const auto codes = codes_q9(5);
    for (const auto& code : codes) {
        const auto r = verify_idempotent_generator(code);
        o.need(r);
        if (r.mode == VerdictMode::Skipped) o.fail("skipped " + code_to_json(code).dump());
    }
    o.detail = std::to_string(codes.size()) + " codes at n = 5";
    return o;
}

Outcome distance_law() {
    Outcome o;
    OracleBounds bounds;
    bounds.codeword_bound = 1'000'000;
    std::size_t count = 0, direct = 0;
    for (int n = 1; n <= 3; ++n)
        for (const auto& code : codes_q9(n)) {
            const auto r = verify_distance_law(code, bounds);
            o.need(r);
            if (r.mode == VerdictMode::Skipped) o.fail("skipped " + code_to_json(code).dump());
            if (span_size(*code.field(), code.log_q_size()) <= bounds.codeword_bound) {
                if (r.mode != VerdictMode::Exhaustive) o.fail("no direct check for " + code_to_json(code).dump());
                ++direct;
            }
            ++count;
        }
    o.detail = std::to_string(count) + " codes, " + std::to_string(direct) + " cross-checked by enumeration";
    return o;
}

Outcome negative_control_run() {
    Outcome o;
    std::set<std::string> caught;
    std::size_t total = 0;
    for (int n : {1, 2, 3, 5})
        for (const auto& r : negative_controls(entry(3, 2, {1, 0, 1}, n))) {
            ++total;
            if (r.pass) o.fail("control passed: " + r.claim + " n=" + std::to_string(n));
            else if (!r.witness) o.fail("no witness: " + r.claim);
            else caught.insert(r.claim);
        }
    // every claim verify_all reports must have a failing control
    for (const auto& r : verify_all({entry(3, 2, {1, 0, 1}, 2)})) {
        if (!caught.count(r.claim)) o.fail("no control for " + r.claim);
    }
    bool injected = false;
    for (const auto& r : verify_all({entry(3, 2, {1, 0, 1}, 3)}, true))
        if (!r.pass && r.witness) injected = true;
    if (!injected) o.fail("injected broken code was not caught");
    o.detail = std::to_string(total) + " controls over " + std::to_string(caught.size()) + " claims, all failing";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"gray isometry", gray_isometry},
        {"idempotent algebra", idempotents},
        {"census counts", census_counts},
        {"cardinality", cardinality},
        {"duality", duality},
        {"dual commutes with gray map", dual_gray},
        {"skew closure and oracle agreement", closure},
        {"idempotent generators", idempotent_generators},
        {"distance law", distance_law},
        {"negative controls", negative_control_run},
    };
    bool all = true;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %d %s: %s (%.1fs)%s%s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(), secs,
                    o.pass ? "" : " witness: ", o.pass ? "" : o.witness.c_str());
        std::fflush(stdout);
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
