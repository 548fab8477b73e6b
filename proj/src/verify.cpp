#include "verify.hpp"

#include <chrono>
#include <random>

namespace landau {

namespace {

json counters_json(const Counters& c) {
    return {{"ok_calls", c.ok_calls}, {"good_interval_calls", c.good_calls}, {"soundness_samples", c.sample_calls}};
}

Counters counters_from(const json& j) {
    Counters c;
    c.ok_calls = j.at("ok_calls").get<u64>();
    c.good_calls = j.at("good_interval_calls").get<u64>();
    c.sample_calls = j.at("soundness_samples").get<u64>();
    return c;
}

u128 u128_from(const json& j) { return parse_u128(j.get<std::string>()); }

u128 uniform_in(std::mt19937_64& rng, u128 a, u128 b) {
    u128 span = b - a + 1;
    u128 r = (u128(rng()) << 64) | rng();
    return a + (span == 0 ? r : r % span);
}

}  // namespace

json Certificate::to_json() const {
    json j;
    j["theorem_id"] = theorem_id;
    j["range"] = {to_string(n1), to_string(n2)};
    if (all_pass) {
        j["verdict"] = "all-pass";
    } else {
        j["verdict"] = "largest-fail";
        j["fail_n"] = to_string(fail_n);
        j["fail_status"] = fail_exact ? "refuted" : "bounded, not exact";
        j["witness"] = witness;
    }
    j["counters"] = counters_json(counters);
    j["bound_trail"] = bound_trail;
    j["wall_time"] = wall_time;
    return j;
}

Certificate Certificate::from_json(const json& j) {
    Certificate c;
    c.theorem_id = j.at("theorem_id").get<std::string>();
    c.n1 = u128_from(j.at("range").at(0));
    c.n2 = u128_from(j.at("range").at(1));
    std::string v = j.at("verdict").get<std::string>();
    if (v == "all-pass") {
        c.all_pass = true;
    } else if (v == "largest-fail") {
        c.all_pass = false;
        c.fail_n = u128_from(j.at("fail_n"));
        c.fail_exact = j.at("fail_status").get<std::string>() == "refuted";
        c.witness = j.at("witness");
    } else {
        fail(ErrorCode::parameter, "unknown verdict '" + v + "'");
    }
    c.counters = counters_from(j.at("counters"));
    c.bound_trail = j.at("bound_trail");
    c.wall_time = j.at("wall_time").get<double>();
    return c;
}

json OkRecCheckpoint::to_json() const {
    json st = json::array();
    for (auto& [a, b] : stack) st.push_back({to_string(a), to_string(b)});
    return {{"kind", "ok_rec"},        {"theorem_id", theorem_id},   {"range", {to_string(n1), to_string(n2)}},
            {"stack", st},             {"counters", counters_json(counters)}, {"samples_left", samples_left}};
}

OkRecCheckpoint OkRecCheckpoint::from_json(const json& j) {
    if (j.value("kind", "") != "ok_rec") fail(ErrorCode::parameter, "not an ok_rec checkpoint");
    OkRecCheckpoint c;
    c.theorem_id = j.at("theorem_id").get<std::string>();
    c.n1 = u128_from(j.at("range").at(0));
    c.n2 = u128_from(j.at("range").at(1));
    for (auto& e : j.at("stack")) {
        u128 a = u128_from(e.at(0)), b = u128_from(e.at(1));
        if (a > b || a < c.n1 || b > c.n2) fail(ErrorCode::integrity, "checkpoint interval outside the range");
        c.stack.emplace_back(a, b);
    }
    c.counters = counters_from(j.at("counters"));
    c.samples_left = j.at("samples_left").get<unsigned>();
    return c;
}

Certificate ok_rec_resume(const TheoremSuite& suite, const OkRecCheckpoint& start, const OkRecOptions& opt) {
    if (start.theorem_id != suite.id)
        fail(ErrorCode::parameter, "checkpoint is for '" + start.theorem_id + "', not '" + suite.id + "'");
    auto t0 = std::chrono::steady_clock::now();
    OkRecCheckpoint cp = start;
    Certificate cert;
    cert.theorem_id = suite.id;
    cert.n1 = cp.n1;
    cert.n2 = cp.n2;
    std::mt19937_64 rng(opt.seed ^ u64(cp.counters.good_calls));
    auto stop = [&](ErrorCode code, const std::string& msg) {
        throw Interrupted(code, msg, cp.to_json());
    };
    while (!cp.stack.empty()) {
        if (opt.max_good_calls && cp.counters.good_calls >= opt.max_good_calls)
            stop(ErrorCode::resource, "good_interval call budget reached");
        auto [a, b] = cp.stack.back();
        try {
            bool good = suite.good(a, b);
            cp.stack.pop_back();
            ++cp.counters.good_calls;
            if (good) {
                if (cp.samples_left && b > a) {
                    --cp.samples_left;
                    ++cp.counters.sample_calls;
                    u128 n = uniform_in(rng, a, b);
                    if (suite.ok(n) == Verdict::fail)
                        fail(ErrorCode::integrity, "good_interval accepted [" + to_string(a) + ", " + to_string(b) +
                                                       "] but ok fails at " + to_string(n));
                }
                continue;
            }
            if (a == b) {
                ++cp.counters.ok_calls;
                Verdict v = suite.ok(a);
                cert.bound_trail.push_back({{"n", to_string(a)}, {"ok", verdict_name(v)}});
                if (v != Verdict::pass) {
                    cert.all_pass = false;
                    cert.fail_n = a;
                    cert.fail_exact = v == Verdict::fail;
                    if (suite.witness) cert.witness = suite.witness(a);
                    break;
                }
                continue;
            }
            u128 mid = a + (b - a) / 2;
            cp.stack.emplace_back(a, mid);
            cp.stack.emplace_back(mid + 1, b);
        } catch (const Interrupted&) {
            throw;
        } catch (const Error& e) {
            // the interval being processed stays on the stack
            if (cp.stack.empty() || cp.stack.back() != std::make_pair(a, b)) cp.stack.emplace_back(a, b);
            stop(e.code, std::string(e.what()) + " (while checking [" + to_string(a) + ", " + to_string(b) + "])");
        }
    }
    cert.counters = cp.counters;
    cert.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return cert;
}

Certificate ok_rec(const TheoremSuite& suite, u128 n1, u128 n2, const OkRecOptions& opt) {
    if (n1 > n2) fail(ErrorCode::usage, "ok_rec needs n1 <= n2");
    if (n1 < suite.domain_lo || n2 > suite.domain_hi)
        fail(ErrorCode::domain, "range outside the domain of " + suite.id);
    OkRecCheckpoint cp;
    cp.theorem_id = suite.id;
    cp.n1 = n1;
    cp.n2 = n2;
    cp.stack.emplace_back(n1, n2);
    cp.samples_left = opt.soundness_samples;
    return ok_rec_resume(suite, cp, opt);
}

}  // namespace landau
