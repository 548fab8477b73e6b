#include "landau/landau.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "bounds.hpp"
#include "landau.hpp"
#include "logint.hpp"
#include "sequences.hpp"
#include "superchampion.hpp"
#include "verify.hpp"

using namespace landau;

struct landau_ctx {
    unsigned precision = 96;
    std::string cache_dir;
    u64 g_limit = kGLimit, h_limit = kHLimit;
    std::shared_ptr<LandauTable> g, h;

    const LandauTable& table(LandauTable::Kind k) {
        auto& t = k == LandauTable::Kind::g ? g : h;
        u64 lim = k == LandauTable::Kind::g ? g_limit : h_limit;
        if (!t || t->limit() != lim) t = std::make_shared<LandauTable>(k, lim, true);
        return *t;
    }
    std::optional<Type2Cache> type2(u128 need) const {
        if (cache_dir.empty()) return std::nullopt;
        auto path = std::filesystem::path(cache_dir) / "type2.cache";
        if (!std::filesystem::exists(path)) return std::nullopt;
        Type2Cache c = Type2Cache::load(path.string());
        if (c.limit < need) return std::nullopt;
        return c;
    }
};

struct landau_enum {
    std::unique_ptr<EventEnumerator> e;
    u128 limit = 0;
    bool done = false;
};

namespace {

thread_local std::string last_error = "";

landau_status set_error(landau_status s, const std::string& msg) {
    last_error = msg;
    return s;
}

// Runs f, mapping library errors onto status codes.
template <class F>
landau_status guard(F&& f) {
    try {
        f();
        last_error.clear();
        return LANDAU_OK;
    } catch (const Error& e) {
        return set_error(landau_status(int(e.code)), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(LANDAU_E_RESOURCE, "out of memory");
    } catch (const std::exception& e) {
        return set_error(LANDAU_E_INTERNAL, e.what());
    }
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

void need(const void* p, const char* what) {
    if (!p) fail(ErrorCode::usage, std::string(what) + " is NULL");
}

u128 num(const char* s, const char* what) {
    need(s, what);
    return parse_u128(s);
}

json iv_json(Interval v) {
    return {{"lo", double(v.lo)}, {"hi", double(v.hi)}, {"lo_hex", hexfloat(v.lo)}, {"hi_hex", hexfloat(v.hi)}};
}

json report_json(const BoundReport& r) {
    json s = json::array();
    for (const auto& x : r.samples)
        s.push_back({{"x", x.x},
                     {"lhs", iv_json(x.lhs)},
                     {"rhs", iv_json(x.rhs)},
                     {"verdict", verdict_name(x.verdict)},
                     {"outside_range", x.outside_range}});
    return {{"family", r.family}, {"statement", r.statement}, {"range", r.range}, {"samples", s},
            {"all_pass", r.all_pass()}};
}

landau_status factored(landau_ctx* ctx, LandauTable::Kind k, uint64_t n, char** fac, char** value) {
    return guard([&] {
        need(ctx, "ctx");
        const LandauTable& t = ctx->table(k);
        if (n > t.limit())
            fail(ErrorCode::capacity, "n = " + std::to_string(n) + " exceeds the exact table limit " +
                                          std::to_string(t.limit()));
        FactoredNumber f = t.factors(n);
        std::string a = f.to_string(), b = f.value().str();
        if (fac) *fac = dup(a);
        if (value) *value = dup(b);
    });
}

}  // namespace

extern "C" {

const char* landau_last_error(void) { return last_error.c_str(); }

const char* landau_status_name(landau_status s) {
    if (s == LANDAU_E_INTERNAL) return "internal";
    return error_name(ErrorCode(int(s)));
}

const char* landau_version(void) { return "1.0.0"; }

void landau_free(char* s) { std::free(s); }

landau_status landau_ctx_new(unsigned precision_bits, const char* cache_dir, landau_ctx** out) {
    return guard([&] {
        need(out, "out");
        if (precision_bits < 64) fail(ErrorCode::parameter, "precision must be at least 64 bits");
        auto c = std::make_unique<landau_ctx>();
        c->precision = precision_bits;
        if (cache_dir) c->cache_dir = cache_dir;
        *out = c.release();
    });
}

void landau_ctx_free(landau_ctx* ctx) { delete ctx; }

landau_status landau_ctx_set_limits(landau_ctx* ctx, uint64_t g_limit, uint64_t h_limit) {
    return guard([&] {
        need(ctx, "ctx");
        if (g_limit) ctx->g_limit = g_limit;
        if (h_limit) ctx->h_limit = h_limit;
    });
}

landau_status landau_g(landau_ctx* ctx, uint64_t n, char** fac, char** value) {
    return factored(ctx, LandauTable::Kind::g, n, fac, value);
}

landau_status landau_h(landau_ctx* ctx, uint64_t n, char** fac, char** value) {
    return factored(ctx, LandauTable::Kind::h, n, fac, value);
}

landau_status landau_log_g(landau_ctx* ctx, uint64_t n, double* out) {
    return guard([&] {
        need(ctx, "ctx");
        need(out, "out");
        const LandauTable& t = ctx->table(LandauTable::Kind::g);
        if (n > t.limit()) fail(ErrorCode::capacity, "n exceeds the exact table limit");
        *out = double(t.log(n));
    });
}

landau_status landau_log_h(landau_ctx* ctx, uint64_t n, double* out) {
    return guard([&] {
        need(ctx, "ctx");
        need(out, "out");
        const LandauTable& t = ctx->table(LandauTable::Kind::h);
        if (n > t.limit()) fail(ErrorCode::capacity, "n exceeds the exact table limit");
        *out = double(t.log(n));
    });
}

landau_status landau_li(landau_ctx* ctx, const char* x, unsigned digits, char** out) {
    return guard([&] {
        need(ctx, "ctx");
        need(x, "x");
        need(out, "out");
        PrecisionScope ps(ctx->precision);
        mpreal v(x);
        if (!(v > 1)) fail(ErrorCode::domain, "li needs x > 1");
        *out = dup(li_mp(v).str(digits ? digits : 20));
    });
}

landau_status landau_li_inv(landau_ctx* ctx, const char* y, unsigned digits, char** out) {
    return guard([&] {
        need(ctx, "ctx");
        need(y, "y");
        need(out, "out");
        PrecisionScope ps(ctx->precision);
        *out = dup(li_inv_mp(mpreal(y)).str(digits ? digits : 20));
    });
}

landau_status landau_enum_new(landau_ctx* ctx, const char* limit_ell, landau_enum** out) {
    return guard([&] {
        need(ctx, "ctx");
        need(out, "out");
        auto e = std::make_unique<landau_enum>();
        e->limit = num(limit_ell, "limit_ell");
        e->e = std::make_unique<EventEnumerator>();
        *out = e.release();
    });
}

landau_status landau_enum_next(landau_enum* e, landau_record* rec, int* done) {
    return guard([&] {
        need(e, "enumerator");
        need(rec, "rec");
        need(done, "done");
        Superchampion s;
        if (e->done || !e->e->next(s) || s.ell > e->limit) {
            e->done = true;
            *done = 1;
            return;
        }
        *done = 0;
        std::string ell = to_string(s.ell);
        std::memset(rec->ell, 0, sizeof rec->ell);
        std::memcpy(rec->ell, ell.c_str(), std::min(ell.size(), sizeof rec->ell - 1));
        rec->log_n = double(s.logN);
        rec->pmax = s.pmax;
        rec->type2 = s.type2;
        rec->event_p = s.event_p;
        rec->event_j = s.event_j;
    });
}

void landau_enum_free(landau_enum* e) { delete e; }

landau_status landau_table_json(landau_ctx* ctx, const char* limit_ell, char** out) {
    return guard([&] {
        need(ctx, "ctx");
        need(out, "out");
        json rows = json::array();
        for (const auto& r : superchampion_table(num(limit_ell, "limit_ell")))
            rows.push_back({{"n_lo", to_string(r.n_lo)},
                            {"n_hi", to_string(r.n_hi)},
                            {"N", r.N},
                            {"ell", to_string(r.ell)},
                            {"rho", r.rho.to_string()},
                            {"rho_value", double(r.rho.value)},
                            {"xi", double(r.xi)}});
        *out = dup(rows.dump());
    });
}

landau_status landau_cache_build(landau_ctx* ctx, const char* limit_ell, const char* path, char** out) {
    return guard([&] {
        need(ctx, "ctx");
        u128 lim = num(limit_ell, "limit_ell");
        std::string p;
        if (path)
            p = path;
        else if (!ctx->cache_dir.empty())
            p = (std::filesystem::path(ctx->cache_dir) / "type2.cache").string();
        else
            fail(ErrorCode::usage, "no cache directory and no path");
        if (auto dir = std::filesystem::path(p).parent_path(); !dir.empty()) std::filesystem::create_directories(dir);
        Type2Cache c = build_type2_cache(lim);
        c.validate();
        c.save(p);
        if (out) *out = dup(json{{"path", p}, {"limit", to_string(lim)}, {"type2_entries", c.entries.size()}}.dump());
    });
}

landau_status landau_excess(landau_ctx* ctx, const char* n, char** out) {
    return guard([&] {
        need(ctx, "ctx");
        need(out, "out");
        u128 v = num(n, "n");
        auto cache = ctx->type2(v);
        ExcessReport r = excesses(v, cache ? &*cache : nullptr);
        *out = dup(json{{"n", to_string(r.n)},
                        {"n_prime", to_string(r.nprime)},
                        {"E", to_string(r.E)},
                        {"E_star", double(r.Estar)},
                        {"s", r.s},
                        {"i0", r.i0},
                        {"p_i0", r.p_i0},
                        {"used_cache", bool(cache)}}
                       .dump());
    });
}

landau_status landau_sequences(landau_ctx* ctx, const char* n, char** out) {
    return guard([&] {
        need(ctx, "ctx");
        need(out, "out");
        u128 v = num(n, "n");
        if (v < 2) fail(ErrorCode::domain, "the sequences start at n = 2");
        SequenceSources src;
        Resources r;
        Source gs = Source::exact, hs = Source::exact;
        if (v <= ctx->g_limit)
            src.g = &ctx->table(LandauTable::Kind::g);
        else
            gs = Source::bounds;
        if (v <= ctx->h_limit)
            src.h = &ctx->table(LandauTable::Kind::h);
        else
            hs = Source::bounds;
        if (gs == Source::bounds || hs == Source::bounds) {
            if (v < 7) fail(ErrorCode::domain, "bounds need n >= 7");
            r = Resources::build(0, 0, v);
            src.records = r.records.get();
            src.primes = r.primes.get();
        }
        SequencePoint p = point(v, gs, hs, src);
        *out = dup(json{{"n", to_string(p.n)},
                        {"g_mode", p.g_exact ? "exact" : "bounded"},
                        {"h_mode", p.h_exact ? "exact" : "bounded"},
                        {"log_g", iv_json(p.log_g)},
                        {"log_h", iv_json(p.log_h)},
                        {"a", iv_json(p.a)},
                        {"b", iv_json(p.b)},
                        {"z", iv_json(p.z)},
                        {"d", iv_json(p.d)},
                        {"beta", iv_json(p.beta)}}
                       .dump());
    });
}

landau_status landau_verify(landau_ctx* ctx, const char* suite, const char* n1, const char* n2,
                            const char* checkpoint, uint64_t max_good_calls, char** out) {
    landau_status st = LANDAU_OK;
    landau_status g = guard([&] {
        need(ctx, "ctx");
        need(suite, "suite");
        need(out, "out");
        const SuiteInfo& info = suite_info(suite);
        std::optional<OkRecCheckpoint> cp;
        if (checkpoint) cp = OkRecCheckpoint::from_json(json::parse(checkpoint));
        u128 lo = cp ? cp->n1 : n1 ? parse_u128(n1) : info.default_lo;
        u128 hi = cp ? cp->n2 : n2 ? parse_u128(n2) : info.default_hi;
        u64 gl = info.g_limit, hl = info.h_limit;
        // a context limit set away from the default overrides the suite's own sizing
        if (ctx->g_limit != kGLimit && gl) gl = ctx->g_limit;
        if (ctx->h_limit != kHLimit && hl) hl = ctx->h_limit;
        Resources r = Resources::build(std::min<u128>(gl, hi), std::min<u128>(hl, hi), std::max<u128>(hi, 7));
        TheoremSuite s = make_suite(suite, r);
        OkRecOptions opt;
        opt.max_good_calls = max_good_calls;
        try {
            Certificate c = cp ? ok_rec_resume(s, *cp, opt) : ok_rec(s, lo, hi, opt);
            *out = dup(c.to_json().dump());
        } catch (const Interrupted& e) {
            *out = dup(json{{"error", e.what()}, {"code", error_name(e.code)}, {"checkpoint", e.checkpoint}}.dump());
            st = landau_status(int(e.code));
            last_error = e.what();
        }
    });
    if (g != LANDAU_OK) return g;
    return st;
}

landau_status landau_suite_catalog(char** out) {
    return guard([&] {
        need(out, "out");
        json a = json::array();
        for (const auto& s : suite_catalog())
            a.push_back({{"id", s.id},
                         {"description", s.description},
                         {"default_range", {to_string(s.default_lo), to_string(s.default_hi)}},
                         {"expected_fail", to_string(s.expected_fail)},
                         {"g_limit", s.g_limit},
                         {"h_limit", s.h_limit}});
        *out = dup(a.dump());
    });
}

landau_status landau_slice_scan(landau_ctx* ctx, const char* suite, const char* ell_from, const char* ell_limit,
                                char** out) {
    return guard([&] {
        need(ctx, "ctx");
        need(suite, "suite");
        need(out, "out");
        *out = dup(slice_scan(suite, num(ell_from, "ell_from"), num(ell_limit, "ell_limit")).to_json().dump());
    });
}

landau_status landau_kscan(landau_ctx* ctx, uint64_t pmax, char** out) {
    return guard([&] {
        need(ctx, "ctx");
        need(out, "out");
        *out = dup(minhn_kscan(pmax).to_json().dump());
    });
}

landau_status landau_convex_scan(landau_ctx* ctx, const char* mode, const char* limit_ell, char** out) {
    return guard([&] {
        need(ctx, "ctx");
        need(mode, "mode");
        need(out, "out");
        std::string m = mode;
        if (m != "a" && m != "z") fail(ErrorCode::usage, "mode is 'a' or 'z'");
        *out = dup(convex_scan(m == "a" ? ConvexMode::a : ConvexMode::z, num(limit_ell, "limit_ell")).to_json().dump());
    });
}

landau_status landau_check_bounds(landau_ctx* ctx, const char* family, const uint64_t* xs, size_t count, int witness,
                                  char** out) {
    return guard([&] {
        need(ctx, "ctx");
        need(family, "family");
        need(out, "out");
        if (count) need(xs, "xs");
        std::string f = family;
        bool xi_family = false;
        for (const auto& b : xi_bound_families()) xi_family |= b.id == f;
        BoundReport r;
        if (xi_family) {
            std::vector<real> v(xs, xs + count);
            r = check_xi_bounds(f, v, witness != 0);
        } else {
            r = check_effective_bounds(f, std::vector<u64>(xs, xs + count), witness != 0);
        }
        *out = dup(report_json(r).dump());
    });
}

landau_status landau_bound_families(char** out) {
    return guard([&] {
        need(out, "out");
        json a = json::array();
        for (const auto& f : bound_families())
            a.push_back({{"id", f.id}, {"statement", f.statement}, {"range", f.range}, {"variable", "x"}});
        for (const auto& f : xi_bound_families())
            a.push_back({{"id", f.id}, {"statement", f.statement}, {"range", f.range}, {"variable", "xi"}});
        *out = dup(a.dump());
    });
}

}  // extern "C"
