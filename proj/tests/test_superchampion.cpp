#include <doctest.h>

#include <cstdio>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "superchampion.hpp"

using namespace landau;
using F50 = boost::multiprecision::mpfr_float_50;

namespace {

// g(n) for n <= nmax by knapsack over prime powers
std::vector<u128> g_table(unsigned nmax) {
    std::vector<u128> g(nmax + 1, 1);
    for (u64 p : simple_primes(nmax)) {
        std::vector<u128> ng = g;
        for (unsigned n = 0; n <= nmax; ++n) {
            u64 q = p;
            while (q <= n) {
                ng[n] = std::max(ng[n], g[n - q] * q);
                q *= p;
            }
        }
        g = ng;
    }
    return g;
}

// strict vertices of the upper concave hull of (n, log g(n))
std::vector<unsigned> hull_vertices(const std::vector<u128>& g) {
    std::vector<unsigned> h;
    auto y = [&](unsigned n) -> F50 { return log(F50(landau::to_string(g[n]))); };
    for (unsigned n = 0; n < g.size(); ++n) {
        while (h.size() >= 2) {
            unsigned a = h[h.size() - 2], b = h.back();
            // drop b unless it lies strictly above the chord a..n
            F50 cross = (y(b) - y(a)) * (n - a) - (y(n) - y(a)) * (b - a);
            if (cross <= 0)
                h.pop_back();
            else
                break;
        }
        h.push_back(n);
    }
    return h;
}

// root of (t^j - t^{j-1})/log t = rho (t/log t for j = 1) by bisection in 50 digits
F50 xi_oracle(unsigned j, F50 rho) {
    F50 lo = j == 1 ? F50(exp(F50(1))) : F50(1) + F50(1e-30), hi = 2;
    auto f = [&](F50 t) -> F50 { return (j == 1 ? t : pow(t, j) - pow(t, j - 1)) / log(t) - rho; };
    while (f(hi) < 0) hi *= 2;
    for (int i = 0; i < 200; ++i) {
        F50 m = (lo + hi) / 2;
        (f(m) < 0 ? lo : hi) = m;
    }
    return (lo + hi) / 2;
}

}  // namespace

TEST_CASE("first records and their parameters") {
    auto rows = superchampion_table(100);
    REQUIRE(rows.size() >= 9);
    const char* N[] = {"2^2 * 3",
                       "2^2 * 3 * 5",
                       "2^2 * 3 * 5 * 7",
                       "2^2 * 3 * 5 * 7 * 11",
                       "2^2 * 3 * 5 * 7 * 11 * 13",
                       "2^2 * 3^2 * 5 * 7 * 11 * 13",
                       "2^3 * 3^2 * 5 * 7 * 11 * 13",
                       "2^3 * 3^2 * 5 * 7 * 11 * 13 * 17",
                       "2^3 * 3^2 * 5 * 7 * 11 * 13 * 17 * 19"};
    unsigned ell[] = {7, 12, 19, 30, 43, 49, 53, 70, 89};
    long value[] = {12, 60, 420, 4620, 60060, 180180, 360360, 6126120, 116396280};
    double rho[] = {3.11, 3.60, 4.59, 5.07, 5.46, 5.77, 6.00, 6.45, 7.34};
    for (int i = 0; i < 9; ++i) {
        CHECK(rows[i].N == N[i]);
        CHECK(rows[i].ell == ell[i]);
        CHECK(FactoredNumber::parse(rows[i].N).value() == value[i]);
        CHECK(std::round(rows[i].rho.value * 100) / 100 == doctest::Approx(rho[i]));
    }
    CHECK(rows[4].rho.to_string() == "(9-3)/log 3");
    CHECK(rows[5].rho.to_string() == "(8-4)/log 2");
    CHECK(std::floor(rows[4].xi * 100) / 100 == doctest::Approx(14.66));
    CHECK(rows[5].xi == doctest::Approx(16).epsilon(1e-15));
    CHECK(rows[0].xi == doctest::Approx(5).epsilon(1e-15));
}

TEST_CASE("records are the vertices of the hull of (n, log g(n))") {
    auto g = g_table(400);
    auto hv = hull_vertices(g);
    std::vector<unsigned> from_hull;
    for (unsigned v : hv)
        if (v >= 7 && v <= 250) from_hull.push_back(v);
    std::vector<unsigned> from_walk;
    EventEnumerator e;
    Superchampion s;
    while (e.next(s) && s.ell <= 250) {
        from_walk.push_back(unsigned(s.ell));
        CHECK(u128(std::llround(std::exp(s.logN))) == g[unsigned(s.ell)]);
    }
    CHECK(from_walk == from_hull);
}

TEST_CASE("xi profile at x0") {
    const auto& pr = x0_profile();
    CHECK(pr.xi == doctest::Approx(10000000019.0L).epsilon(1e-16));
    CHECK(std::floor(pr.at(2) * 10) / 10 == doctest::Approx(69588.8));
    CHECK(std::floor(pr.at(3) * 10) / 10 == doctest::Approx(1468.8));
    CHECK(std::floor(pr.at(4) * 10) / 10 == doctest::Approx(220.2));
    CHECK(std::floor(pr.at(5) * 10) / 10 == doctest::Approx(71.5));
    CHECK(std::floor(pr.at(29) * 10) / 10 == doctest::Approx(2.0));
    CHECK(pr.jmax() == 29);
    CHECK(std::floor(pr.J * 1000) / 1000 == doctest::Approx(29.165));
    F50 rho = F50(10000000019ULL) / log(F50(10000000019ULL));
    for (unsigned j : {2u, 3u, 5u, 11u, 29u}) {
        F50 o = xi_oracle(j, rho);
        CHECK(abs(F50(pr.at(j)) / o - 1) < F50(1e-17));
    }
}

TEST_CASE("xi_j roots against a 50-digit oracle") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> lg(std::log(6.0), std::log(1e15));
    for (int i = 0; i < 40; ++i) {
        real rho = std::exp(real(lg(rng)));
        XiProfile pr = xi_profile(rho);
        for (unsigned j = 1; j <= pr.jmax(); j += (j < 4 ? 1 : 5)) {
            F50 o = xi_oracle(j, F50(rho));
            INFO("rho = " << double(rho) << " j = " << j << " xi_j = " << double(pr.at(j)) << " oracle = " << o);
            CHECK(abs(F50(pr.at(j)) / o - 1) < F50(1e-17));
        }
    }
}

TEST_CASE("lambda_j are the crossing points of xi_j <= (xi/j)^(1/j)") {
    for (unsigned j = 2; j <= 8; ++j) {
        u64 lam = xi_lambda()[j];
        auto pw = [&](u64 x) {
            real xj = xi_root(j, real(x) / std::log(real(x)));
            return std::pow(xj, real(j)) - real(x) / j;
        };
        CHECK(pw(lam - 1) > 0);
        CHECK(pw(lam) < 0);
    }
    std::vector<real> xs;
    for (real x = 80; x < 1e13L; x *= 1.37L) xs.push_back(x);
    CHECK(check_xi_bounds("xsk1sk", xs).all_pass());
    CHECK(check_xi_bounds("xk1sk", xs).all_pass());
}

TEST_CASE("N_rho at and around events") {
    Rho r3 = Rho::event(3, 2);
    CHECK(build_N_rho(r3, false).value() == 60060);
    CHECK(build_N_rho(r3, true).value() == 180180);
    Rho r17 = Rho::event(17, 1);
    CHECK(build_N_rho(r17, false).value() == 360360);
    CHECK(build_N_rho(r17, true).value() == 6126120);
    Rho mid = Rho::of(6.1L);
    CHECK(build_N_rho(mid, false) == build_N_rho(mid, true));
    CHECK(build_N_rho(mid, false).value() == 6126120);
    CHECK(rho_exponent(2, Rho::event(2, 1), false) == 0);
    CHECK(rho_exponent(2, Rho::event(2, 1), true) == 2);  // 2/log 2 = (4-2)/log 2
    CHECK_THROWS_AS(build_N_rho(Rho::of(1e9L), false, 1000), Error);
    NrhoSummary s = n_rho_summary(r17, true);
    CHECK(s.ell == 70);
    CHECK(s.E == 12);  // (8 - 2) + (9 - 3)
}

TEST_CASE("type-2 cache") {
    auto c = build_type2_cache(100000);
    REQUIRE(c.entries.size() >= 2);
    CHECK(c.entries[0].ell == 49);
    CHECK(c.entries[0].q == 3);
    CHECK(std::floor(c.entries[0].logN * 1000) / 1000 == doctest::Approx(12.101));
    CHECK(c.entries[1].ell == 53);
    CHECK(c.entries[1].q == 2);
    CHECK(std::floor(c.entries[1].logN * 1000) / 1000 == doctest::Approx(12.794));
    CHECK(c.entries[0].logN == doctest::Approx(std::log(180180.0L)).epsilon(1e-17));

    auto d = Type2Cache::decode(c.encode());
    CHECK(d.limit == c.limit);
    CHECK(d.entries == c.entries);
    std::string path = "test_type2_cache.txt";
    c.save(path);
    CHECK(Type2Cache::load(path).entries == c.entries);
    std::remove(path.c_str());

    CHECK_THROWS_AS(Type2Cache::decode("nonsense\n"), Error);
    auto swapped = c;
    std::swap(swapped.entries[0], swapped.entries[1]);
    CHECK_THROWS_AS(Type2Cache::decode(swapped.encode()), Error);
    auto notprime = c;
    notprime.entries[0].q = 9;
    CHECK_THROWS_AS(Type2Cache::decode(notprime.encode()), Error);
    // cache too short for the requested limit
    CHECK_THROWS_AS(Enumerator(c, 200000), Error);
}

TEST_CASE("table-driven successor rejects a corrupted cache") {
    auto c = build_type2_cache(5000);
    auto wrong = c;
    wrong.entries[0].logN += 1e-6L;
    Enumerator e(wrong, 5000);
    Superchampion s;
    CHECK_THROWS_AS(
        [&] {
            while (e.next(s)) {
            }
        }(),
        Error);
    auto shifted = c;
    shifted.entries[0].ell += 2;
    Enumerator e2(shifted, 5000);
    CHECK_THROWS_AS(
        [&] {
            while (e2.next(s)) {
            }
        }(),
        Error);
}

TEST_CASE("locate") {
    auto L = locate(45);
    CHECK(L.Nprime.ell == 43);
    CHECK(L.Nsecond.ell == 49);
    CHECK(std::exp(L.Nprime.logN) == doctest::Approx(60060));
    CHECK(std::exp(L.Nsecond.logN) == doctest::Approx(180180));
    CHECK(std::floor(L.profile.xi * 1000) / 1000 == doctest::Approx(14.667));
    auto M = locate(70);
    CHECK(M.Nprime.ell == 70);
    CHECK(std::exp(M.Nprime.logN) == doctest::Approx(6126120));
    auto cache = build_type2_cache(110000);
    for (u128 n : {u128(7), u128(45), u128(70), u128(5000), u128(99999)}) {
        auto a = locate(n), b = locate(n, &cache);
        CHECK(a.Nprime.ell == b.Nprime.ell);
        CHECK(a.Nsecond.ell == b.Nsecond.ell);
        CHECK(a.Nprime.ell <= n);
        CHECK(n < a.Nsecond.ell);
    }
    CHECK_THROWS(locate(6));
}

TEST_CASE("excesses") {
    auto e = excesses(12);
    CHECK(e.E == 2);
    CHECK(e.s == 0);
    CHECK(e.p_i0 == 5);
    CHECK(e.i0 == 3);
    auto f = excesses(52);  // N' = 180180, E = 2 + 6
    CHECK(f.E == 8);
    CHECK(f.nprime == 49);
    CHECK(f.Estar == doctest::Approx(std::log(6.0L)));
}

TEST_CASE("records up to ell 1e12: identities and recomputation") {
    const u128 lim = 1000000000000ULL;
    auto cache = build_type2_cache(lim);
    std::vector<Superchampion> recs;
    {
        EventEnumerator e;
        Superchampion s;
        while (e.next(s) && s.ell <= lim) recs.push_back(s);
    }
    INFO("records: " << recs.size());
    // the table-driven walk is bit identical
    {
        Enumerator t(cache, lim);
        Superchampion s;
        size_t i = 0, mismatches = 0;
        while (t.next(s)) {
            if (i >= recs.size() || s.ell != recs[i].ell || s.logN != recs[i].logN || s.type2 != recs[i].type2)
                ++mismatches;
            ++i;
        }
        CHECK(i == recs.size());
        CHECK(mismatches == 0);
        CHECK(t.type2_seen() == cache.entries.size());
    }
    // gap ell(N'') - ell(N') <= xi and the rho order is strict
    size_t bad_gap = 0, bad_order = 0;
    for (size_t i = 1; i < recs.size(); ++i) {
        u128 gap = recs[i].ell - recs[i - 1].ell;
        real xi = xi_root(1, recs[i].event().value);
        if (real(gap) > xi * (1 + 1e-15L)) ++bad_gap;
        if (i > 1 && compare_events(recs[i - 1].event_p, recs[i - 1].event_j, recs[i].event_p, recs[i].event_j) >= 0)
            ++bad_order;
    }
    CHECK(bad_gap == 0);
    CHECK(bad_order == 0);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<size_t> pick(0, recs.size() - 2);
    for (int k = 0; k < 200; ++k) {
        size_t i = pick(rng);
        const auto& r = recs[i];
        Rho rho = recs[i + 1].event();
        NrhoSummary s = n_rho_summary(rho, false);
        CHECK(s.ell == r.ell);
        CHECK(s.logN.value() == doctest::Approx(r.logN).epsilon(1e-15));
        CHECK(s.pmax == r.pmax);
        // ell(N') = p_1 + ... + p_i0 + E and log N' = theta(p_i0) + E*
        CHECK(s.ell == s.sum_primes + s.E);
        CHECK(s.logN.value() == doctest::Approx(s.theta.value() + s.Estar.value()).epsilon(1e-15));
        // closed parameter gives the next record
        NrhoSummary t = n_rho_summary(rho, true);
        CHECK(t.ell == recs[i + 1].ell);
        if (k % 20 == 0) {
            auto ex = excesses_at(rho, 0);
            CHECK(ex.E == s.E);
            CHECK(ex.nprime == r.ell);
        }
    }
}

TEST_CASE("W_a roots and double root") {
    real w0 = W_a_root(std::log(2.0L) / 2, 1.49L, 8.0L);
    CHECK(std::floor(w0 * 1e7) / 1e7 == doctest::Approx(5.1811243));
    CHECK(std::floor(std::exp(2 * w0) * 100) / 100 == doctest::Approx(31642.25));
    real w1 = W_a_root(0.366L, 7.89L, 20.0L);
    CHECK(std::exp(2 * w1) < 4.28e9L);
    CHECK(std::exp(2 * w1) > 4.27e9L);
    auto d = W_double_root();
    CHECK(std::floor(d.a0 * 1e9) / 1e9 == doctest::Approx(0.370612465).epsilon(1e-12));
    CHECK(std::floor(d.t0 * 1e8) / 1e8 == doctest::Approx(7.86682407).epsilon(1e-12));
    CHECK(std::fabs(W_a(d.a0, d.t0)) < 1e-15L);
    CHECK(std::fabs(W_a_dt(d.a0, d.t0)) < 1e-12L);
}

TEST_CASE("W_a matches its defining expression") {
    // (Phi^2 - Phi) log xi / xi - log Phi with xi = e^{2t}, Phi = sqrt(xi/2)(1 - a/log xi)
    for (real a : {0.2L, 0.3466L, 0.366L, 0.3706L, 0.5L})
        for (real t = 1.0L; t < 30; t += 0.7L) {
            F50 T(t), A(a), xi = exp(2 * T), L = 2 * T;
            F50 Phi = sqrt(xi / 2) * (1 - A / L);
            F50 D = (Phi * Phi - Phi) * L / xi - log(Phi);
            CHECK(abs(F50(W_a(a, t)) - D) < F50(1e-16));
            // derivative by a central difference
            F50 h("1e-12");
            auto Dt = [&](F50 s) -> F50 {
                F50 x = exp(2 * s), l = 2 * s, P = sqrt(x / 2) * (1 - A / l);
                return (P * P - P) * l / x - log(P);
            };
            F50 der = (Dt(T + h) - Dt(T - h)) / (2 * h);
            CHECK(abs(F50(W_a_dt(a, t)) - der) < F50(1e-15));
        }
}

TEST_CASE("xi_2 bounds on grids") {
    std::vector<real> xs;
    for (real x = 31643; x < 1e18L; x *= 1.21L) xs.push_back(x);
    CHECK(check_xi_bounds("x2345", xs).all_pass());
    xs.clear();
    for (real x = 4.28e9L; x < 1e18L; x *= 1.13L) xs.push_back(x);
    CHECK(check_xi_bounds("x2366", xs).all_pass());
    xs.clear();
    for (real x = 5; x < 1e18L; x *= 1.17L) xs.push_back(x);
    CHECK(check_xi_bounds("xi2_371", xs).all_pass());
    // just below the range the bound with log 2 / 2 fails
    auto w = check_xi_bounds("x2345", {31000}, true);
    CHECK(w.samples[0].verdict == Verdict::fail);
    CHECK(w.samples[0].outside_range);
    CHECK_THROWS(check_xi_bounds("x2345", {31000}));
    // between the two roots for 0.366 the bound fails
    w = check_xi_bounds("x2366", {1e6L}, true);
    CHECK(w.samples[0].verdict == Verdict::fail);
}

TEST_CASE("bounds at and above x0") {
    std::vector<real> xs = {real(kX0), 3e10L, 1e12L, 1e14L};
    for (const char* f : {"1slogxi2", "thxi2", "pi2xi2", "EN", "ENstar"}) {
        auto rep = check_xi_bounds(f, xs);
        CHECK_MESSAGE(rep.all_pass(), f);
    }
    CHECK(check_xi_bounds("sn", {real(kX0), 1e12L}).all_pass());
    CHECK_THROWS(check_xi_bounds("EN", {1e9L}));
    CHECK_THROWS(check_xi_bounds("nope", {1e9L}));
}

TEST_CASE("type-2 records among the first ones") {
    // 12 = 2 * 6, 180180 = 3 * 60060, 360360 = 2 * 180180
    std::vector<std::string> t2;
    enumerate(100, nullptr, [&](const Superchampion& s) {
        if (s.type2) t2.push_back(to_string(s.ell) + ":" + std::to_string(s.type2_q));
        return true;
    });
    CHECK(t2 == std::vector<std::string>{"7:2", "49:3", "53:2"});
    CHECK(build_type2_cache(100).entries.size() == 2);
}
