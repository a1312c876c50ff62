#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "scalars.hpp"
#include "univariate.hpp"

namespace chow {

namespace zass {

// Dense polynomial over F_p, p < 2^31, coefficients low to high.
using PM = std::vector<std::uint64_t>;

struct Fp {
    std::uint64_t p;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
};

inline void trim(PM& f) {
    while (!f.empty() && !f.back()) f.pop_back();
}

inline PM mul(const Fp& F, const PM& a, const PM& b) {
    if (a.empty() || b.empty()) return {};
    PM r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % F.p;
    }
    trim(r);
    return r;
}

inline PM sub(const Fp& F, const PM& a, const PM& b) {
    PM r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    trim(r);
    return r;
}

inline std::pair<PM, PM> divmod(const Fp& F, PM a, const PM& b) {
    PM q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
    std::uint64_t binv = F.inv(b.back());
    while (a.size() >= b.size()) {
        std::uint64_t c = F.mul(a.back(), binv);
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
        trim(a);
    }
    trim(q);
    return {q, a};
}

inline PM mod(const Fp& F, const PM& a, const PM& b) { return divmod(F, a, b).second; }

inline PM monic(const Fp& F, PM f) {
    trim(f);
    if (f.empty()) return f;
    std::uint64_t s = F.inv(f.back());
    for (auto& c : f) c = F.mul(c, s);
    return f;
}

inline PM gcd(const Fp& F, PM a, PM b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PM r = mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

inline PM powmod(const Fp& F, PM base, Int e, const PM& m) {
    PM r{1};
    base = mod(F, base, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mod(F, mul(F, r, base), m);
        base = mod(F, mul(F, base, base), m);
        e >>= 1;
    }
    return r;
}

inline PM derivative(const Fp& F, const PM& f) {
    PM r;
    for (std::size_t i = 1; i < f.size(); ++i) r.push_back(i % F.p * f[i] % F.p);
    trim(r);
    return r;
}

// Cantor-Zassenhaus equal-degree splitting: f squarefree monic, all
// irreducible factors of degree d. Randomness is a fixed deterministic stream.
inline void edf(const Fp& F, const PM& f, std::size_t d, std::uint64_t& rng, std::vector<PM>& out) {
    if (f.size() - 1 == d) {
        out.push_back(f);
        return;
    }
    Int exponent = (int_pow(Int((unsigned long)F.p), (unsigned long)d) - 1) / 2;
    for (;;) {
        PM r(f.size() - 1, 0);
        for (auto& c : r) c = detail::splitmix64(rng) % F.p;
        trim(r);
        if (r.size() < 2) continue;  // constants never split
        PM g = gcd(F, f, r);
        if (g.size() <= 1 || g.size() >= f.size()) {
            PM h = powmod(F, r, exponent, f);
            if (h.empty()) continue;
            h[0] = F.sub(h[0], 1);
            trim(h);
            if (h.empty()) continue;
            g = gcd(F, f, h);
            if (g.size() <= 1 || g.size() >= f.size()) continue;
        }
        edf(F, g, d, rng, out);
        edf(F, divmod(F, f, g).first, d, rng, out);
        return;
    }
}

// Distinct-degree then equal-degree factorization of a squarefree monic f.
inline std::vector<PM> factor_mod_p(const Fp& F, PM f) {
    std::vector<PM> out;
    PM h{0, 1};  // x
    std::size_t d = 0;
    std::uint64_t rng = 0x243f6a8885a308d3ULL ^ F.p;
    while (f.size() > 1) {
        ++d;
        if (2 * d > f.size() - 1) {
            out.push_back(f);
            break;
        }
        h = powmod(F, h, Int((unsigned long)F.p), f);
        PM hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = F.sub(hx[1], 1);
        trim(hx);
        // Empty hx means x^(p^d) = x mod f: every remaining factor has degree d.
        PM g = hx.empty() ? f : gcd(F, f, hx);
        if (g.size() > 1) {
            edf(F, g, d, rng, out);
            f = divmod(F, f, g).first;
            h = mod(F, h, f);
        }
    }
    return out;
}

// Coefficients reduced into [0, m); m a prime power.
using PZ = std::vector<Int>;

inline void trimz(PZ& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Int modnorm(const Int& a, const Int& m) { return ((a % m) + m) % m; }

inline PZ reducez(const std::vector<Int>& a, const Int& m) {
    PZ r;
    for (const auto& c : a) r.push_back(modnorm(c, m));
    trimz(r);
    return r;
}

inline PZ mulz(const PZ& a, const PZ& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    PZ r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % m;
    trimz(r);
    return r;
}

inline PZ addz(const PZ& a, const PZ& b, const Int& m) {
    PZ r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % m;
    trimz(r);
    return r;
}

inline PZ subz(const PZ& a, const PZ& b, const Int& m) {
    PZ r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = modnorm(r[i] - b[i], m);
    trimz(r);
    return r;
}

// Division by a monic divisor in (Z/m)[x].
inline std::pair<PZ, PZ> divmodz(PZ a, const PZ& b, const Int& m) {
    PZ q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Int(0));
    while (a.size() >= b.size()) {
        Int c = a.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = modnorm(a[shift + i] - c * b[i], m);
        trimz(a);
    }
    trimz(q);
    return {q, a};
}

// One quadratic Hensel step: f = g*h and s*g + t*h = 1 (mod m) lift to (mod m^2).
// All of f, g, h monic; degree shapes are preserved.
inline void hensel_step(const std::vector<Int>& f, PZ& g, PZ& h, PZ& s, PZ& t, const Int& m) {
    Int m2 = m * m;
    PZ fm = reducez(f, m2);
    PZ e = subz(fm, mulz(g, h, m2), m2);
    auto [q, r] = divmodz(mulz(s, e, m2), h, m2);
    g = addz(g, addz(mulz(t, e, m2), mulz(q, g, m2), m2), m2);
    h = addz(h, r, m2);
    PZ b = subz(addz(mulz(s, g, m2), mulz(t, h, m2), m2), PZ{Int(1)}, m2);
    auto [q2, r2] = divmodz(mulz(s, b, m2), h, m2);
    s = subz(s, r2, m2);
    t = subz(t, addz(mulz(t, b, m2), mulz(q2, g, m2), m2), m2);
}

// Bezout s*g + t*h = 1 over F_p with deg s < deg h, deg t < deg g.
inline std::pair<PM, PM> bezout(const Fp& F, const PM& g, const PM& h) {
    PM r0 = g, r1 = h, s0{1}, s1{};
    while (!r1.empty()) {
        auto [q, r2] = divmod(F, r0, r1);
        PM s2 = sub(F, s0, mul(F, q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw consistency_error("bezout: inputs not coprime");
    std::uint64_t inv = F.inv(r0[0]);
    for (auto& c : s0) c = F.mul(c, inv);
    PM s = mod(F, s0, h);
    // t = (1 - s*g) / h, exact over F_p.
    PM num = sub(F, PM{1}, mul(F, s, g));
    auto [t, rem] = divmod(F, num, h);
    if (!rem.empty()) throw consistency_error("bezout: division not exact");
    return {s, t};
}

inline PZ from_pm(const PM& a) {
    PZ r;
    for (auto c : a) r.push_back(Int((unsigned long)c));
    return r;
}

// Lift the full factor list of monic f from mod p to mod target (a power ladder
// p, p^2, p^4, ... whose top is returned via `modulus`).
inline std::vector<PZ> multifactor_hensel(const std::vector<Int>& f, const std::vector<PM>& factors,
                                          const Fp& F, const Int& target, Int& modulus) {
    Int m((unsigned long)F.p);
    while (m < target) m = m * m;
    modulus = m;
    auto rec = [&](auto&& self, const std::vector<Int>& cur, std::vector<PM> fs) -> std::vector<PZ> {
        if (fs.size() == 1) return {reducez(cur, modulus)};
        std::size_t half = fs.size() / 2;
        PM g0{1}, h0{1};
        for (std::size_t i = 0; i < half; ++i) g0 = mul(F, g0, fs[i]);
        for (std::size_t i = half; i < fs.size(); ++i) h0 = mul(F, h0, fs[i]);
        auto [s0, t0] = bezout(F, g0, h0);
        PZ g = from_pm(g0), h = from_pm(h0), s = from_pm(s0), t = from_pm(t0);
        Int mm((unsigned long)F.p);
        while (mm < modulus) {
            hensel_step(cur, g, h, s, t, mm);
            mm = mm * mm;
        }
        std::vector<Int> gi(g.begin(), g.end()), hi(h.begin(), h.end());
        auto left = self(self, gi, std::vector<PM>(fs.begin(), fs.begin() + half));
        auto right = self(self, hi, std::vector<PM>(fs.begin() + half, fs.end()));
        for (auto& x : right) left.push_back(std::move(x));
        return left;
    };
    return rec(rec, f, factors);
}

inline std::vector<Int> symmetric(const PZ& a, const Int& m) {
    std::vector<Int> r;
    for (const auto& c : a) r.push_back(c * 2 > m ? c - m : c);
    return r;
}

// Exact division in Z[x] by a monic divisor; nullopt if not a factor.
inline std::optional<std::vector<Int>> int_divide_monic(std::vector<Int> a,
                                                        const std::vector<Int>& b) {
    std::vector<Int> q;
    if (a.size() < b.size()) return std::nullopt;
    q.assign(a.size() - b.size() + 1, Int(0));
    while (a.size() >= b.size()) {
        Int c = a.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    if (!a.empty()) return std::nullopt;
    return q;
}

}  // namespace zass

// Irreducible factorization over Q of a squarefree monic polynomial; monic
// factors, canonically sorted. Degree 0/1 inputs return themselves.
inline std::vector<UniPoly> factor_squarefree_monic(const UniPoly& input) {
    long n = uni_deg(input);
    if (n <= 1) return n < 1 ? std::vector<UniPoly>{} : std::vector<UniPoly>{input};
    if (input.back() != 1) throw std::invalid_argument("factor_squarefree_monic: not monic");

    // x -> x/L with L = lcm of denominators turns the monic rational input into
    // a monic integer polynomial; factors map back by the inverse substitution.
    Int L = 1;
    for (const auto& c : input) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> g((std::size_t)n + 1);
    Int Lp = 1;  // L^(n-i)
    for (long i = n; i >= 0; --i) {
        g[(std::size_t)i] = to_int_exact(input[(std::size_t)i] * Rat(Lp));
        Lp *= L;
    }

    // Prime with squarefree reduction; the monic leading coefficient never drops.
    zass::Fp F{0};
    for (Int p(1000003);; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
        zass::Fp cand{p.get_ui()};
        zass::PM gp;
        for (const auto& c : g) gp.push_back(zass::modnorm(c, p).get_ui());
        zass::trim(gp);
        if (zass::gcd(cand, gp, zass::derivative(cand, gp)).size() == 1) {
            F = cand;
            break;
        }
    }

    zass::PM gp;
    for (const auto& c : g) gp.push_back(zass::modnorm(c, Int((unsigned long)F.p)).get_ui());
    std::vector<zass::PM> modular = zass::factor_mod_p(F, gp);
    std::sort(modular.begin(), modular.end());

    std::vector<std::vector<Int>> int_factors;
    if (modular.size() == 1) {
        int_factors.push_back(g);
    } else {
        // Mignotte-style bound on factor coefficients: (n+1) * 2^n * height(g).
        Int H = 0;
        for (const auto& c : g) {
            Int a = abs(c);
            if (a > H) H = a;
        }
        Int bound = Int(n + 1) * (Int(1) << (unsigned long)n) * H;
        Int modulus;
        std::vector<zass::PZ> lifted = zass::multifactor_hensel(g, modular, F, 2 * bound + 1, modulus);

        std::vector<Int> remaining_poly = g;
        std::vector<zass::PZ> pool = lifted;
        std::size_t s = 1;
        while (2 * s <= pool.size()) {
            bool found = false;
            std::vector<std::size_t> idx(s);
            auto combos = [&](auto&& self, std::size_t from, std::size_t k) -> bool {
                if (k == s) {
                    zass::PZ prod{Int(1)};
                    for (auto i : idx) prod = zass::mulz(prod, pool[i], modulus);
                    std::vector<Int> cand = zass::symmetric(prod, modulus);
                    auto q = zass::int_divide_monic(remaining_poly, cand);
                    if (q) {
                        int_factors.push_back(cand);
                        remaining_poly = *q;
                        std::vector<zass::PZ> next;
                        for (std::size_t i = 0; i < pool.size(); ++i)
                            if (std::find(idx.begin(), idx.end(), i) == idx.end())
                                next.push_back(pool[i]);
                        pool = std::move(next);
                        return true;
                    }
                    return false;
                }
                for (std::size_t v = from; v + (s - k) <= pool.size(); ++v) {
                    idx[k] = v;
                    if (self(self, v + 1, k + 1)) return true;
                }
                return false;
            };
            found = combos(combos, 0, 0);
            if (!found) ++s;
        }
        if (remaining_poly.size() > 1) int_factors.push_back(remaining_poly);
    }

    // Map back through the x -> L*x substitution and normalize monic.
    std::vector<UniPoly> out;
    for (const auto& fi : int_factors) {
        long d = (long)fi.size() - 1;
        UniPoly f((std::size_t)d + 1);
        Int Lk = 1;  // L^(d-i)
        for (long i = d; i >= 0; --i) {
            f[(std::size_t)i] = Rat(fi[(std::size_t)i]) / Rat(Lk);
            Lk *= L;
        }
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [](const UniPoly& a, const UniPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return out;
}

}  // namespace chow
