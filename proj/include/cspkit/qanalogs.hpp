#pragma once

/*
  q-analogs and exact evaluation at roots of unity.

  [n]_q = 1 + q + ... + q^{n-1}, q-binomials and q-multinomials are built
  by exact multiplication and division by q-integers (both are linear-time
  sliding-window passes).  Evaluation of f at xi^d, xi a primitive m-th
  root of unity, reduces f modulo the cyclotomic polynomial Phi_o with
  o = m/gcd(m,d); the value is an integer exactly when the residue is a
  constant, and a CSP candidate failing integrality is a value, not an
  error.
*/

#include "cspkit/intpoly.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <tuple>
#include <vector>

namespace cspkit {

// ---------------------------------------------------------------------------
// Exact integer combinatorics used as enumeration oracles.

inline Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline Int catalan(long n) {
    if (n < 0) return 0;
    return binomial(2 * n, n) / (n + 1);
}

inline Int narayana(long n, long k) {
    if (n < 1 || k < 1 || k > n) return 0;
    return binomial(n, k) * binomial(n, k - 1) / n;
}

/// Motzkin numbers by the standard recurrence
/// (i+2) M_i = (2i+1) M_{i-1} + 3(i-1) M_{i-2}.
inline Int motzkin(long n) {
    if (n < 0) return 0;
    Int a = 1, b = 1; // M_0, M_1
    if (n == 0) return a;
    for (long i = 2; i <= n; ++i) {
        Int c = ((2 * i + 1) * b + 3 * (i - 1) * a) / (i + 2);
        a = b;
        b = c;
    }
    return b;
}

// ---------------------------------------------------------------------------
// q-integers, q-factorials, q-binomials.

/// [n]_q = 1 + q + ... + q^{n-1}.
inline IntPoly q_int(long n) {
    if (n < 0) throw std::invalid_argument("q_int: negative n");
    std::vector<Int> c(static_cast<std::size_t>(n), Int(1));
    return IntPoly(std::move(c));
}

/// f * [m]_q via a sliding window of width m.
inline IntPoly mul_q_int(const IntPoly& f, long m) {
    if (m < 0) throw std::invalid_argument("mul_q_int: negative m");
    if (m == 0 || f.is_zero()) return IntPoly();
    long dr = f.degree() + m - 1;
    std::vector<Int> r(static_cast<std::size_t>(dr) + 1, Int(0));
    Int window = 0;
    for (long i = 0; i <= dr; ++i) {
        window += f.coeff(i);
        window -= f.coeff(i - m);
        r[static_cast<std::size_t>(i)] = window;
    }
    return IntPoly(std::move(r));
}

/// Exact f / [m]_q; throws on a nonzero remainder.
inline IntPoly div_q_int(const IntPoly& f, long m) {
    if (m <= 0) throw std::invalid_argument("div_q_int: m must be positive");
    if (f.is_zero()) return IntPoly();
    long dq = f.degree() - (m - 1);
    if (dq < 0) throw std::logic_error("div_q_int: nonzero remainder");
    std::vector<Int> q(static_cast<std::size_t>(dq) + 1, Int(0));
    Int window = 0; // sum of q[i-m+1 .. i-1]
    for (long i = 0; i <= dq; ++i) {
        q[static_cast<std::size_t>(i)] = f.coeff(i) - window;
        window += q[static_cast<std::size_t>(i)];
        if (i - m + 1 >= 0) window -= q[static_cast<std::size_t>(i - m + 1)];
    }
    // verify the tail of the product
    for (long i = dq + 1; i <= f.degree(); ++i) {
        Int s = 0;
        for (long j = std::max(0L, i - m + 1); j <= dq; ++j) s += q[static_cast<std::size_t>(j)];
        if (s != f.coeff(i)) throw std::logic_error("div_q_int: nonzero remainder");
    }
    return IntPoly(std::move(q));
}

inline IntPoly q_factorial(long n) {
    IntPoly r = IntPoly::one();
    for (long m = 2; m <= n; ++m) r = mul_q_int(r, m);
    return r;
}

/// Gaussian binomial coefficient; 0 when k < 0 or k > n.
inline IntPoly q_binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("q_binomial: negative n");
    if (k < 0 || k > n) return IntPoly();
    k = std::min(k, n - k);

    static std::map<std::pair<long, long>, IntPoly> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find({n, k});
        if (it != cache.end()) return it->second;
    }
    IntPoly r = IntPoly::one();
    for (long i = 1; i <= k; ++i) {
        r = mul_q_int(r, n - k + i);
        r = div_q_int(r, i);
    }
    {
        std::lock_guard<std::mutex> lk(mu);
        cache.emplace(std::make_pair(n, k), r);
    }
    return r;
}

/// q-multinomial [n; parts] with sum(parts) <= n; an implicit final part
/// absorbs the remainder.
inline IntPoly q_multinomial(long n, const std::vector<long>& parts) {
    long rest = n;
    IntPoly r = IntPoly::one();
    for (long p : parts) {
        if (p < 0 || p > rest) return IntPoly();
        r *= q_binomial(rest, p);
        rest -= p;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials and evaluation at roots of unity.

/// Phi_d(q), computed as (q^d - 1) / prod_{e|d, e<d} Phi_e(q).
inline IntPoly cyclotomic(long d) {
    if (d < 1) throw std::invalid_argument("cyclotomic: d must be positive");
    static std::map<long, IntPoly> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    IntPoly num = IntPoly::q_power(d) - IntPoly::one();
    for (long e = 1; e < d; ++e) {
        if (d % e == 0) num = num.divexact_monic(cyclotomic(e));
    }
    {
        std::lock_guard<std::mutex> lk(mu);
        cache.emplace(d, num);
    }
    return num;
}

/// Value of f at xi^d for xi a primitive m-th root of unity.  Exactly one
/// of `integral`/`residue` is meaningful: when the reduction of f modulo
/// Phi_o is a constant, that constant is the (integer) value; otherwise
/// the reduced residue is attached as a non-integer marker.
struct RootOfUnityValue {
    long m = 1;
    long d = 0;
    bool integral = true;
    Int value = 0;
    IntPoly residue;
};

inline long reduced_order(long m, long d) {
    long g = std::gcd(m, ((d % m) + m) % m);
    return m / g; // gcd(m,0) = m, so d = 0 gives order 1
}

inline RootOfUnityValue eval_at_root(const IntPoly& f, long m, long d) {
    if (m < 1) throw std::invalid_argument("eval_at_root: m must be positive");
    RootOfUnityValue out;
    out.m = m;
    out.d = d;
    long o = reduced_order(m, d);
    IntPoly r = f.mod_monic(cyclotomic(o));
    if (r.degree() <= 0) {
        out.integral = true;
        out.value = r.coeff(0);
    } else {
        out.integral = false;
        out.residue = std::move(r);
    }
    return out;
}

/// q-Lucas route: with n = n1*o + n0 and k = k1*o + k0 (0 <= n0,k0 < o),
/// qbinom(n,k) at a primitive o-th root of unity equals
/// binom(n1,k1) * qbinom(n0,k0) evaluated there.
inline RootOfUnityValue q_lucas_eval(long n, long k, long o) {
    if (o < 1) throw std::invalid_argument("q_lucas_eval: o must be positive");
    if (n < 0 || k < 0) throw std::invalid_argument("q_lucas_eval: negative argument");
    RootOfUnityValue out;
    out.m = o;
    out.d = 1;
    if (k > n) return out; // zero either way
    long n1 = n / o, n0 = n % o;
    long k1 = k / o, k0 = k % o;
    Int outer = binomial(n1, k1);
    IntPoly r = q_binomial(n0, k0).mod_monic(cyclotomic(o));
    if (r.degree() <= 0) {
        out.integral = true;
        out.value = outer * r.coeff(0);
    } else {
        out.integral = false;
        out.residue = r * outer;
    }
    return out;
}

} // namespace cspkit
