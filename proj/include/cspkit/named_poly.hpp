#pragma once

/*
  The registry of named q-polynomial families.

  Every formula is built by exact polynomial arithmetic; divisions by
  q-integer factors assert a zero remainder.  Functions are total in the
  refinement indices (k, e, l, r): values outside the supported range
  give the zero polynomial, matching the q-binomial convention.  Genuinely
  invalid size parameters raise OutOfDomain.
*/

#include "cspkit/errors.hpp"
#include "cspkit/qanalogs.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace cspkit {

/// MacMahon q-Catalan: qbinom(2n,n)/[n+1], equivalently
/// qbinom(2n,n) - q*qbinom(2n,n-1).
inline IntPoly cat_q(long n) {
    if (n < 0) throw OutOfDomain("cat_q: n < 0");
    return div_q_int(q_binomial(2 * n, n), n + 1);
}

/// q-Narayana: q^{k(k-1)}/[n] * qbinom(n,k) qbinom(n,k-1); zero outside 1..n.
inline IntPoly nar_q(long n, long k) {
    if (n < 1) throw OutOfDomain("nar_q: n < 1");
    if (k < 1 || k > n) return IntPoly();
    IntPoly p = q_binomial(n, k) * q_binomial(n, k - 1);
    return div_q_int(p, n).shifted(k * (k - 1));
}

/// Type B q-Catalan: qbinom(2n,n).
inline IntPoly cat_b_q(long n) {
    if (n < 0) throw OutOfDomain("cat_b_q: n < 0");
    return q_binomial(2 * n, n);
}

/// Type B q-Narayana: q^{k^2} qbinom(n,k)^2.
inline IntPoly nar_b_q(long n, long k) {
    if (n < 0) throw OutOfDomain("nar_b_q: n < 0");
    if (k < 0 || k > n) return IntPoly();
    IntPoly b = q_binomial(n, k);
    return (b * b).shifted(k * k);
}

/// X_{n,s} = qbinom(2n,n) - qbinom(2n,n-s-1): pmaj over paths of depth <= s.
inline IntPoly x_ns(long n, long s) {
    if (n < 0 || s < 0 || s > n) throw OutOfDomain("x_ns: need 0 <= s <= n");
    return q_binomial(2 * n, n) - q_binomial(2 * n, n - s - 1);
}

/// Y_{n,s} = qbinom(2n,n) - q^{s+1} qbinom(2n,n-s-1): maj over the same set.
inline IntPoly y_ns(long n, long s) {
    if (n < 0 || s < 0 || s > n) throw OutOfDomain("y_ns: need 0 <= s <= n");
    return q_binomial(2 * n, n) - q_binomial(2 * n, n - s - 1).shifted(s + 1);
}

/// Closed form for the maj polynomial of two-row SYT with k cyclic
/// descents: q^{k(k-2)}(1+q^n)/[n+1] * qbinom(n+1,k) qbinom(n-2,k-2)
/// for n,k >= 2, with the degenerate values g(0,0) = g(1,1) = 1.
inline IntPoly g_cdes(long n, long k) {
    if (n < 0 || k < 0) throw OutOfDomain("g_cdes: negative parameter");
    if (n <= 1 || k <= 1) return (n == k) ? IntPoly::one() : IntPoly();
    IntPoly p = q_binomial(n + 1, k) * q_binomial(n - 2, k - 2);
    if (p.is_zero()) return p;
    p *= IntPoly::one() + IntPoly::q_power(n);
    return div_q_int(p, n + 1).shifted(k * (k - 2));
}

/// Three-term form of the same polynomial, valid for n,k >= 2.
inline IntPoly g_cdes_three_term(long n, long k) {
    if (n < 2 || k < 2) throw OutOfDomain("g_cdes_three_term: need n,k >= 2");
    return nar_q(n, k) - nar_q(n - 1, k).shifted(k - 1) + nar_q(n - 1, k - 1).shifted(k - 2);
}

/// Cyclic-descent refinement of qbinom(2n,n) on binary words:
/// q^{k(k-1)}(1+q^n) qbinom(n,k) qbinom(n-1,k-1); zero outside 1..n.
inline IntPoly q_bw(long n, long k) {
    if (n < 0) throw OutOfDomain("q_bw: n < 0");
    if (n == 0) return k == 0 ? IntPoly::one() : IntPoly();
    if (k < 1 || k > n) return IntPoly();
    IntPoly p = q_binomial(n, k) * q_binomial(n - 1, k - 1);
    p *= IntPoly::one() + IntPoly::q_power(n);
    return p.shifted(k * (k - 1));
}

/// Thiel refinement polynomial on (1,2)-configurations with e proper
/// edges and l loops: q^{e(e+1)+(n+1)l} qbinom(n,2e) Cat_q(e) qbinom(n-2e,l).
inline IntPoly q_ncc(long n, long e, long l) {
    if (n < 0 || e < 0 || l < 0) throw OutOfDomain("q_ncc: negative parameter");
    IntPoly p = q_binomial(n, 2 * e);
    if (p.is_zero()) return p;
    p *= cat_q(e);
    p *= q_binomial(n - 2 * e, l);
    return p.shifted(e * (e + 1) + (n + 1) * l);
}

/// The type B candidate q^{e^2+nl}[e+1] qbinom(n,2e) Cat_q(e) qbinom(n-2e,l);
/// it satisfies the counting identities but fails cyclic sieving, which the
/// verification engine exercises as a negative control.
inline IntPoly q_ncc_b(long n, long e, long l) {
    if (n < 0 || e < 0 || l < 0) throw OutOfDomain("q_ncc_b: negative parameter");
    IntPoly p = q_binomial(n, 2 * e);
    if (p.is_zero()) return p;
    p *= cat_q(e);
    p *= q_binomial(n - 2 * e, l);
    p = mul_q_int(p, e + 1);
    return p.shifted(e * e + n * l);
}

/// The block generating polynomial Pi_n(q;t) for half-turn symmetric
/// non-crossing partitions, as a sequence of t-coefficients
/// [t^0], ..., [t^{2n+1}].
inline std::vector<IntPoly> pi_b_polynomial(long n) {
    if (n < 0) throw OutOfDomain("pi_b_polynomial: n < 0");
    std::vector<IntPoly> out(static_cast<std::size_t>(2 * n + 2));
    for (long j = 0; j <= n; ++j) {
        IntPoly base = q_binomial(n, j);
        out[static_cast<std::size_t>(2 * j)] =
            (base * q_binomial(n - 1, j - 1)).shifted(j * j + n - j);
        IntPoly odd = base * q_binomial(n - 1, j);
        out[static_cast<std::size_t>(2 * j + 1)] = odd.shifted(j * j);
    }
    return out;
}

inline IntPoly pi_b_coeff(long n, long k) {
    if (n < 0) throw OutOfDomain("pi_b_coeff: n < 0");
    if (k < 0 || k > 2 * n + 1) return IntPoly();
    if (k % 2 == 0) {
        long j = k / 2;
        return (q_binomial(n, j) * q_binomial(n - 1, j - 1)).shifted(j * j + n - j);
    }
    long j = (k - 1) / 2;
    return (q_binomial(n, j) * q_binomial(n - 1, j)).shifted(j * j);
}

/// Sum of the two Pi_n coefficients [t^{2k}] + [t^{2k+1}], which by the
/// q-Pascal identity is q^{k^2} qbinom(n,k)^2.
inline IntPoly nar_b_paired(long n, long k) { return nar_b_q(n, k); }

/// Rotation polynomial for marked (1,2)-configurations with k edges and
/// loops: sum over e+l=k of (1+[e]_q) qNCC(n,e,l).
inline IntPoly u_nk(long n, long k) {
    if (n < 0 || k < 0) throw OutOfDomain("u_nk: negative parameter");
    IntPoly acc;
    for (long e = 0; e <= k; ++e) {
        IntPoly term = q_ncc(n, e, k - e);
        if (term.is_zero()) continue;
        acc += term + term * q_int(e);
    }
    return acc;
}

/// Ear-refinement polynomial on triangulations of an n-gon:
/// q^{k(k-2)} [n]/[k] qbinom(n-4,2k-4) Cat_q(k-2) sum_j q^{j(n-2)} qbinom(n-2k,j).
/// The [n]/[k] quotient is resolved by exact division of the assembled
/// product.  Domain: 2 <= k <= n/2.
inline IntPoly tri_ear_q(long n, long k) {
    if (n < 4 || k < 2 || 2 * k > n) throw OutOfDomain("tri_ear_q: need n >= 4 and 2 <= k <= n/2");
    IntPoly sum;
    for (long j = 0; j <= n - 2 * k; ++j)
        sum += q_binomial(n - 2 * k, j).shifted(j * (n - 2));
    IntPoly p = q_binomial(n - 4, 2 * k - 4) * cat_q(k - 2) * sum;
    p = mul_q_int(p, n);
    p = div_q_int(p, k);
    return p.shifted(k * (k - 2));
}

/// The j-summation factor of tri_ear_q; the only non-palindromic piece.
inline IntPoly tri_ear_sum_factor(long n, long k) {
    if (n < 4 || k < 2 || 2 * k > n) throw OutOfDomain("tri_ear_sum_factor: bad (n,k)");
    IntPoly sum;
    for (long j = 0; j <= n - 2 * k; ++j)
        sum += q_binomial(n - 2 * k, j).shifted(j * (n - 2));
    return sum;
}

/// Twist-action q-Catalan: qbinom(2n,n) - q^2 qbinom(2n,n-2),
/// equal to [2]/[n+2] * qbinom(2n+1,n).
inline IntPoly twist_cat_q(long n) {
    if (n < 0) throw OutOfDomain("twist_cat_q: n < 0");
    return q_binomial(2 * n, n) - q_binomial(2 * n, n - 2).shifted(2);
}

/// The s = n endpoint of the A/B-Narayana interpolation:
/// q^{k(k-1)} qbinom(n-1,k-1) qbinom(n+1,k) = [n+1] Nar_q(n,k).
inline IntPoly ab_candidate_sn(long n, long k) {
    if (n < 1) throw OutOfDomain("ab_candidate_sn: n < 1");
    if (k < 1 || k > n) return IntPoly();
    return (q_binomial(n - 1, k - 1) * q_binomial(n + 1, k)).shifted(k * (k - 1));
}

/// Marked non-crossing matchings with k even edges and r marked regions:
/// Nar_q(n,k+1) * qbinom(n+1,r).
inline IntPoly marked_ncm_q(long n, long k, long r) {
    if (n < 1) throw OutOfDomain("marked_ncm_q: n < 1");
    if (r < 0 || r > n + 1 || k < 0) return IntPoly();
    return nar_q(n, k + 1) * q_binomial(n + 1, r);
}

/// Principal specialization of the skew Schur function s_{2^k 1^s / 1^s}
/// in q, q^2, ..., q^n:
/// q^{k(k+1)} ( qbinom(n,k)^2 - q^{(s+1)^2} qbinom(n,k-s-1) qbinom(n,k+s+1) ).
inline IntPoly schur_interp(long n, long k, long s) {
    if (n < 0 || k < 0 || s < 0 || s > k || k > n)
        throw OutOfDomain("schur_interp: need 0 <= s <= k <= n");
    IntPoly b = q_binomial(n, k);
    IntPoly p = b * b -
        (q_binomial(n, k - s - 1) * q_binomial(n, k + s + 1)).shifted((s + 1) * (s + 1));
    return p.shifted(k * (k + 1));
}

// ---------------------------------------------------------------------------
// String-keyed dispatch used by the CLI and the verification registry.

struct PolyParams {
    long n = 0, k = 0, s = 0, e = 0, l = 0, r = 0;
};

inline IntPoly named_polynomial(const std::string& id, const PolyParams& p) {
    if (id == "CAT") return cat_q(p.n);
    if (id == "NAR") return nar_q(p.n, p.k);
    if (id == "CATB") return cat_b_q(p.n);
    if (id == "NARB") return nar_b_q(p.n, p.k);
    if (id == "X_NS") return x_ns(p.n, p.s);
    if (id == "Y_NS") return y_ns(p.n, p.s);
    if (id == "G_CDES") return g_cdes(p.n, p.k);
    if (id == "QBW") return q_bw(p.n, p.k);
    if (id == "QNCC") return q_ncc(p.n, p.e, p.l);
    if (id == "QNCCB") return q_ncc_b(p.n, p.e, p.l);
    if (id == "PI_B_COEFF") return pi_b_coeff(p.n, p.k);
    if (id == "NARB_PAIRED") return nar_b_paired(p.n, p.k);
    if (id == "U_NK") return u_nk(p.n, p.k);
    if (id == "TRI_EAR") return tri_ear_q(p.n, p.k);
    if (id == "TRI_EAR_SUM") return tri_ear_sum_factor(p.n, p.k);
    if (id == "TWIST_CAT") return twist_cat_q(p.n);
    if (id == "AB_CANDIDATE_SN") return ab_candidate_sn(p.n, p.k);
    if (id == "MARKED_NCM") return marked_ncm_q(p.n, p.k, p.r);
    if (id == "SCHUR_INTERP") return schur_interp(p.n, p.k, p.s);
    throw OutOfDomain("named_polynomial: unknown id " + id);
}

} // namespace cspkit
