#pragma once

// The congruence registry: every congruence the tool verifies, keyed by a
// stable id, with its applicability (residue class of p, lower bound, Euler
// tier) and an evaluator producing lhs/rhs residues. Intermediate reduction
// steps of the two main theorems are registered as first-class checks even
// though they are logically implied: a bug in one sum evaluator then fails
// exactly its own link instead of an opaque end-to-end comparison.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "supercong/primes.hpp"
#include "supercong/quadforms.hpp"
#include "supercong/sums.hpp"
#include "supercong/version.hpp"

namespace supercong {

struct Applicability {
    int mod4 = 0;            // 0 = any odd prime, otherwise 1 or 3
    u64 p_greater_than = 2;  // applies iff p > this
    bool small_tier_only = false;

    bool applies(u64 p, u64 tier_bound) const {
        if (mod4 != 0 && p % 4 != static_cast<u64>(mod4)) return false;
        if (p <= p_greater_than) return false;
        if (small_tier_only && p > tier_bound) return false;
        return true;
    }

    std::string str() const {
        std::string s = mod4 == 0 ? "all odd p" : "p = " + std::to_string(mod4) + " (mod 4)";
        if (p_greater_than > 2) s += ", p > " + std::to_string(p_greater_than);
        if (small_tier_only) s += ", small Euler tier only";
        return s;
    }
};

// Everything one prime's checks share: the context, the tables, and lazily
// built Euler / two-squares data. Confined to the task verifying this prime.
struct EvalContext {
    PrimeContext pc;
    SequenceTables t;
    u64 tier_bound;

    explicit EvalContext(u64 p, u64 tier = 500)
        : pc(PrimeContext::make(p)), t(build_tables(pc)), tier_bound(tier) {}

    const EulerTable& euler_table() {
        if (!etab_) etab_ = euler_numbers_recurrence(pc, std::max<u64>(tier_bound, 5));
        return *etab_;
    }

    // E_{p-3} mod p: defining recurrence on the small tier, the O(1) harmonic
    // formula beyond it.
    u64 euler_pm3() {
        if (!epm3_) {
            if (pc.p <= std::max<u64>(tier_bound, 5)) {
                epm3_ = euler_table().E[pc.p - 3];
            } else {
                epm3_ = euler_pm3_fast(pc, t).value();
            }
        }
        return *epm3_;
    }

    const TwoSquares& two_sq() {
        if (!ts_) ts_ = two_squares(pc.p);
        return *ts_;
    }

    u64 x_mod(int e) { return signed_mod(two_sq().x, pc.modulus(e)); }

private:
    std::optional<EulerTable> etab_;
    std::optional<u64> epm3_;
    std::optional<TwoSquares> ts_;
};

// Collects (lhs, rhs) case pairs from an evaluator. Keeps the first failing
// pair (with its index label) or, if all pass, the last evaluated pair, so a
// result always carries concrete residues.
struct CaseSink {
    explicit CaseSink(u64 modulus) : mm(modulus) {}

    u64 mm;
    bool pass = true;
    u64 lhs = 0, rhs = 0;
    u64 cases = 0;
    std::string note;

    void push(const Residue& l, const Residue& r, const char* index_name = nullptr,
              u64 index = 0) {
        if (l.modulus() != mm || r.modulus() != mm) {
            throw Error("check evaluated at modulus " + std::to_string(l.modulus()) +
                        ", registered for " + std::to_string(mm));
        }
        push_values(l.value(), r.value(), index_name, index);
    }

    void push_values(u64 l, u64 r, const char* index_name = nullptr, u64 index = 0) {
        ++cases;
        if (!pass) return;
        lhs = l;
        rhs = r;
        if (l != r) {
            pass = false;
            if (index_name) note = std::string(index_name) + "=" + std::to_string(index);
        }
    }
};

struct CongruenceCheck {
    std::string id;
    Applicability app;
    int modulus_exp = 1;
    std::string reference;
    std::function<void(EvalContext&, CaseSink&)> eval;
};

struct CheckResult {
    std::string id;
    u64 prime = 0;
    int modulus_exp = 1;
    bool pass = false;
    std::string lhs, rhs;
    std::string note;
    std::chrono::microseconds elapsed{0};
};

namespace detail {

// fixed-modulus helper so check formulas read close to their math
struct ModCalc {
    u64 m;
    u64 of(i64 v) const { return signed_mod(v, m); }
    u64 add(u64 a, u64 b) const { return addmod(a, b, m); }
    u64 sub(u64 a, u64 b) const { return submod(a, b, m); }
    u64 mul(u64 a, u64 b) const { return mulmod(a, b, m); }
    u64 mul3(u64 a, u64 b, u64 c) const { return mul(mul(a, b), c); }
    u64 neg(u64 a) const { return submod(0, a, m); }
    u64 invu(u64 v) const { return invmod(v % m, m); }
    u64 inv(i64 v) const { return invmod(signed_mod(v, m), m); }
    u64 frac(i64 n, i64 d) const { return mul(of(n), inv(d)); }
    // v if positive_sign else -v
    u64 sgn(bool positive_sign, u64 v) const { return positive_sign ? v % m : neg(v % m); }
};

// binom(top, k) mod m by falling factorial; needs k < p so the divisions stay
// invertible (numerator factors divisible by p are fine).
inline u64 binom_mod(u64 top, u64 k, u64 m, u64 p) {
    if (k >= p) throw Error("binom_mod requires k < p");
    u64 acc = 1 % m;
    for (u64 i = 1; i <= k; ++i) {
        acc = mulmod(acc, mulmod((top - i + 1) % m, invmod(i, m), m), m);
    }
    return acc;
}

// sum_{k=lo}^{hi} binom(num/den, k) (-1)^k / k  (mod m)
inline u64 genbinom_alt_over_k(i64 num, i64 den, u64 lo, u64 hi, u64 m) {
    u64 gb = 1 % m, acc = 0;
    for (u64 k = 1; k <= hi; ++k) {
        const i64 new_num = num - static_cast<i64>(k - 1) * den;
        const i64 new_den = static_cast<i64>(k) * den;
        gb = mulmod(gb, mulmod(signed_mod(new_num, m), invmod(signed_mod(new_den, m), m), m),
                    m);
        if (k < lo) continue;
        u64 term = mulmod(gb, invmod(k % m, m), m);
        acc = (k % 2 == 1) ? submod(acc, term, m) : addmod(acc, term, m);
    }
    return acc;
}

// sum_{k=0}^{hi} (-1)^k / binom(row, k)^2  (mod p), row < p
inline u64 row_inv_sq_alt(u64 row, u64 hi, u64 p) {
    u64 rb = 1, acc = 1;  // k = 0 term
    for (u64 k = 1; k <= hi; ++k) {
        rb = mulmod(rb, mulmod((row - k + 1) % p, invmod(k, p), p), p);
        u64 term = invmod(mulmod(rb, rb, p), p);
        acc = (k % 2 == 1) ? submod(acc, term, p) : addmod(acc, term, p);
    }
    return acc;
}

// sum_{k=lo}^{hi} (-1)^k / (k^2 binom((p-1)/2, k))  (mod p)
inline u64 inv_halfbinom_ksq(const SequenceTables& t, u64 lo, u64 hi, u64 p) {
    u64 acc = 0;
    for (u64 k = lo; k <= hi && lo <= hi; ++k) {
        u64 den = mulmod(mulmod(k % p, k % p, p), t.B[k] % p, p);
        u64 term = invmod(den, p);
        acc = (k % 2 == 1) ? submod(acc, term, p) : addmod(acc, term, p);
    }
    return acc;
}

// kernel shorthands reducing to mod p (the chain checks live there)
inline u64 k2p(EvalContext& ec, i64 a, i64 b, unsigned m, i64 bnum, i64 bden, u64 lo, u64 hi) {
    return sum_central_over_affine_pow(a, b, m, rational(bnum, bden), lo, hi, 1, ec.pc, ec.t)
        .value();
}
inline u64 k3p(EvalContext& ec, i64 a, i64 b, unsigned m, i64 bnum, i64 bden, u64 lo, u64 hi) {
    return sum_inv_central_over_affine_pow(a, b, m, rational(bnum, bden), lo, hi, 1, ec.pc,
                                           ec.t)
        .value();
}
inline u64 k4p(EvalContext& ec, i64 a, i64 b, u64 lo, u64 hi) {
    return sum_halfbinom_alt_affine(a, b, HarmonicWeight::None, lo, hi, 1, ec.pc, ec.t).value();
}

}  // namespace detail

inline const std::vector<CongruenceCheck>& congruence_registry() {
    using detail::binom_mod;
    using detail::ModCalc;

    static const std::vector<CongruenceCheck> registry = [] {
        std::vector<CongruenceCheck> reg;
        auto add = [&reg](std::string id, Applicability app, int mod_exp, std::string ref,
                          std::function<void(EvalContext&, CaseSink&)> fn) {
            reg.push_back(CongruenceCheck{std::move(id), app, mod_exp, std::move(ref),
                                          std::move(fn)});
        };

        // H_{floor(p/4)} = -3q + (3/2) p q^2 - (-1)^{(p-1)/2} p E_{p-3} (mod p^2)
        add("C-HPQ", {0, 5}, 2,
            "H_{floor(p/4)} in terms of q_p(2) and E_{p-3} (mod p^2)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.m2};
                const u64 q = pc.qp2.value(), q1 = q % pc.p;
                u64 rhs = c.neg(c.mul(3, q));
                rhs = c.add(rhs, c.mul3(c.frac(3, 2), pc.p, c.mul(q1, q1)));
                const u64 pe = c.mul(pc.p, ec.euler_pm3());
                rhs = pc.p_mod4 == 1 ? c.sub(rhs, pe) : c.add(rhs, pe);
                s.push_values(ec.t.H[pc.p / 4], rhs);
            });

        // H_{(p-1)/2} = -2 q_p(2) (mod p)
        add("C-HHALF", {0, 5}, 1, "H_{(p-1)/2} = -2 q_p(2) (mod p)",
            [](EvalContext& ec, CaseSink& s) {
                ModCalc c{ec.pc.p};
                s.push_values(ec.t.H[ec.pc.half()] % ec.pc.p,
                              c.neg(c.mul(2, ec.pc.qp2.value() % ec.pc.p)));
            });

        // H_{p-1} = 0 (mod p^2)
        add("C-WOLH", {0, 5}, 2, "H_{p-1} = 0 (mod p^2)",
            [](EvalContext& ec, CaseSink& s) { s.push_values(ec.t.H[ec.pc.p - 1], 0); });

        // H^{(2)}_{p-1} = H^{(2)}_{(p-1)/2} = 0 (mod p)
        add("C-H2", {0, 5}, 1, "H^{(2)}_{p-1} and H^{(2)}_{(p-1)/2} vanish (mod p)",
            [](EvalContext& ec, CaseSink& s) {
                s.push_values(ec.t.H2[ec.pc.p - 1] % ec.pc.p, 0, "case", 0);
                s.push_values(ec.t.H2[ec.pc.half()] % ec.pc.p, 0, "case", 1);
            });

        // H^{(2)}_{floor(p/4)} = (-1)^{(p-1)/2} 4 E_{p-3} (mod p); the fast
        // Euler path is derived from this, so it is recurrence-tier only.
        add("C-H2Q", {0, 5, true}, 1,
            "H^{(2)}_{floor(p/4)} = (-1)^{(p-1)/2} 4 E_{p-3} (mod p)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.p};
                const u64 e = ec.euler_table().E[pc.p - 3];
                s.push_values(ec.t.H2[pc.p / 4] % pc.p,
                              c.sgn(pc.p_mod4 == 1, c.mul(4, e)));
            });

        // H_{p-1-k} = H_k (mod p) for 0 <= k <= p-1
        add("C-REFL", {0, 2}, 1, "harmonic reflection H_{p-1-k} = H_k (mod p)",
            [](EvalContext& ec, CaseSink& s) {
                const u64 p = ec.pc.p;
                for (u64 k = 0; k < p; ++k) {
                    s.push_values(ec.t.H[p - 1 - k] % p, ec.t.H[k] % p, "k", k);
                }
            });

        // binom((p-1)/2,k) (-4)^k = binom(2k,k) (1 - p O_k + (p^2/2)(O_k^2 - O2_k))
        // (mod p^3), O_k = sum 1/(2j-1), O2_k = sum 1/(2j-1)^2 over j <= k
        add("C-L21", {0, 2}, 3,
            "ratio of binom((p-1)/2,k) to binom(2k,k)/(-4)^k in odd harmonic sums (mod p^3)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.m3};
                const u64 half_p2 = c.mul3(pc.p % pc.m3, pc.p % pc.m3, c.inv(2));
                u64 pow4 = 1;  // (-4)^k
                const u64 neg4 = c.of(-4);
                for (u64 k = 0; k <= pc.half(); ++k) {
                    u64 lhs = c.mul(ec.t.B[k], pow4);
                    u64 inner = c.sub(1, c.mul(pc.p % pc.m3, ec.t.OH[k]));
                    u64 osq = c.sub(c.mul(ec.t.OH[k], ec.t.OH[k]), ec.t.OH2[k]);
                    inner = c.add(inner, c.mul(half_p2, osq));
                    s.push_values(lhs, c.mul(ec.t.C[k], inner), "k", k);
                    pow4 = c.mul(pow4, neg4);
                }
            });

        // 1/binom(-1/4,(p-1)/2) = (-1)^{(p+1)/4} (1-3p+p q_p(2)) / binom((p-1)/2,(p-3)/4)
        // (mod p^2)
        add("C-MPT", {3, 5}, 2, "closed form for 1/binom(-1/4,(p-1)/2) (mod p^2)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.m2};
                const u64 lhs =
                    c.invu(genbinom_residue(-1, 4, pc.half(), pc.m2).value());
                const u64 q1 = pc.qp2.value() % pc.p;
                u64 inner = c.add(c.of(1 - 3 * static_cast<i64>(pc.p)), c.mul(pc.p, q1));
                const bool plus = ((pc.p + 1) / 4) % 2 == 0;
                u64 rhs = c.mul(inner, c.invu(ec.t.B[(pc.p - 3) / 4] % pc.m2));
                s.push_values(lhs, c.sgn(plus, rhs));
            });

        // binom(2p-1, p-1) = 1 (mod p^3)   [Wolstenholme]
        add("C-WOL", {0, 3}, 3, "binom(2p-1,p-1) = 1 (mod p^3) (Wolstenholme)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                s.push_values(binom_mod(2 * pc.p - 1, pc.p - 1, pc.m3, pc.p), 1);
            });

        // the four harmonic shift congruences, each over 0 <= k <= (p-1)/2
        add("C-L22a", {0, 5}, 2, "H_{p-1-2k} = H_{2k} + p H^{(2)}_{2k} (mod p^2)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.m2};
                for (u64 k = 0; k <= pc.half(); ++k) {
                    u64 rhs = c.add(ec.t.H[2 * k], c.mul(pc.p, ec.t.H2[2 * k]));
                    s.push_values(ec.t.H[pc.p - 1 - 2 * k], rhs, "k", k);
                }
            });
        add("C-L22b", {0, 5}, 2,
            "H_{(p-1)/2-k} = H_{(p-1)/2} + 2H_{2k} - H_k + 2p H^{(2)}_{2k} - (p/2) H^{(2)}_k "
            "(mod p^2)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.m2};
                const u64 p_half = c.mul(pc.p, c.inv(2));
                for (u64 k = 0; k <= pc.half(); ++k) {
                    u64 rhs = ec.t.H[pc.half()];
                    rhs = c.add(rhs, c.mul(2, ec.t.H[2 * k]));
                    rhs = c.sub(rhs, ec.t.H[k]);
                    rhs = c.add(rhs, c.mul3(2, pc.p, ec.t.H2[2 * k]));
                    rhs = c.sub(rhs, c.mul(p_half, ec.t.H2[k]));
                    s.push_values(ec.t.H[pc.half() - k], rhs, "k", k);
                }
            });
        add("C-L22c", {0, 5}, 1, "H^{(2)}_{p-1-2k} = -H^{(2)}_{2k} (mod p)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.p};
                for (u64 k = 0; k <= pc.half(); ++k) {
                    s.push_values(ec.t.H2[pc.p - 1 - 2 * k] % pc.p,
                                  c.neg(ec.t.H2[2 * k] % pc.p), "k", k);
                }
            });
        add("C-L22d", {0, 5}, 1, "H^{(2)}_{(p-1)/2-k} = H^{(2)}_k - 4H^{(2)}_{2k} (mod p)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.p};
                for (u64 k = 0; k <= pc.half(); ++k) {
                    u64 rhs = c.sub(ec.t.H2[k] % pc.p, c.mul(4, ec.t.H2[2 * k] % pc.p));
                    s.push_values(ec.t.H2[pc.half() - k] % pc.p, rhs, "k", k);
                }
            });

        // j binom(2j,j) binom(2(p-j),p-j) = 2p (-1)^{floor(2j/p)-1} (mod p^2)
        add("C-SZW", {0, 3}, 2,
            "j binom(2j,j) binom(2(p-j),p-j) = 2p(-1)^{floor(2j/p)-1} (mod p^2)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.m2};
                for (u64 j = 1; j < pc.p; ++j) {
                    u64 lhs = c.mul3(j, ec.t.C[j] % pc.m2, ec.t.C[pc.p - j] % pc.m2);
                    u64 rhs = c.sgn(2 * j > pc.p, c.mul(2, pc.p));
                    s.push_values(lhs, rhs, "j", j);
                }
            });

        // binom(p-1,(p-1)/2) = (-1)^{(p-1)/2} 4^{p-1} (mod p^3)   [Morley]
        add("C-MOR", {0, 3}, 3,
            "binom(p-1,(p-1)/2) = (-1)^{(p-1)/2} 4^{p-1} (mod p^3) (Morley)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.m3};
                u64 lhs = binom_mod(pc.p - 1, pc.half(), pc.m3, pc.p);
                s.push_values(lhs, c.sgn(pc.p_mod4 == 1, powmod(4, pc.p - 1, pc.m3)));
            });

        // binom((p-1)/2,(p-1)/4) =
        //   (2x - p/(2x) - p^2/(8x^3)) (1 + p q/2 + (p^2/8)(2E_{p-3} - q^2)) (mod p^3)
        // [Cosgrave-Dilcher]
        add("C-CD", {1, 2}, 3,
            "binom((p-1)/2,(p-1)/4) closed form in x, q_p(2), E_{p-3} (mod p^3) "
            "(Cosgrave-Dilcher)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.m3};
                const u64 x = ec.x_mod(3);
                const u64 q2 = pc.qp2.value(), q1 = q2 % pc.p;
                const u64 pp = c.mul(pc.p, pc.p);
                u64 f1 = c.mul(2, x);
                f1 = c.sub(f1, c.mul(pc.p, c.invu(c.mul(2, x))));
                f1 = c.sub(f1, c.mul(pp, c.invu(c.mul3(8, x, c.mul(x, x)))));
                u64 f2 = c.add(1, c.mul3(pc.p, q2, c.inv(2)));
                const u64 w = c.of(2 * static_cast<i64>(ec.euler_pm3()) -
                                   static_cast<i64>(q1 * q1));
                f2 = c.add(f2, c.mul3(pp, w, c.inv(8)));
                s.push_values(ec.t.B[(pc.p - 1) / 4], c.mul(f1, f2));
            });

        // binom((3p-3)/4,(p-1)/4) = (-1)^{(p-1)/4} (2x - p/(2x)) (1 - p q/2) (mod p^2)
        add("C-KMY", {1, 2}, 2,
            "binom((3p-3)/4,(p-1)/4) = (-1)^{(p-1)/4}(2x-p/(2x))(1-pq/2) (mod p^2)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.m2};
                const u64 x = ec.x_mod(2);
                const u64 q1 = pc.qp2.value() % pc.p;
                u64 f1 = c.sub(c.mul(2, x), c.mul(pc.p, c.invu(c.mul(2, x))));
                u64 f2 = c.sub(1, c.mul3(pc.p, q1, c.inv(2)));
                const bool plus = ((pc.p - 1) / 4) % 2 == 0;
                u64 lhs = binom_mod((3 * pc.p - 3) / 4, (pc.p - 1) / 4, pc.m2, pc.p);
                s.push_values(lhs, c.sgn(plus, c.mul(f1, f2)));
            });

        // sum_j binom((p-1)/2,j)(-1)^j/(4j+3) =
        //   (-1)^{(p-1)/4} (1 - 2p + pq/2 + p/(4x^2)) / (2x)  (mod p^2)
        add("C-L31a", {1, 5}, 2,
            "alternating half-row sum over 4j+3, closed form in x (mod p^2)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.m2};
                u64 lhs = sum_halfbinom_alt_affine(4, 3, HarmonicWeight::None, 0, pc.half(),
                                                   2, pc, ec.t)
                              .value();
                const u64 x = ec.x_mod(2);
                const u64 q1 = pc.qp2.value() % pc.p;
                u64 inner = c.of(1 - 2 * static_cast<i64>(pc.p));
                inner = c.add(inner, c.mul3(pc.p, q1, c.inv(2)));
                inner = c.add(inner, c.mul(pc.p, c.invu(c.mul3(4, x, x))));
                const bool plus = ((pc.p - 1) / 4) % 2 == 0;
                s.push_values(lhs, c.sgn(plus, c.mul(inner, c.invu(c.mul(2, x)))));
            });

        // H_j-weighted variant against sum binom(-3/4,k)(-1)^k/k (mod p)
        add("C-L31b", {1, 5}, 1,
            "H_j-weighted half-row sum over 4j+3 vs sum binom(-3/4,k)(-1)^k/k (mod p)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.p};
                u64 lhs = sum_halfbinom_alt_affine(4, 3, HarmonicWeight::H, 0, pc.half(), 1,
                                                   pc, ec.t)
                              .value();
                const u64 sum = detail::genbinom_alt_over_k(-3, 4, 1, pc.half(), pc.p);
                const u64 x = ec.x_mod(1);
                const bool plus = ((pc.p - 1) / 4) % 2 == 0;
                u64 rhs = c.sgn(!plus, c.mul(c.invu(c.mul(2, x)), sum));
                s.push_values(lhs, rhs);
            });

        // p/(2*4^{p-1}) sum_j binom(2j,j) binom(p-1,2j)/((4j+1)4^j) closed form (mod p^3);
        // the j = (p-1)/4 term has 4j+1 = p, so it is split out with the p cancelled.
        add("C-L32", {1, 5}, 3,
            "weighted central/row-binomial half sum, closed form in x (mod p^3)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.m3};
                const u64 j0 = (pc.p - 1) / 4;
                const u64 inv4 = c.inv(4);
                u64 pb = 1;  // binom(p-1, 2j)
                u64 w4 = 1;  // 4^{-j}
                u64 partial = 0, pole_term = 0;
                for (u64 j = 0; j <= pc.half(); ++j) {
                    if (j > 0) {
                        const i64 p_ = static_cast<i64>(pc.p);
                        const i64 j_ = static_cast<i64>(j);
                        pb = c.mul(pb, c.mul(c.of(p_ - (2 * j_ - 1)), c.of(p_ - 2 * j_)));
                        pb = c.mul(pb, c.invu((2 * j - 1) * (2 * j)));
                        w4 = c.mul(w4, inv4);
                    }
                    const u64 term = c.mul3(ec.t.C[j], pb, w4);
                    if (j == j0) {
                        pole_term = term;  // p/(4j+1) = 1 here
                    } else {
                        partial = c.add(partial, c.mul(term, c.invu(4 * j + 1)));
                    }
                }
                u64 lhs = c.mul(c.add(c.mul(pc.p, partial), pole_term),
                                c.invu(c.mul(2, powmod(4, pc.p - 1, pc.m3))));

                const u64 x = ec.x_mod(3);
                const u64 q2 = pc.qp2.value(), q1 = q2 % pc.p;
                const u64 pp = c.mul(pc.p, pc.p);
                const bool plus = ((pc.p - 1) / 4) % 2 == 0;
                const u64 s14 = detail::genbinom_alt_over_k(-1, 4, 1, pc.half(), pc.m3);
                u64 term1 = c.mul3(pc.p, c.invu(powmod(4, pc.p, pc.m3)),
                                   c.mul(ec.t.B[j0], s14));
                u64 inner = x;
                inner = c.sub(inner, c.mul(pc.p, c.invu(c.mul(4, x))));
                inner = c.sub(inner, c.mul(pp, c.invu(c.mul3(16, x, c.mul(x, x)))));
                inner = c.sub(inner, c.mul3(c.frac(3, 2), c.mul(pc.p, x), q2));
                inner = c.add(inner, c.mul3(c.frac(3, 8), c.mul(pp, c.invu(x)), q1));
                inner = c.add(inner, c.mul3(3, c.mul(pp, x), c.mul(q1, q1)));
                s.push_values(lhs, c.add(c.sgn(plus, term1), c.sgn(plus, inner)));
            });

        // sum_{k<=(p-1)/2} binom(2k,k)^2/16^k = (-1/p) (mod p^2)
        // [Rodriguez-Villegas; Mortenson]
        add("C-RV", {0, 3}, 2,
            "half sum of binom(2k,k)^2/16^k = (-1/p) (mod p^2) (Rodriguez-Villegas)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                u64 lhs = sum_weighted_central_sq(CentralWeight::One, 16, SumRange::HalfRow,
                                                  pc, ec.t)
                              .value() %
                          pc.m2;
                ModCalc c{pc.m2};
                s.push_values(lhs, c.sgn(pc.p_mod4 == 1, 1));
            });

        // ... = (-1/p) + p^2 E_{p-3} (mod p^3)
        add("C-SUNE", {0, 3}, 3,
            "half sum of binom(2k,k)^2/16^k = (-1/p) + p^2 E_{p-3} (mod p^3)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.m3};
                u64 lhs = sum_weighted_central_sq(CentralWeight::One, 16, SumRange::HalfRow,
                                                  pc, ec.t)
                              .value();
                u64 rhs = c.add(c.sgn(pc.p_mod4 == 1, 1),
                                c.mul3(pc.p, pc.p, ec.euler_pm3()));
                s.push_values(lhs, rhs);
            });

        // sum_k binom(2k,k) binom(2k,k+d)/16^k =
        //   (-1/p) + p^2 (-1)^d E_{p-3}(d + 1/2)/4 (mod p^3), 0 <= d <= (p-1)/2
        add("C-SUND", {0, 3, true}, 3,
            "binom(2k,k)binom(2k,k+d)/16^k half sums vs Euler polynomial values (mod p^3)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                const auto& et = ec.euler_table();
                ModCalc c{pc.m3};
                const u64 inv16 = c.inv(16);
                const u64 pp = c.mul(pc.p, pc.p);
                const u64 rv = c.sgn(pc.p_mod4 == 1, 1);
                for (u64 d = 0; d <= pc.half(); ++d) {
                    u64 acc = 0;
                    u64 bd = 1;  // binom(2k, k+d), starting at k = d
                    u64 w = powmod(inv16, d, pc.m3);
                    for (u64 k = d; k <= pc.half(); ++k) {
                        acc = c.add(acc, c.mul3(ec.t.C[k], bd, w));
                        if (k < pc.half()) {
                            bd = c.mul(bd, c.mul((2 * k + 1) * (2 * k + 2) % pc.m3,
                                                 c.invu((k + 1 + d) * (k + 1 - d))));
                            w = c.mul(w, inv16);
                        }
                    }
                    const u64 ep =
                        euler_polynomial_at(pc.p - 3,
                                            rational(2 * static_cast<long>(d) + 1, 2), et, pc)
                            .value();
                    u64 tail = c.mul3(pp, ep, c.inv(4));
                    u64 rhs = d % 2 == 0 ? c.add(rv, tail) : c.sub(rv, tail);
                    s.push_values(acc, rhs, "d", d);
                }
            });

        // half sums over 8^k and -(-16)^k both equal
        //   (-1)^{(p+1)/4} 2p / binom((p+1)/2,(p+1)/4) (mod p^2)
        add("C-HALF16", {3, 2}, 2,
            "half sums over 8^k and -(-16)^k vs 2p/binom((p+1)/2,(p+1)/4) (mod p^2)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.m2};
                const bool plus = ((pc.p + 1) / 4) % 2 == 0;
                u64 rhs = c.sgn(plus, c.mul(c.mul(2, pc.p),
                                            c.invu(binom_mod((pc.p + 1) / 2, (pc.p + 1) / 4,
                                                             pc.m2, pc.p))));
                u64 lhs8 = sum_weighted_central_sq(CentralWeight::One, 8, SumRange::HalfRow,
                                                   pc, ec.t)
                               .value() %
                           pc.m2;
                u64 lhs16 = sum_weighted_central_sq(CentralWeight::One, -16,
                                                    SumRange::HalfRow, pc, ec.t)
                                .value() %
                            pc.m2;
                s.push_values(lhs8, rhs, "case", 0);
                s.push_values(c.neg(lhs16), rhs, "case", 1);
            });

        // full sum over 8^k = (-1)^{(p+1)/4}/binom((p-1)/2,(p-3)/4) *
        //   (p(1 - p + pq/2) - p^2 sum_{k<=(p-3)/4} binom((p-1)/2,k)(-1)^k/(2k+1)) (mod p^3)
        add("C-ZHU1", {3, 5}, 3,
            "full sum of binom(2k,k)^2/8^k, closed form (mod p^3)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.m3};
                u64 lhs = sum_weighted_central_sq(CentralWeight::One, 8, SumRange::FullRow,
                                                  pc, ec.t)
                              .value();
                const u64 q1 = pc.qp2.value() % pc.p;
                ModCalc c2{pc.m2};
                u64 inner = c2.add(c2.of(1 - static_cast<i64>(pc.p)),
                                   c2.mul3(pc.p, q1, c2.inv(2)));
                const u64 sum = detail::k4p(ec, 2, 1, 0, (pc.p - 3) / 4);
                u64 body = c.sub(c.mul(pc.p, inner), c.mul3(pc.p, pc.p, sum));
                const bool plus = ((pc.p + 1) / 4) % 2 == 0;
                u64 rhs = c.sgn(plus, c.mul(body, c.invu(ec.t.B[(pc.p - 3) / 4])));
                s.push_values(lhs, rhs);
            });

        // tail sum over (p+1)/2..p-1 of binom^2/(-16)^k =
        //   p^2 sum_{k<=(p-3)/2} (-1)^k / binom((p-3)/2,k)^2 (mod p^3)
        add("C-TAIL", {3, 2}, 3,
            "tail of the -16^k sum vs inverse-square row sums (mod p^3)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.m3};
                u64 full = sum_weighted_central_sq(CentralWeight::One, -16, SumRange::FullRow,
                                                   pc, ec.t)
                               .value();
                u64 half = sum_weighted_central_sq(CentralWeight::One, -16, SumRange::HalfRow,
                                                   pc, ec.t)
                               .value();
                u64 rhs = c.mul3(pc.p, pc.p,
                                 detail::row_inv_sq_alt((pc.p - 3) / 2, (pc.p - 3) / 2, pc.p));
                s.push_values(c.sub(full, half), rhs);
            });

        // Reduction chain for the full-range 8^k vs -16^k theorem, all mod p.
        // Step 1 compares -2q - 2 sum binom((p-1)/2,k)(-1)^k/(2k+1) against the
        // bracket of central-binomial quarter sums.
        add("C-CHAIN-A1", {3, 5}, 1, "reduction step 1 for the full-range theorem (mod p)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.p};
                const u64 q1 = pc.qp2.value() % pc.p;
                const u64 qr = (pc.p + 1) / 4;
                u64 lhs = c.neg(c.add(c.mul(2, q1),
                                      c.mul(2, detail::k4p(ec, 2, 1, 0, (pc.p - 3) / 4))));
                const u64 s1 = detail::k2p(ec, 1, 0, 1, -1, 16, 1, qr);
                const u64 s2 = detail::k2p(ec, 2, -1, 2, -1, 16, 1, qr);
                const u64 s3 = detail::k2p(ec, 2, -1, 1, -1, 16, 1, qr);
                const u64 s4 = detail::k2p(ec, 1, 0, 1, -1, 1, 1, (pc.p - 3) / 4);
                const u64 s5 = detail::k2p(ec, 2, 1, 1, -1, 1, 0, (pc.p - 3) / 4);
                const bool plus = qr % 2 == 0;
                u64 rhs = c.sgn(plus, ec.t.B[(pc.p - 3) / 4] % pc.p);
                rhs = c.sub(rhs, c.mul(c.inv(2), c.sub(s1, c.mul(12, c.add(s2, s3)))));
                rhs = c.add(rhs, c.mul(2, c.add(c.mul(c.frac(3, 4), s4), s5)));
                s.push_values(lhs, rhs);
            });

        add("C-CHAIN-A2", {3, 5}, 1, "reduction step 2 for the full-range theorem (mod p)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.p};
                const u64 q1 = pc.qp2.value() % pc.p;
                const u64 qr = (pc.p + 1) / 4;
                u64 lhs = c.neg(c.add(c.mul(2, q1),
                                      c.mul(2, detail::k4p(ec, 2, 1, 0, (pc.p - 3) / 4))));
                const u64 s2 = detail::k2p(ec, 2, -1, 2, -1, 16, 1, qr);
                const u64 s3 = detail::k2p(ec, 2, -1, 1, -1, 16, 1, qr);
                const u64 s4 = detail::k2p(ec, 1, 0, 1, -1, 1, 1, (pc.p - 3) / 4);
                const u64 s5 = detail::k2p(ec, 2, 1, 1, -1, 1, 0, (pc.p - 3) / 4);
                const u64 s6 = detail::k2p(ec, 2, 1, 1, -1, 1, 0, (pc.p - 3) / 2);
                u64 rhs = c.add(s6, c.mul(6, c.add(s2, s3)));
                rhs = c.add(rhs, c.mul(c.frac(3, 2), s4));
                rhs = c.add(rhs, s5);
                s.push_values(lhs, rhs);
            });

        add("C-CHAIN-A3", {3, 5}, 1, "reduction step 3 for the full-range theorem (mod p)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.p};
                const u64 q1 = pc.qp2.value() % pc.p;
                u64 lhs = c.neg(c.add(c.mul(2, q1),
                                      c.mul(2, detail::k4p(ec, 2, 1, 0, (pc.p - 3) / 4))));
                const u64 s4 = detail::k2p(ec, 1, 0, 1, -1, 1, 1, (pc.p - 3) / 4);
                const u64 s5 = detail::k2p(ec, 2, 1, 1, -1, 1, 0, (pc.p - 3) / 4);
                const u64 s6 = detail::k2p(ec, 2, 1, 1, -1, 1, 0, (pc.p - 3) / 2);
                const u64 s7 = detail::k2p(ec, 2, 1, 1, -1, 16, 0, (pc.p - 3) / 4);
                u64 rhs = c.sub(s6, c.mul(c.frac(3, 2), s7));
                rhs = c.add(rhs, c.mul(c.frac(3, 2), s4));
                rhs = c.add(rhs, s5);
                s.push_values(lhs, rhs);
            });

        // -2q = sum_{k<=(p-3)/2} binom(2k,k)(-1)^k/(2k+1)
        //       + (3/4) sum_{k<=(p-1)/2} (-1)^k binom(2k,k)/k (mod p)
        add("C-CHAIN-A4", {3, 5}, 1, "reduction step 4 for the full-range theorem (mod p)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.p};
                const u64 q1 = pc.qp2.value() % pc.p;
                const u64 s6 = detail::k2p(ec, 2, 1, 1, -1, 1, 0, (pc.p - 3) / 2);
                const u64 s8 = detail::k2p(ec, 1, 0, 1, -1, 1, 1, pc.half());
                s.push_values(c.neg(c.mul(2, q1)),
                              c.add(s6, c.mul(c.frac(3, 4), s8)));
            });

        // sum_{k<=(p-1)/2} binom(2k,k)/(k(-16)^k) = -(15/2) F_{p-(p/5)}/p + 4q (mod p)
        add("C-CHAIN-A5", {3, 5}, 1,
            "central binomials over k(-16)^k vs the Fibonacci quotient (mod p)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.p};
                const u64 q1 = pc.qp2.value() % pc.p;
                u64 lhs = detail::k2p(ec, 1, 0, 1, -1, 16, 1, pc.half());
                const u64 fq = fib_quotient(pc).value();
                u64 rhs = c.add(c.neg(c.mul(c.frac(15, 2), fq)), c.mul(4, q1));
                s.push_values(lhs, rhs);
            });

        // sum_{k<=(p-1)/2} (-1)^k binom(2k,k)/k = -5 F_{p-(p/5)}/p (mod p)
        add("C-FIB", {0, 5}, 1,
            "alternating central binomials over k vs the Fibonacci quotient (mod p)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.p};
                u64 lhs = detail::k2p(ec, 1, 0, 1, -1, 1, 1, pc.half());
                s.push_values(lhs, c.neg(c.mul(5, fib_quotient(pc).value())));
            });

        // full sum of (k+1) binom(2k,k)^2/8^k = (-1)^{(p-1)/4}
        //   (x - (p^2 x/8) sum (-1)^k/(k^2 binom((p-1)/2,k))
        //      + (p^2/(4x)) sum_{k<=(p-5)/4} binom((p-1)/2,k)(-1)^k/(2k+1)) (mod p^3)
        add("C-K18K", {1, 5}, 3,
            "full sum of (k+1) binom(2k,k)^2/8^k, closed form in x (mod p^3)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.m3};
                u64 lhs = sum_weighted_central_sq(CentralWeight::KPlusOne, 8,
                                                  SumRange::FullRow, pc, ec.t)
                              .value();
                const u64 x = ec.x_mod(3);
                const u64 pp = c.mul(pc.p, pc.p);
                const u64 sk = detail::inv_halfbinom_ksq(ec.t, 1, (pc.p - 1) / 4, pc.p);
                const u64 sb = detail::k4p(ec, 2, 1, 0, (pc.p - 5) / 4);
                u64 inner = x;
                inner = c.sub(inner, c.mul3(pp, c.mul(x, c.inv(8)), sk));
                inner = c.add(inner, c.mul3(pp, c.invu(c.mul(4, x)), sb));
                const bool plus = ((pc.p - 1) / 4) % 2 == 0;
                s.push_values(lhs, c.sgn(plus, inner));
            });

        // half sum of (2k+1) binom(2k,k)^2/(-16)^k = (-1)^{(p-1)/4}
        //   (x + 5p^2 q/(8x) - 5p^2 x q/2 - 25 p^2 x q^2/8 - p^2 x E_{p-3}/4)
        //   - (p^2/2) sum_k k(-1)^k binom((p-1)/2,k)^2 (2H_k^2 + H_k^{(2)}) (mod p^3)
        add("C-2K16K", {1, 5}, 3,
            "half sum of (2k+1) binom(2k,k)^2/(-16)^k, closed form in x (mod p^3)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.m3};
                u64 lhs = sum_weighted_central_sq(CentralWeight::TwoKPlusOne, -16,
                                                  SumRange::HalfRow, pc, ec.t)
                              .value();
                const u64 x = ec.x_mod(3);
                const u64 q1 = pc.qp2.value() % pc.p;
                const u64 pp = c.mul(pc.p, pc.p);
                const u64 e = ec.euler_pm3();
                u64 inner = x;
                inner = c.add(inner, c.mul3(c.frac(5, 8), c.mul(pp, c.invu(x)), q1));
                inner = c.sub(inner, c.mul3(c.frac(5, 2), c.mul(pp, x), q1));
                inner = c.sub(inner, c.mul3(c.frac(25, 8), c.mul(pp, x), c.mul(q1, q1)));
                inner = c.sub(inner, c.mul3(c.inv(4), c.mul(pp, x), e));
                const u64 k5 = sum_halfbinom_sq_weighted(SquareWeight::K,
                                                         SquareHarmonic::TwoHSqPlusH2, pc,
                                                         ec.t)
                                   .value() %
                               pc.p;
                const bool plus = ((pc.p - 1) / 4) % 2 == 0;
                u64 rhs = c.sub(c.sgn(plus, inner), c.mul3(pp, c.inv(2), k5));
                s.push_values(lhs, rhs);
            });

        // Reduction chain for the weighted theorem; every step asserts a
        // mod-p combination of quarter sums vanishes.
        auto chain_b_common = [](EvalContext& ec, ModCalc& c, u64& x, u64& xinv, u64& q1,
                                 bool& plus) {
            x = ec.x_mod(1);
            xinv = c.invu(x);
            q1 = ec.pc.qp2.value() % ec.pc.p;
            plus = ((ec.pc.p - 1) / 4) % 2 == 0;
        };

        add("C-CHAIN-B1", {1, 5}, 1, "reduction step 1 for the weighted theorem (mod p)",
            [chain_b_common](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.p};
                u64 x, xinv, q1;
                bool plus;
                chain_b_common(ec, c, x, xinv, q1, plus);
                const u64 qr = (pc.p - 1) / 4;
                u64 acc = c.neg(c.mul(c.frac(3, 16), xinv));
                acc = c.sub(acc, c.mul(x, c.inv(8)));
                acc = c.add(acc, c.mul3(q1, xinv, c.inv(4)));
                acc = c.add(acc, c.sgn(plus, c.frac(7, 16)));
                acc = c.sub(acc, c.mul3(x, c.inv(8),
                                        detail::inv_halfbinom_ksq(ec.t, 1, qr, pc.p)));
                acc = c.add(acc, c.mul3(xinv, c.inv(4),
                                        detail::k4p(ec, 2, 1, 0, (pc.p - 5) / 4)));
                acc = c.sub(acc, c.mul3(x, c.frac(5, 8),
                                        detail::k3p(ec, 1, 0, 0, -1, 1, 1, qr)));
                acc = c.add(acc, c.mul3(x, c.frac(3, 16),
                                        detail::k3p(ec, 1, 0, 2, -1, 1, 1, qr)));
                acc = c.add(acc, c.mul3(x, c.inv(2),
                                        detail::k3p(ec, 2, -1, 1, -1, 1, 1, qr)));
                acc = c.sub(acc, c.mul3(xinv, c.frac(15, 16),
                                        detail::k2p(ec, 1, 0, 0, -1, 16, 1, qr)));
                acc = c.sub(acc, c.mul3(xinv, c.inv(16),
                                        detail::k2p(ec, 1, 0, 1, -1, 16, 1, qr)));
                acc = c.add(acc, c.mul3(xinv, c.frac(3, 4),
                                        detail::k2p(ec, 2, -1, 2, -1, 16, 1, qr)));
                s.push_values(acc, 0);
            });

        add("C-CHAIN-B2", {1, 5}, 1, "reduction step 2 for the weighted theorem (mod p)",
            [chain_b_common](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.p};
                u64 x, xinv, q1;
                bool plus;
                chain_b_common(ec, c, x, xinv, q1, plus);
                const u64 qr = (pc.p - 1) / 4;
                u64 acc = c.neg(c.mul(c.frac(3, 16), xinv));
                acc = c.sub(acc, c.mul(x, c.inv(8)));
                acc = c.add(acc, c.mul3(q1, xinv, c.inv(4)));
                acc = c.add(acc, c.sgn(plus, c.frac(7, 16)));
                acc = c.add(acc, c.mul3(x, c.inv(4),
                                        detail::k3p(ec, 1, 0, 1, -1, 1, 1, qr)));
                acc = c.add(acc, c.mul3(xinv, c.inv(4),
                                        detail::k4p(ec, 2, 1, 0, (pc.p - 5) / 4)));
                acc = c.sub(acc, c.mul3(x, c.frac(5, 8),
                                        detail::k3p(ec, 1, 0, 0, -1, 1, 1, qr)));
                acc = c.sub(acc, c.mul3(xinv, c.frac(15, 16),
                                        detail::k2p(ec, 1, 0, 0, -1, 16, 1, qr)));
                acc = c.sub(acc, c.mul3(xinv, c.inv(16),
                                        detail::k2p(ec, 1, 0, 1, -1, 16, 1, qr)));
                acc = c.add(acc, c.mul3(xinv, c.frac(3, 4),
                                        detail::k2p(ec, 2, -1, 2, -1, 16, 1, qr)));
                s.push_values(acc, 0);
            });

        add("C-CHAIN-B3", {1, 5}, 1, "reduction step 3 for the weighted theorem (mod p)",
            [chain_b_common](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.p};
                u64 x, xinv, q1;
                bool plus;
                chain_b_common(ec, c, x, xinv, q1, plus);
                const u64 qr = (pc.p - 1) / 4;
                u64 acc = c.neg(c.mul(c.frac(3, 16), xinv));
                acc = c.sub(acc, c.mul(x, c.inv(8)));
                acc = c.add(acc, c.mul3(q1, xinv, c.inv(4)));
                acc = c.add(acc, c.sgn(plus, c.frac(7, 16)));
                acc = c.add(acc, c.mul3(x, c.inv(4),
                                        detail::k3p(ec, 1, 0, 1, -1, 1, 1, qr)));
                acc = c.add(acc, c.mul3(xinv, c.frac(3, 32),
                                        detail::k2p(ec, 1, 0, 1, -1, 1, 1, qr)));
                acc = c.sub(acc, c.mul3(xinv, c.inv(16),
                                        detail::k2p(ec, 1, 0, 1, -1, 16, 1, pc.half())));
                acc = c.sub(acc, c.mul3(x, c.frac(5, 8),
                                        detail::k3p(ec, 1, 0, 0, -1, 1, 1, qr)));
                acc = c.sub(acc, c.mul3(xinv, c.frac(15, 16),
                                        detail::k2p(ec, 1, 0, 0, -1, 16, 1, qr)));
                acc = c.add(acc, c.mul3(xinv, c.frac(3, 4),
                                        detail::k2p(ec, 2, -1, 2, -1, 16, 1, qr)));
                s.push_values(acc, 0);
            });

        add("C-CHAIN-B4", {1, 5}, 1, "reduction step 4 for the weighted theorem (mod p)",
            [chain_b_common](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.p};
                u64 x, xinv, q1;
                bool plus;
                chain_b_common(ec, c, x, xinv, q1, plus);
                const u64 qr = (pc.p - 1) / 4;
                u64 acc = c.neg(c.mul(c.frac(3, 16), xinv));
                acc = c.sub(acc, c.mul(x, c.inv(8)));
                acc = c.add(acc, c.sgn(plus, c.frac(7, 16)));
                acc = c.add(acc, c.mul3(x, c.inv(4),
                                        detail::k3p(ec, 1, 0, 1, -1, 1, 1, qr)));
                acc = c.sub(acc, c.mul3(x, c.frac(5, 8),
                                        detail::k3p(ec, 1, 0, 0, -1, 1, 1, qr)));
                acc = c.sub(acc, c.mul3(xinv, c.frac(15, 16),
                                        detail::k2p(ec, 1, 0, 0, -1, 16, 1, qr)));
                acc = c.add(acc, c.mul3(xinv, c.frac(3, 32),
                                        detail::k2p(ec, 1, 1, 1, -1, 16, 0, (pc.p - 5) / 4)));
                s.push_values(acc, 0);
            });

        add("C-CHAIN-B5", {1, 5}, 1, "reduction step 5 for the weighted theorem (mod p)",
            [chain_b_common](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.p};
                u64 x, xinv, q1;
                bool plus;
                chain_b_common(ec, c, x, xinv, q1, plus);
                const u64 qr = (pc.p - 1) / 4;
                u64 acc = c.neg(c.mul(c.frac(3, 16), xinv));
                acc = c.add(acc, c.sgn(plus, c.frac(3, 8)));
                acc = c.sub(acc, c.mul3(xinv, c.frac(15, 16),
                                        detail::k2p(ec, 1, 0, 0, -1, 16, 1, qr)));
                acc = c.add(acc, c.mul3(xinv, c.frac(3, 32),
                                        detail::k2p(ec, 1, 1, 1, -1, 16, 0, (pc.p - 5) / 4)));
                s.push_values(acc, 0);
            });

        // (x/4) sum (-1)^k/(k binom) - (5x/8) sum (-1)^k/binom
        //   = x/8 - (1/16)(-1)^{(p-1)/4}  (mod p)
        add("C-RM25", {1, 5}, 1,
            "inverse central binomial quarter sums vs x/8 - (1/16)(-1)^{(p-1)/4} (mod p)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.p};
                const u64 x = ec.x_mod(1);
                const u64 qr = (pc.p - 1) / 4;
                u64 lhs = c.sub(c.mul3(x, c.inv(4), detail::k3p(ec, 1, 0, 1, -1, 1, 1, qr)),
                                c.mul3(x, c.frac(5, 8),
                                       detail::k3p(ec, 1, 0, 0, -1, 1, 1, qr)));
                const bool plus = qr % 2 == 0;
                u64 rhs = c.sub(c.mul(x, c.inv(8)), c.sgn(plus, c.inv(16)));
                s.push_values(lhs, rhs);
            });

        // (k+1)/8^k full sum + (2k+1)/(-16)^k half sum = 0 (mod p^2) for p = 3 (mod 4)
        add("C-SUN-R3", {3, 2}, 2,
            "(k+1)/8^k full + (2k+1)/(-16)^k half sums cancel (mod p^2)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.m2};
                u64 a = sum_weighted_central_sq(CentralWeight::KPlusOne, 8, SumRange::FullRow,
                                                pc, ec.t)
                            .value() %
                        pc.m2;
                u64 b = sum_weighted_central_sq(CentralWeight::TwoKPlusOne, -16,
                                                SumRange::HalfRow, pc, ec.t)
                            .value() %
                        pc.m2;
                s.push_values(c.add(a, b), 0);
            });

        // sum binom(2k,k)^2/8^k = -sum binom(2k,k)^2/(-16)^k over 0..p-1 (mod p^3)
        add("C-THM11", {3, 2}, 3,
            "full sums over 8^k and -16^k are negatives of each other (mod p^3)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                u64 lhs = sum_weighted_central_sq(CentralWeight::One, 8, SumRange::FullRow,
                                                  pc, ec.t)
                              .value();
                u64 rhs = submod(
                    0,
                    sum_weighted_central_sq(CentralWeight::One, -16, SumRange::FullRow, pc,
                                            ec.t)
                        .value(),
                    pc.m3);
                s.push_values(lhs, rhs);
            });

        // (k+1)/8^k full sum + (2k+1)/(-16)^k half sum = 2(2/p)x (mod p^3),
        // p = x^2 + y^2 with x = 1 (mod 4)
        add("C-THM12", {1, 2}, 3,
            "weighted sums equal 2(2/p)x for p = x^2 + y^2, x = 1 (mod 4) (mod p^3)",
            [](EvalContext& ec, CaseSink& s) {
                const auto& pc = ec.pc;
                ModCalc c{pc.m3};
                u64 a = sum_weighted_central_sq(CentralWeight::KPlusOne, 8, SumRange::FullRow,
                                                pc, ec.t)
                            .value();
                u64 b = sum_weighted_central_sq(CentralWeight::TwoKPlusOne, -16,
                                                SumRange::HalfRow, pc, ec.t)
                            .value();
                u64 rhs = signed_mod(2 * static_cast<i64>(pc.leg2) * ec.two_sq().x,
                                     pc.m3);
                s.push_values(c.add(a, b), rhs);
            });

        return reg;
    }();
    return registry;
}

inline const CongruenceCheck& find_check(const std::string& id) {
    for (const auto& entry : congruence_registry()) {
        if (entry.id == id) return entry;
    }
    throw UnknownCheck("no congruence check registered with id " + id);
}

inline CheckResult evaluate_check(const CongruenceCheck& check, EvalContext& ec) {
    CheckResult r;
    r.id = check.id;
    r.prime = ec.pc.p;
    r.modulus_exp = check.modulus_exp;
    const auto start = std::chrono::steady_clock::now();
    CaseSink sink(ec.pc.modulus(check.modulus_exp));
    try {
        check.eval(ec, sink);
        r.pass = sink.pass;
        r.lhs = std::to_string(sink.lhs);
        r.rhs = std::to_string(sink.rhs);
        r.note = sink.note;
    } catch (const std::exception& e) {
        r.pass = false;
        r.note = e.what();
    }
    r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start);
    return r;
}

struct EvalOptions {
    u64 euler_tier_bound = 500;
};

inline CheckResult run_check(const std::string& id, u64 p, const EvalOptions& opts = {}) {
    const CongruenceCheck& check = find_check(id);
    if (p % 2 == 0 || !is_prime(p)) {
        throw NotApplicable(std::to_string(p) + " is not an odd prime");
    }
    if (!check.app.applies(p, opts.euler_tier_bound)) {
        throw NotApplicable(id + " is not applicable at p = " + std::to_string(p) + " (" +
                            check.app.str() + ")");
    }
    EvalContext ec(p, opts.euler_tier_bound);
    return evaluate_check(check, ec);
}

struct SweepOptions {
    u64 lo = 3;
    u64 hi = 10000;
    // nullopt = every registered check; an empty list selects nothing
    std::optional<std::vector<std::string>> checks;
    unsigned jobs = 1;
    u64 euler_tier_bound = 500;
    bool exploratory = false;
    bool progress = false;
};

struct CheckCounts {
    u64 passed = 0;
    u64 failed = 0;
};

struct SweepReport {
    u64 lo = 0, hi = 0;
    std::string version;
    std::string started;  // UTC, ISO 8601; lives in metadata only
    std::chrono::milliseconds duration{0};
    std::map<std::string, CheckCounts> counts;
    std::vector<CheckResult> results;
    std::vector<CheckResult> failures;
    std::vector<CheckResult> exploratory;
};

namespace detail {

inline std::string utc_now_iso8601() {
    const std::time_t now = std::time(nullptr);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

}  // namespace detail

// Runs every selected check on every prime in [lo, hi]. Primes are handed to
// workers through a shared counter; results are merged and sorted by
// (prime, id), so the report is identical for any parallelism.
inline SweepReport sweep(const SweepOptions& opt) {
    if (opt.lo > opt.hi) {
        throw Error("sweep requires lo <= hi, got [" + std::to_string(opt.lo) + ", " +
                    std::to_string(opt.hi) + "]");
    }
    if (opt.hi >= (1ull << 21)) {
        throw Error("sweep limited to p < 2^21 so that p^3 fits 63 bits");
    }
    std::vector<const CongruenceCheck*> selected;
    if (!opt.checks.has_value()) {
        for (const auto& c : congruence_registry()) selected.push_back(&c);
    } else {
        for (const auto& id : *opt.checks) selected.push_back(&find_check(id));
    }

    const auto start_wall = std::chrono::steady_clock::now();
    SweepReport report;
    report.lo = opt.lo;
    report.hi = opt.hi;
    report.version = kVersion;
    report.started = detail::utc_now_iso8601();

    const std::vector<u64> primes = primes_in(std::max<u64>(opt.lo, 3), opt.hi);
    const unsigned jobs = std::max(1u, opt.jobs);

    std::vector<std::vector<CheckResult>> buckets(jobs), xbuckets(jobs);
    std::atomic<size_t> next{0};
    std::atomic<size_t> done{0};

    auto work = [&](unsigned worker) {
        for (size_t i; (i = next.fetch_add(1)) < primes.size();) {
            const u64 p = primes[i];
            EvalContext ec(p, opt.euler_tier_bound);
            for (const CongruenceCheck* c : selected) {
                if (c->app.applies(p, opt.euler_tier_bound)) {
                    buckets[worker].push_back(evaluate_check(*c, ec));
                } else if (opt.exploratory && c->id == "C-CHAIN-A5" && p > 5 &&
                           p % 4 == 1) {
                    xbuckets[worker].push_back(evaluate_check(*c, ec));
                }
            }
            const size_t finished = done.fetch_add(1) + 1;
            if (opt.progress && finished % 500 == 0) {
                std::fprintf(stderr, "sweep: %zu/%zu primes\n", finished, primes.size());
            }
        }
    };

    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }

    for (auto& bucket : buckets) {
        report.results.insert(report.results.end(), bucket.begin(), bucket.end());
    }
    for (auto& bucket : xbuckets) {
        report.exploratory.insert(report.exploratory.end(), bucket.begin(), bucket.end());
    }
    auto by_prime_id = [](const CheckResult& a, const CheckResult& b) {
        return a.prime != b.prime ? a.prime < b.prime : a.id < b.id;
    };
    std::sort(report.results.begin(), report.results.end(), by_prime_id);
    std::sort(report.exploratory.begin(), report.exploratory.end(), by_prime_id);

    for (const auto& r : report.results) {
        auto& counts = report.counts[r.id];
        (r.pass ? counts.passed : counts.failed) += 1;
        if (!r.pass) report.failures.push_back(r);
    }
    report.duration = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start_wall);
    return report;
}

}  // namespace supercong
