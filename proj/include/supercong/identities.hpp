#pragma once

// Registry of combinatorial identities verified pointwise in exact rational
// arithmetic. Each entry evaluates both sides of one identity at concrete
// parameters; the default domain is n in [1, n_max] with every valid j.

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supercong/errors.hpp"
#include "supercong/exactq.hpp"

namespace supercong {

struct IdentityParams {
    unsigned n = 1;
    std::optional<unsigned> j;

    std::string str() const {
        std::string s = "n=" + std::to_string(n);
        if (j) s += ",j=" + std::to_string(*j);
        return s;
    }
};

struct IdentityCheck {
    std::string id;
    std::string domain;     // human-readable description of valid parameters
    std::string reference;  // what the identity says
    std::function<bool(const IdentityParams&)> valid;
    std::function<std::vector<IdentityParams>(unsigned)> enumerate;  // up to n_max
    std::function<std::pair<Rational, Rational>(const IdentityParams&)> eval;
};

struct IdentityResult {
    std::string id;
    IdentityParams params;
    bool pass = false;
    std::string lhs, rhs;
    std::chrono::microseconds elapsed{0};
};

namespace detail {

inline Integer ipow(long base, unsigned long e) {
    Integer b(base), r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Rational qpow(const Rational& base, unsigned long e) {
    Rational r = 1;
    for (unsigned long i = 0; i < e; ++i) r *= base;
    return r;
}

inline int alt(unsigned long k) { return k % 2 == 0 ? 1 : -1; }

// the n-only / n-and-j domain enumerators shared by the registry
inline std::vector<IdentityParams> range_n(unsigned n_max, unsigned step = 1,
                                           unsigned first = 1) {
    std::vector<IdentityParams> out;
    for (unsigned n = first; n <= n_max; n += step) out.push_back({n, std::nullopt});
    return out;
}

inline std::vector<IdentityParams> range_nj_half(unsigned n_max) {
    // all (n, j) with 0 <= 2j <= n-1
    std::vector<IdentityParams> out;
    for (unsigned n = 1; n <= n_max; ++n) {
        for (unsigned j = 0; 2 * j <= n - 1; ++j) out.push_back({n, j});
    }
    return out;
}

}  // namespace detail

inline const std::vector<IdentityCheck>& identity_registry() {
    using detail::alt;
    using detail::ipow;
    using detail::qpow;

    static const std::vector<IdentityCheck> registry = [] {
        std::vector<IdentityCheck> reg;

        auto n_only = [](unsigned, const IdentityParams& p) {
            return p.n >= 1 && !p.j.has_value();
        };

        auto add_n = [&](std::string id, std::string reference,
                         std::function<std::pair<Rational, Rational>(unsigned)> f) {
            reg.push_back(IdentityCheck{
                std::move(id), "n >= 1", std::move(reference),
                [n_only](const IdentityParams& p) { return n_only(0, p); },
                [](unsigned n_max) { return detail::range_n(n_max); },
                [f](const IdentityParams& p) { return f(p.n); }});
        };

        // binom(2n,n) = sum_k binom(2k,k) binom(n,2k) 2^{n-2k}
        add_n("I-DBL", "central binomial doubling expansion", [](unsigned n) {
            Rational lhs = 0;
            for (unsigned k = 0; 2 * k <= n; ++k) {
                lhs += Rational(exact_central_binom(k) * exact_binomial(n, 2 * k) *
                                ipow(2, n - 2 * k));
            }
            return std::make_pair(lhs, Rational(exact_central_binom(n)));
        });

        // sum_{k=2j}^{n-1} binom(2k,k) binom(k,2j)/4^k
        //   = n binom(2n-1,n-1) binom(n-1,2j) / (4^{n-1}(4j+1))
        reg.push_back(IdentityCheck{
            "I-PART1", "n >= 1, 0 <= 2j <= n-1",
            "partial sums of binom(2k,k) binom(k,2j)/4^k",
            [](const IdentityParams& p) { return p.n >= 1 && p.j && 2 * *p.j <= p.n - 1; },
            [](unsigned n_max) { return detail::range_nj_half(n_max); },
            [](const IdentityParams& p) {
                const unsigned n = p.n, j = *p.j;
                Rational lhs = 0;
                for (unsigned k = 2 * j; k + 1 <= n; ++k) {
                    lhs += rational(exact_central_binom(k) * exact_binomial(k, 2 * j),
                                    ipow(4, k));
                }
                Rational rhs = rational(
                    Integer(n) * exact_binomial(2 * n - 1, n - 1) *
                        exact_binomial(n - 1, 2 * j),
                    ipow(4, n - 1) * (4 * j + 1));
                return std::make_pair(lhs, rhs);
            }});

        // weighted variant with k+1
        reg.push_back(IdentityCheck{
            "I-PART2", "n >= 1, 0 <= 2j <= n-1",
            "partial sums of (k+1) binom(2k,k) binom(k,2j)/4^k",
            [](const IdentityParams& p) { return p.n >= 1 && p.j && 2 * *p.j <= p.n - 1; },
            [](unsigned n_max) { return detail::range_nj_half(n_max); },
            [](const IdentityParams& p) {
                const unsigned n = p.n, j = *p.j;
                Rational lhs = 0;
                for (unsigned k = 2 * j; k + 1 <= n; ++k) {
                    lhs += rational(Integer(k + 1) * exact_central_binom(k) *
                                        exact_binomial(k, 2 * j),
                                    ipow(4, k));
                }
                Rational rhs = rational(
                    Integer(n) * exact_binomial(2 * n - 1, n - 1) *
                        exact_binomial(n - 1, 2 * j) *
                        (Integer(n) * (4 * j + 1) + 4 * j + 2),
                    ipow(4, n - 1) * (4 * j + 1) * (4 * j + 3));
                return std::make_pair(lhs, rhs);
            }});

        // sum_k binom(n,k)(-1)^k/(4k+1) = (-1)^n / ((4n+1) binom(-1/4,n))
        add_n("I-4K1", "alternating binomial sum over 4k+1", [](unsigned n) {
            Rational lhs = 0;
            for (unsigned k = 0; k <= n; ++k) {
                lhs += rational(alt(k) * exact_binomial(n, k), Integer(4 * k + 1));
            }
            Rational rhs = rational(alt(n), Integer(4 * n + 1)) / gen_binomial(rational(-1, 4), n);
            return std::make_pair(lhs, rhs);
        });

        // harmonic-weighted variant of I-4K1
        add_n("I-4K1H", "H_k-weighted alternating binomial sum over 4k+1", [](unsigned n) {
            Rational lhs = 0;
            for (unsigned k = 0; k <= n; ++k) {
                lhs += rational(alt(k) * exact_binomial(n, k), Integer(4 * k + 1)) *
                       exact_harmonic(k);
            }
            Rational tail = 0;
            for (unsigned k = 1; k <= n; ++k) {
                tail += gen_binomial(rational(-1, 4), k) * rational(alt(k), Integer(k));
            }
            Rational rhs = -rational(alt(n), Integer(4 * n + 1)) /
                           gen_binomial(rational(-1, 4), n) * tail;
            return std::make_pair(lhs, rhs);
        });

        // sum_{k=0}^{2n-1} (-1)^k binom(2n-1,k)^2 H_k = (-16)^n / (8n binom(2n,n))
        add_n("I-H1", "H_k-weighted alternating square sum, odd row", [](unsigned n) {
            Rational lhs = 0;
            for (unsigned k = 0; k + 1 <= 2 * n; ++k) {
                Integer b = exact_binomial(2 * n - 1, k);
                lhs += Rational(alt(k) * b * b) * exact_harmonic(k);
            }
            Rational rhs = rational(ipow(-16, n), Integer(8) * n * exact_central_binom(n));
            return std::make_pair(lhs, rhs);
        });

        // (2H_k^2 + H_k^{(2)})-weighted variant of I-H1
        add_n("I-H2", "(2H_k^2+H_k^{(2)})-weighted alternating square sum, odd row",
              [](unsigned n) {
                  Rational lhs = 0;
                  for (unsigned k = 0; k + 1 <= 2 * n; ++k) {
                      Integer b = exact_binomial(2 * n - 1, k);
                      Rational h = exact_harmonic(k);
                      lhs += Rational(alt(k) * b * b) * (2 * h * h + exact_harmonic(k, 2));
                  }
                  Rational s1 = 0, s2 = 0, s3 = 0;
                  for (unsigned k = 1; k <= n; ++k) {
                      Rational c(exact_central_binom(k));
                      Rational w = rational(1, ipow(-16, k));
                      s1 += c * w / Rational(k);
                      s2 += c * w / Rational(Integer(2 * k - 1) * (2 * k - 1));
                      s3 += c * w / Rational(2 * k - 1);
                  }
                  Rational nn(n);
                  Rational bracket = 1 + 2 * nn * exact_harmonic(n) -
                                     6 * nn * exact_harmonic(2 * n) + nn * s1 -
                                     12 * nn * s2 - 12 * nn * s3;
                  Rational rhs = rational(1, Integer(8) * n * n) -
                                 rational(ipow(-16, n), Integer(8) * n * n *
                                                            exact_central_binom(n)) *
                                     bracket;
                  return std::make_pair(lhs, rhs);
              });

        // sum_{k=0}^{2n} (-1)^k / binom(2n,k)^2
        add_n("I-INV2", "alternating inverse binomial squares", [](unsigned n) {
            Rational lhs = 0;
            for (unsigned k = 0; k <= 2 * n; ++k) {
                Integer b = exact_binomial(2 * n, k);
                lhs += rational(alt(k), b * b);
            }
            Rational s1 = 0, s2 = 0;
            for (unsigned k = 1; k <= n; ++k) {
                s1 += rational(alt(k) * exact_central_binom(k), Integer(k));
            }
            for (unsigned k = 0; k <= n; ++k) {
                s2 += rational(alt(k) * exact_central_binom(k), Integer(2 * k + 1));
            }
            Rational rhs = Rational(2 * n + 1) * rational(alt(n), exact_central_binom(n)) *
                           (rational(3, 4) * s1 + s2);
            return std::make_pair(lhs, rhs);
        });

        // sum_{k=0}^{n} binom(2n+1,k)(-1)^k/(k-(2n+1))
        add_n("I-SHIFT", "shifted alternating binomial sum", [](unsigned n) {
            Rational lhs = 0;
            for (unsigned k = 0; k <= n; ++k) {
                lhs += rational(alt(k) * exact_binomial(2 * n + 1, k),
                                Integer(k) - (2 * n + 1));
            }
            Rational s1 = 0, s2 = 0;
            for (unsigned k = 1; k <= n; ++k) {
                s1 += rational(alt(k) * exact_central_binom(k), Integer(k));
            }
            for (unsigned k = 0; k <= n; ++k) {
                s2 += rational(alt(k) * exact_central_binom(k), Integer(2 * k + 1));
            }
            Rational rhs = -rational(3, 4) * s1 - s2;
            return std::make_pair(lhs, rhs);
        });

        // sum_k binom(n,k)(-1)^k/(4k+3) = (-1)^n / ((4n+3) binom(-3/4,n))
        add_n("I-4K3", "alternating binomial sum over 4k+3", [](unsigned n) {
            Rational lhs = 0;
            for (unsigned k = 0; k <= n; ++k) {
                lhs += rational(alt(k) * exact_binomial(n, k), Integer(4 * k + 3));
            }
            Rational rhs = rational(alt(n), Integer(4 * n + 3)) / gen_binomial(rational(-3, 4), n);
            return std::make_pair(lhs, rhs);
        });

        // harmonic-weighted variant of I-4K3
        add_n("I-4K3H", "H_k-weighted alternating binomial sum over 4k+3", [](unsigned n) {
            Rational lhs = 0;
            for (unsigned k = 0; k <= n; ++k) {
                lhs += rational(alt(k) * exact_binomial(n, k), Integer(4 * k + 3)) *
                       exact_harmonic(k);
            }
            Rational tail = 0;
            for (unsigned k = 1; k <= n; ++k) {
                tail += gen_binomial(rational(-3, 4), k) * rational(alt(k), Integer(k));
            }
            Rational rhs = -rational(alt(n), Integer(4 * n + 3)) /
                           gen_binomial(rational(-3, 4), n) * tail;
            return std::make_pair(lhs, rhs);
        });

        // the four even-row alternating square sums
        add_n("I-A1", "(2k+1)-weighted alternating square sum, even row", [](unsigned n) {
            Rational lhs = 0;
            for (unsigned k = 0; k <= 2 * n; ++k) {
                Integer b = exact_binomial(2 * n, k);
                lhs += Rational(Integer(2 * k + 1) * alt(k) * b * b);
            }
            Rational rhs = Rational(alt(n) * Integer(2 * n + 1) * exact_central_binom(n));
            return std::make_pair(lhs, rhs);
        });

        add_n("I-A2", "alternating square sum, even row", [](unsigned n) {
            Rational lhs = 0;
            for (unsigned k = 0; k <= 2 * n; ++k) {
                Integer b = exact_binomial(2 * n, k);
                lhs += Rational(alt(k) * b * b);
            }
            return std::make_pair(lhs, Rational(alt(n) * exact_central_binom(n)));
        });

        add_n("I-A3", "H_k-weighted alternating square sum, even row", [](unsigned n) {
            Rational lhs = 0;
            for (unsigned k = 0; k <= 2 * n; ++k) {
                Integer b = exact_binomial(2 * n, k);
                lhs += Rational(alt(k) * b * b) * exact_harmonic(k);
            }
            Rational rhs = rational(1, 2) * Rational(alt(n) * exact_central_binom(n)) *
                           (exact_harmonic(2 * n) + exact_harmonic(n));
            return std::make_pair(lhs, rhs);
        });

        add_n("I-A4", "k H_k-weighted alternating square sum, even row", [](unsigned n) {
            Rational lhs = 0;
            for (unsigned k = 0; k <= 2 * n; ++k) {
                Integer b = exact_binomial(2 * n, k);
                lhs += Rational(Integer(k) * alt(k) * b * b) * exact_harmonic(k);
            }
            Rational cb(exact_central_binom(n));
            Rational rhs = -rational(1, 4) * rational(ipow(-16, n), 1) / cb +
                           rational(alt(n), 4) * cb +
                           rational(alt(n), 2) * Rational(n) * cb *
                               (exact_harmonic(2 * n) + exact_harmonic(n));
            return std::make_pair(lhs, rhs);
        });

        // k(2H_k^2+H_k^{(2)})-weighted alternating square sum, even row
        add_n("I-BIG", "k(2H_k^2+H_k^{(2)})-weighted alternating square sum", [](unsigned n) {
            Rational lhs = 0;
            for (unsigned k = 0; k <= 2 * n; ++k) {
                Integer b = exact_binomial(2 * n, k);
                Rational h = exact_harmonic(k);
                lhs += Rational(Integer(k) * alt(k) * b * b) *
                       (2 * h * h + exact_harmonic(k, 2));
            }
            Rational cb(exact_central_binom(n));
            Rational pw = rational(ipow(-16, n), 1) / cb;   // (-16)^n / binom(2n,n)
            Rational sgn = Rational(alt(n));
            Rational nn(n);
            Rational h2n = exact_harmonic(2 * n), hn = exact_harmonic(n);
            Rational h2n2 = exact_harmonic(2 * n, 2), hn2 = exact_harmonic(n, 2);

            Rational inv_c = 0, inv_ck2 = 0, inv_codd = 0, c16 = 0, c16k = 0, c16odd2 = 0;
            for (unsigned k = 1; k <= n; ++k) {
                Rational ck(exact_central_binom(k));
                inv_c += rational(alt(k), 1) / ck;
                inv_ck2 += rational(alt(k), Integer(k) * k) / ck;
                inv_codd += rational(alt(k), Integer(2 * k - 1)) / ck;
                Rational w = rational(1, ipow(-16, k));
                c16 += ck * w;
                c16k += ck * w / Rational(k);
                c16odd2 += ck * w / Rational(Integer(2 * k - 1) * (2 * k - 1));
            }

            Rational rhs = rational(2 * static_cast<long>(n) - 3, 4) + rational(3, 4) * pw -
                           (nn / 2) * sgn * cb - rational(3, 2) * pw * (h2n - hn / 3) +
                           (nn / 2) * sgn * cb * (h2n2 + hn2 / 2) +
                           (sgn / 2) * cb * (h2n + hn) +
                           (nn / 2) * sgn * cb * (h2n + hn) * (h2n + hn) -
                           rational(5, 2) * nn * sgn * cb * inv_c +
                           rational(3, 4) * nn * sgn * cb * inv_ck2 +
                           2 * nn * sgn * cb * inv_codd + rational(15, 4) * pw * c16 +
                           rational(1, 4) * pw * c16k - 3 * pw * c16odd2;
            return std::make_pair(lhs, rhs);
        });

        // sum_{k=1}^n (-1)^k/(k^2 binom(2n,k)) in terms of central binomials
        add_n("I-KINV", "alternating inverse binomial sum with k^2", [](unsigned n) {
            Rational lhs = 0;
            for (unsigned k = 1; k <= n; ++k) {
                lhs += rational(alt(k), Integer(k) * k * exact_binomial(2 * n, k));
            }
            Rational s2 = 0, s1 = 0, sodd = 0;
            for (unsigned k = 1; k <= n; ++k) {
                Rational ck(exact_central_binom(k));
                s2 += rational(alt(k), Integer(k) * k) / ck;
                s1 += rational(alt(k), Integer(k)) / ck;
                sodd += rational(alt(k), Integer(2 * k - 1)) / ck;
            }
            Rational rhs = exact_harmonic(2 * n, 2) + rational(3, 2) * s2 - 2 * s1 + 4 * sodd;
            return std::make_pair(lhs, rhs);
        });

        // sum_{k=1}^n binom(2n,k)(-1)^k/k in terms of central binomials
        add_n("I-BK", "alternating row-binomial sum over k", [](unsigned n) {
            Rational lhs = 0;
            for (unsigned k = 1; k <= n; ++k) {
                lhs += rational(alt(k) * exact_binomial(2 * n, k), Integer(k));
            }
            Rational s1 = 0, s2 = 0;
            for (unsigned k = 1; k <= n; ++k) {
                Rational ck(exact_central_binom(k));
                s1 += rational(alt(k), Integer(k)) * ck;
                s2 += rational(alt(k) * Integer(2 * k), Integer(2 * k - 1) * (2 * k - 1)) * ck;
            }
            Rational rhs = -exact_harmonic(2 * n) + rational(3, 4) * s1 - rational(1, 4) * s2;
            return std::make_pair(lhs, rhs);
        });

        // sum_{k=1}^n binom(2n,k)(1/(k+1)-10)/4^k with the 5^{2n} closed form
        add_n("I-525", "row-binomial sum with 1/(k+1)-10 weight and 5^{2n} terms",
              [](unsigned n) {
                  Rational lhs = 0;
                  for (unsigned k = 1; k <= n; ++k) {
                      lhs += rational(exact_binomial(2 * n, k), ipow(4, k)) *
                             (rational(1, k + 1) - 10);
                  }
                  Rational s = 0;
                  for (unsigned k = 1; k <= n; ++k) {
                      s += Rational(exact_central_binom(k)) * qpow(rational(4, 25), k);
                  }
                  Integer p16 = ipow(2, 4 * n), p25 = ipow(5, 2 * n);
                  Rational rhs =
                      -rational(2 * static_cast<long>(n) + 1, static_cast<long>(n) + 1) *
                          rational(exact_central_binom(n), ipow(4, n)) +
                      rational(Integer(18 * n + 5) * p16 - Integer(16 * n + 4) * p25,
                               Integer(2 * n + 1) * p16) -
                      rational(3 * (4 * static_cast<long>(n) + 1), 2 * (2 * static_cast<long>(n) + 1)) *
                          rational(p25, p16) * s;
                  return std::make_pair(lhs, rhs);
              });

        // odd-row antisymmetry: sum (-1)^k binom(n,k)^2 = 0 for odd n
        reg.push_back(IdentityCheck{
            "I-ALT0", "odd n >= 1", "alternating square sum vanishes on odd rows",
            [](const IdentityParams& p) { return p.n >= 1 && p.n % 2 == 1 && !p.j; },
            [](unsigned n_max) { return detail::range_n(n_max, 2); },
            [](const IdentityParams& p) {
                Rational lhs = 0;
                for (unsigned k = 0; k <= p.n; ++k) {
                    Integer b = exact_binomial(p.n, k);
                    lhs += Rational(alt(k) * b * b);
                }
                return std::make_pair(lhs, Rational(0));
            }});

        // sum_{k=1}^n (-1)^k binom(n,k)/k = -H_n
        add_n("I-G145", "alternating binomial over k equals -H_n", [](unsigned n) {
            Rational lhs = 0;
            for (unsigned k = 1; k <= n; ++k) {
                lhs += rational(alt(k) * exact_binomial(n, k), Integer(k));
            }
            Rational rhs = -exact_harmonic(n);
            return std::make_pair(lhs, rhs);
        });

        // (-1)^k binom(-a,k) = binom(a+k-1,k); j indexes the test value of a
        reg.push_back(IdentityCheck{
            "I-NEG", "n = k >= 1, j in [0,4] selecting a",
            "negation rule for generalized binomials",
            [](const IdentityParams& p) { return p.n >= 1 && p.j && *p.j <= 4; },
            [](unsigned n_max) {
                std::vector<IdentityParams> out;
                for (unsigned n = 1; n <= n_max; ++n) {
                    for (unsigned j = 0; j <= 4; ++j) out.push_back({n, j});
                }
                return out;
            },
            [](const IdentityParams& p) {
                static const std::pair<long, long> kAValues[5] = {
                    {1, 1}, {2, 1}, {5, 2}, {-3, 4}, {7, 3}};
                const auto [num, den] = kAValues[*p.j];
                const Rational a = rational(num, den);
                Rational lhs = Rational(alt(p.n)) * gen_binomial(-a, p.n);
                Rational rhs = gen_binomial(a + p.n - 1, p.n);
                return std::make_pair(lhs, rhs);
            }});

        return reg;
    }();
    return registry;
}

inline const IdentityCheck& find_identity(const std::string& id) {
    for (const auto& entry : identity_registry()) {
        if (entry.id == id) return entry;
    }
    throw UnknownIdentity("no identity registered with id " + id);
}

inline IdentityResult run_identity(const std::string& id, const IdentityParams& params) {
    const IdentityCheck& entry = find_identity(id);
    if (!entry.valid(params)) {
        throw OutOfDomain(id + ": parameters " + params.str() + " outside domain (" +
                          entry.domain + ")");
    }
    const auto start = std::chrono::steady_clock::now();
    auto [lhs, rhs] = entry.eval(params);
    const auto stop = std::chrono::steady_clock::now();
    IdentityResult r;
    r.id = id;
    r.params = params;
    r.pass = (lhs == rhs);
    r.lhs = to_string(lhs);
    r.rhs = to_string(rhs);
    r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(stop - start);
    return r;
}

// Runs one identity over its whole default domain up to n_max.
inline std::vector<IdentityResult> run_identity_domain(const std::string& id,
                                                       unsigned n_max) {
    const IdentityCheck& entry = find_identity(id);
    std::vector<IdentityResult> out;
    for (const auto& params : entry.enumerate(n_max)) {
        out.push_back(run_identity(id, params));
    }
    return out;
}

}  // namespace supercong
