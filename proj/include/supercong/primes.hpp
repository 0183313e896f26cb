#pragma once

// Prime enumeration by segmented sieve. Deterministic; no probabilistic
// primality anywhere in the sweep path.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace supercong {

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return out;
}

// Calls f(p) for every prime p in [lo, hi], in increasing order.
template <typename F>
void for_each_prime(std::uint64_t lo, std::uint64_t hi, F&& f) {
    if (hi < 2 || lo > hi) return;
    lo = std::max<std::uint64_t>(lo, 2);
    std::uint64_t root = 1;
    while ((root + 1) * (root + 1) <= hi) ++root;
    const auto base = primes_up_to(root);
    const std::uint64_t segment = 1 << 16;
    std::vector<bool> composite;
    for (std::uint64_t start = lo;; start += segment) {
        const std::uint64_t end = std::min(hi, start + segment - 1);
        composite.assign(end - start + 1, false);
        for (std::uint64_t q : base) {
            std::uint64_t first = std::max(q * q, (start + q - 1) / q * q);
            for (std::uint64_t j = first; j <= end; j += q) composite[j - start] = true;
        }
        for (std::uint64_t v = start; v <= end; ++v) {
            if (!composite[v - start]) f(v);
        }
        if (end == hi) break;
    }
}

inline std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for_each_prime(lo, hi, [&](std::uint64_t p) { out.push_back(p); });
    return out;
}

}  // namespace supercong
