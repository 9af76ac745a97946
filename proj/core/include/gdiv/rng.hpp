// Copyright (c) 2026 the gdiv authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string_view>

namespace gdiv {

// splitmix64 finalizer. Stateless bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// FNV-1a on the bytes of a name. Used to derive stream ids from check names;
// std::hash is unspecified across implementations, this is not.
constexpr std::uint64_t fnv1a64(std::string_view s) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Counter-based generator: the triple (seed, trial, stream) fully determines
// the sample sequence, so any single trial can be replayed in isolation.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream) noexcept
        : state_(mix64(seed ^ mix64(trial ^ mix64(stream)))) {}

    std::uint64_t next_u64() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // Uniform in [0, 1) with the full 53 bits of a double's mantissa.
    double uniform01() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) noexcept {
        return lo + (hi - lo) * uniform01();
    }

    // Uniform index in [0, n). n must be positive.
    std::size_t uniform_index(std::size_t n) noexcept {
        using u128 = unsigned __int128;
        return static_cast<std::size_t>(
            (static_cast<u128>(next_u64()) * static_cast<u128>(n)) >> 64);
    }

private:
    std::uint64_t state_;
};

}  // namespace gdiv
