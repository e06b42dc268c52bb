#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace smelter::rng {

// 64-bit FNV-1a over arbitrary bytes. Used for stream derivation and
// content digests in manifests (integrity, not security).
inline std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL) {
    std::uint64_t h = seed;
    for (unsigned char c : bytes) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic random stream. mt19937_64 is fully specified by the
// standard, so sequences are reproducible across platforms. Every
// stage of the toolkit derives its own stream from (seed, tag) so
// that adding or reordering stages cannot disturb the others.
class Stream {
public:
    explicit Stream(std::uint64_t seed) : gen_(seed) {}

    static Stream derive(std::uint64_t seed, std::string_view tag, std::uint64_t salt = 0) {
        std::uint64_t s = seed ^ fnv1a64(tag) ^ (salt * 0x9e3779b97f4a7c15ULL);
        std::uint64_t mix = s;
        return Stream(splitmix64(mix));
    }

    std::uint64_t next_u64() { return gen_(); }

    // Uniform draw in [0, n). Multiply-shift mapping: deterministic and
    // bias below 2^-64 for desk-scale n.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(gen_()) * n) >> 64);
    }

    double uniform01() {
        return static_cast<double>(gen_() >> 11) * (1.0 / 9007199254740992.0);
    }

    // Box-Muller, spelled out so results do not depend on the standard
    // library's unspecified distribution algorithms.
    double normal(double mean, double stddev) {
        if (have_spare_) {
            have_spare_ = false;
            return mean + stddev * spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform01();
        } while (u1 <= 1e-300);
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return mean + stddev * r * std::cos(theta);
    }

    // Normal truncated to [-2, 2] sigma by resampling.
    double truncated_normal(double mean, double stddev) {
        for (;;) {
            double z = normal(0.0, 1.0);
            if (z >= -2.0 && z <= 2.0) return mean + stddev * z;
        }
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        if (v.size() < 2) return;
        for (std::size_t i = v.size() - 1; i > 0; --i) {
            std::size_t j = static_cast<std::size_t>(below(i + 1));
            std::swap(v[i], v[j]);
        }
    }

    // k distinct indices from [0, n), uniform without replacement,
    // returned in draw order.
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k) {
        std::vector<std::size_t> pool(n);
        for (std::size_t i = 0; i < n; ++i) pool[i] = i;
        std::vector<std::size_t> out;
        out.reserve(k);
        for (std::size_t i = 0; i < k && i < n; ++i) {
            std::size_t j = i + static_cast<std::size_t>(below(n - i));
            std::swap(pool[i], pool[j]);
            out.push_back(pool[i]);
        }
        return out;
    }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace smelter::rng
