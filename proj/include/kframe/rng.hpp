#ifndef KFRAME_RNG_HPP
#define KFRAME_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

namespace kframe
{

/// Seeded generator with a platform-independent bounded draw.
///
/// std::uniform_int_distribution is implementation-defined, which would make
/// reports differ between standard libraries.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Derives an independent stream from a seed and a list of labels.
    static Rng derived(std::uint64_t seed, std::initializer_list<std::uint64_t> labels)
    {
        std::uint64_t h = splitmix(seed);
        for (std::uint64_t l : labels) {
            h = splitmix(h ^ splitmix(l + 0x632be59bd9b4e019ULL));
        }
        return Rng(h);
    }

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi].
    long long uniform(long long lo, long long hi)
    {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) {
            return static_cast<long long>(next());
        }
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return lo + static_cast<long long>(x % span);
    }

    bool coin() { return (next() >> 63) != 0; }

    static std::uint64_t hash_string(const char *s)
    {
        std::uint64_t h = 1469598103934665603ULL;
        for (; *s; ++s) {
            h = (h ^ static_cast<unsigned char>(*s)) * 1099511628211ULL;
        }
        return h;
    }

private:
    static std::uint64_t splitmix(std::uint64_t x)
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 engine_;
};

} // namespace kframe

#endif
