#include "mttp/patterns.hpp"

#include <algorithm>
#include <string>

namespace mttp {

TravelSequence swap_complement(std::span<const std::uint8_t> seq) {
    TravelSequence out(seq.size());
    std::transform(seq.begin(), seq.end(), out.begin(),
                   [](std::uint8_t v) { return static_cast<std::uint8_t>(1 - v); });
    return out;
}

TravelSequence random_sequence(InstanceSize size, Rng& rng) {
    const int half = size.half();
    TravelSequence seq(size.weeks());
    for (int attempt = 0; attempt < kDrawRetries; ++attempt) {
        int run = 0;
        for (int w = 0; w < half; ++w) {
            auto v = static_cast<std::uint8_t>(rng.below(2));
            if (run == kMaxRun && v == seq[w - 1]) v = static_cast<std::uint8_t>(1 - v);
            run = (w > 0 && v == seq[w - 1]) ? run + 1 : 1;
            seq[w] = v;
        }
        for (int w = 0; w < half; ++w) seq[w + half] = static_cast<std::uint8_t>(1 - seq[w]);
        if (longest_run(seq) <= kMaxRun) return seq;
    }
    throw GenerationError("no run-feasible travel sequence after " + std::to_string(kDrawRetries) +
                          " draws");
}

TravelMatrix complete_with_complements(InstanceSize size, std::span<const TravelSequence> seeds) {
    const int pairs = size.teams() / 2;
    if (static_cast<int>(seeds.size()) != pairs) {
        throw ShapeError("expected " + std::to_string(pairs) + " seed sequences, got " +
                         std::to_string(seeds.size()));
    }
    TravelMatrix m;
    m.rows.reserve(size.teams());
    for (const auto& s : seeds) {
        if (static_cast<int>(s.size()) != size.weeks()) {
            throw ShapeError("seed sequence has " + std::to_string(s.size()) + " weeks, expected " +
                             std::to_string(size.weeks()));
        }
        m.rows.push_back(s);
    }
    for (const auto& s : seeds) m.rows.push_back(swap_complement(s));
    return m;
}

TravelMatrix build_individual(InstanceSize size, Rng& rng) {
    const int pairs = size.teams() / 2;
    std::vector<TravelSequence> seeds;
    seeds.reserve(pairs);
    int rejected = 0;
    while (static_cast<int>(seeds.size()) < pairs) {
        auto s = random_sequence(size, rng);
        const auto c = swap_complement(s);
        const bool clash = std::any_of(seeds.begin(), seeds.end(),
                                       [&](const auto& t) { return t == s || t == c; });
        if (!clash) {
            seeds.push_back(std::move(s));
        } else if (++rejected >= kDrawRetries) {
            throw GenerationError("could not draw " + std::to_string(pairs) +
                                  " distinct non-complementary sequences");
        }
    }
    return complete_with_complements(size, seeds);
}

std::vector<int> canonical_partners(InstanceSize size) {
    const int pairs = size.teams() / 2;
    std::vector<int> p(size.teams());
    for (int k = 0; k < pairs; ++k) {
        p[k] = k + pairs;
        p[k + pairs] = k;
    }
    return p;
}

} // namespace mttp
