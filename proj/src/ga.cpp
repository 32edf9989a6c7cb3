#include "mttp/ga.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mttp/patterns.hpp"

namespace mttp {

void GAParams::validate() const {
    if (population < 2) throw std::invalid_argument("population must be at least 2");
    if (elite < 1 || elite >= population) {
        throw std::invalid_argument("elite must be in [1, population)");
    }
    if (!(mutation_prob >= 0.0 && mutation_prob <= 1.0)) {
        throw std::invalid_argument("mutation probability must be in [0, 1]");
    }
    if (max_iterations < 0) throw std::invalid_argument("iteration budget must be non-negative");
    if (node_budget == 0) throw std::invalid_argument("node budget must be positive");
}

Individual make_individual(InstanceSize size, TravelMatrix travel) {
    Individual ind;
    ind.travel = std::move(travel);
    ind.partner = canonical_partners(size);
    return evaluate(std::move(ind));
}

Individual evaluate(Individual ind) {
    ind.fitness = count_trips_total(ind.travel);
    ind.schedulable = Schedulable::Unknown;
    ind.schedule.reset();
    return ind;
}

Individual mutate_at(const Individual& ind, int team, int week) {
    Individual out = ind;
    const int half = out.travel.weeks() / 2;
    const int partner = out.partner.at(team);
    for (int t : {team, partner}) {
        auto& row = out.travel.rows.at(t);
        row.at(week) ^= 1;
        row.at(week + half) ^= 1;
    }
    return evaluate(std::move(out));
}

namespace {

bool row_is_unique(const TravelMatrix& m, int team) {
    for (int k = 0; k < m.teams(); ++k) {
        if (k != team && m.rows[k] == m.rows[team]) return false;
    }
    return true;
}

} // namespace

Individual mutate(const Individual& ind, Rng& rng, MutationStats* stats) {
    if (stats) ++stats->calls;
    const int n = ind.travel.teams();
    const int half = ind.travel.weeks() / 2;
    for (int attempt = 0; attempt < kMutationAttempts; ++attempt) {
        const int team = rng.index(n);
        const int week = rng.index(half);
        auto out = mutate_at(ind, team, week);
        const int partner = out.partner[team];
        if (longest_run(out.travel.rows[team]) <= kMaxRun &&
            longest_run(out.travel.rows[partner]) <= kMaxRun && row_is_unique(out.travel, team) &&
            row_is_unique(out.travel, partner)) {
            return out;
        }
        if (stats) ++stats->resamples;
    }
    if (stats) ++stats->fallbacks;
    return ind;
}

int crossover_share(int pairs, int fa, int fb) {
    const double wa = fa == kBannedFitness || fa <= 0 ? 0.0 : 1.0 / fa;
    const double wb = fb == kBannedFitness || fb <= 0 ? 0.0 : 1.0 / fb;
    const double ratio = wa + wb > 0.0 ? wa / (wa + wb) : 0.5;
    const auto k = static_cast<int>(std::lround(pairs * ratio));
    return std::clamp(k, 1, std::max(1, pairs - 1));
}

Individual crossover(const Individual& a, const Individual& b, Rng& rng) {
    const int n = a.travel.teams();
    if (b.travel.teams() != n || a.travel.weeks() != b.travel.weeks()) {
        throw std::invalid_argument("crossover parents have different instance sizes");
    }
    const InstanceSize size(n);
    const int pairs = n / 2;
    const int from_a = crossover_share(pairs, a.fitness, b.fitness);

    std::vector<TravelSequence> chosen;
    chosen.reserve(pairs);
    auto admissible = [&](const TravelSequence& s) {
        const auto c = swap_complement(s);
        return std::none_of(chosen.begin(), chosen.end(),
                            [&](const auto& t) { return t == s || t == c; });
    };
    auto draw = [&](const Individual& parent, int count) {
        const auto goal = chosen.size() + static_cast<std::size_t>(count);
        for (int tries = 0; chosen.size() < goal && tries < kDrawRetries; ++tries) {
            const auto& row = parent.travel.rows[rng.index(n)];
            if (admissible(row)) chosen.push_back(row);
        }
        // parents too similar: top up with fresh sequences
        for (int tries = 0; chosen.size() < goal; ++tries) {
            if (tries >= kDrawRetries) throw GenerationError("crossover could not complete a child");
            auto row = random_sequence(size, rng);
            if (admissible(row)) chosen.push_back(std::move(row));
        }
    };
    draw(a, from_a);
    draw(b, pairs - from_a);

    return make_individual(size, complete_with_complements(size, chosen));
}

namespace {

class Engine {
  public:
    Engine(InstanceSize size, const GAParams& params, Scheduler& scheduler)
        : size_(size), params_(params), scheduler_(scheduler), rng_(params.seed) {}

    EvolveResult run() {
        for (int i = 0; i < params_.population; ++i) {
            population_.push_back(make_individual(size_, build_individual(size_, rng_)));
        }
        settle();
        record();

        while (result_.iterations < params_.max_iterations && !reached_target()) {
            population_.resize(params_.elite);
            for (int c = params_.elite; c < params_.population; ++c) {
                const auto [pa, pb] = pick_parents();
                auto child = crossover(population_[pa], population_[pb], rng_);
                if (rng_.chance(params_.mutation_prob)) {
                    child = mutate(child, rng_, &result_.mutation);
                }
                population_.push_back(evaluate(std::move(child)));
            }
            settle();
            ++result_.iterations;
            record();
        }

        if (incumbent_) {
            result_.status = EvolveStatus::Solved;
            result_.best = std::move(*incumbent_);
        } else {
            result_.best = std::move(best_candidate_);
        }
        return std::move(result_);
    }

  private:
    std::pair<int, int> pick_parents() {
        const int e = params_.elite;
        if (e < 2) return {0, 0};
        const int a = rng_.index(e);
        int b = rng_.index(e - 1);
        if (b >= a) ++b;
        return {a, b};
    }

    void sort() {
        std::stable_sort(population_.begin(), population_.end(),
                         [](const Individual& x, const Individual& y) { return x.fitness < y.fitness; });
    }

    // Sort, then schedule the leader until it is either proven schedulable
    // or every individual is banned.
    void settle() {
        sort();
        while (population_.front().fitness != kBannedFitness &&
               population_.front().schedulable == Schedulable::Unknown) {
            auto& lead = population_.front();
            if (best_candidate_.travel.rows.empty() || lead.fitness < best_candidate_.fitness) {
                best_candidate_ = lead;
            }
            ++result_.schedule_checks;
            auto outcome = scheduler_.schedule(lead.travel);
            if (outcome.feasible()) {
                lead.schedulable = Schedulable::Yes;
                lead.schedule = std::move(outcome.schedule);
                if (!incumbent_ || lead.fitness < incumbent_->fitness) incumbent_ = lead;
            } else {
                lead.schedulable = Schedulable::No;
                lead.fitness = kBannedFitness;
                sort();
            }
        }
    }

    [[nodiscard]] bool reached_target() const {
        return params_.target && incumbent_ && incumbent_->fitness <= *params_.target;
    }

    void record() { result_.history.push_back(incumbent_ ? incumbent_->fitness : kBannedFitness); }

    InstanceSize size_;
    const GAParams& params_;
    Scheduler& scheduler_;
    Rng rng_;
    std::vector<Individual> population_;
    std::optional<Individual> incumbent_;
    Individual best_candidate_;
    EvolveResult result_;
};

} // namespace

EvolveResult evolve(InstanceSize size, const GAParams& params, Scheduler& scheduler) {
    params.validate();
    return Engine(size, params, scheduler).run();
}

EvolveResult evolve(InstanceSize size, const GAParams& params) {
    Scheduler scheduler(params.node_budget);
    return evolve(size, params, scheduler);
}

} // namespace mttp
