#include "mttp/scheduler.hpp"

#include <algorithm>
#include <bit>
#include <vector>

namespace mttp {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }

void check_structure(const TravelMatrix& travel) {
    const int n = travel.teams();
    if (n < 4 || n % 2 != 0) {
        throw PreconditionError("travel table needs an even number >= 4 of rows, got " +
                                std::to_string(n));
    }
    if (n > 64) throw PreconditionError("scheduler supports at most 64 teams");
    const InstanceSize size(n);
    for (int i = 0; i < n; ++i) {
        const auto& row = travel.rows[i];
        if (static_cast<int>(row.size()) != size.weeks()) {
            throw PreconditionError("travel row " + std::to_string(i + 1) + " has " +
                                    std::to_string(row.size()) + " weeks, expected " +
                                    std::to_string(size.weeks()));
        }
        for (auto v : row) {
            if (v > 1) throw PreconditionError("travel row " + std::to_string(i + 1) + " is not 0/1");
        }
        if (!is_mirror_complement(row)) {
            throw PreconditionError("travel row " + std::to_string(i + 1) +
                                    " is not mirror-complemented");
        }
    }
}

class Search {
  public:
    Search(const TravelMatrix& travel, std::uint64_t budget)
        : n_(travel.teams()), half_(n_ - 1), games_(n_ * (n_ - 1) / 2), budget_(budget),
          opposite_(half_, std::vector<Mask>(n_)), differ_weeks_(n_, std::vector<Mask>(n_)),
          free_teams_(half_), free_weeks_(n_), unplayed_(n_),
          opponent_(half_, std::vector<int>(n_, -1)) {
        for (int w = 0; w < half_; ++w) {
            for (int i = 0; i < n_; ++i) {
                for (int j = 0; j < n_; ++j) {
                    if (travel.rows[i][w] != travel.rows[j][w]) {
                        opposite_[w][i] |= bit(j);
                        differ_weeks_[i][j] |= bit(w);
                    }
                }
            }
        }
        const Mask all = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
        for (int w = 0; w < half_; ++w) free_teams_[w] = all;
        for (int i = 0; i < n_; ++i) {
            unplayed_[i] = all & ~bit(i);
            free_weeks_[i] = bit(half_) - 1;
        }
    }

    ScheduleOutcome run() {
        ScheduleOutcome out;
        const bool found = solve(0);
        out.certificate = {max_placed_, nodes_, exhausted_, std::nullopt};
        if (!found) return out;

        out.status = ScheduleStatus::Feasible;
        ScheduleMatrix b;
        b.rows.assign(n_, std::vector<int>(2 * half_));
        for (int i = 0; i < n_; ++i) {
            for (int w = 0; w < half_; ++w) {
                b.rows[i][w] = opponent_[w][i];
                b.rows[i][w + half_] = opponent_[w][i];
            }
        }
        out.schedule = std::move(b);
        return out;
    }

  private:
    enum class Item { Slot, Pair };

    bool solve(int placed) {
        if (placed == games_) return true;
        max_placed_ = std::max(max_placed_, placed);

        // Most constrained open item: a (team, week) slot with the fewest
        // opponents, or an unplayed pair with the fewest possible weeks.
        Item kind = Item::Slot;
        int a = -1;
        int b = -1;
        int fewest = n_ + half_;
        for (int w = 0; w < half_ && fewest > 0; ++w) {
            for (Mask m = free_teams_[w]; m != 0; m &= m - 1) {
                const int i = std::countr_zero(m);
                const int c = std::popcount(slot_options(i, w));
                if (c < fewest) {
                    fewest = c;
                    kind = Item::Slot;
                    a = i;
                    b = w;
                    if (c == 0) break;
                }
            }
        }
        if (fewest == 0) return false;
        for (int i = 0; i < n_ && fewest > 1; ++i) {
            for (Mask m = unplayed_[i] & ~((bit(i) << 1) - 1); m != 0; m &= m - 1) {
                const int j = std::countr_zero(m);
                const int c = std::popcount(pair_options(i, j));
                if (c < fewest) {
                    fewest = c;
                    kind = Item::Pair;
                    a = i;
                    b = j;
                    if (c <= 1) break;
                }
            }
        }
        if (fewest == 0) return false;

        const Mask options = kind == Item::Slot ? slot_options(a, b) : pair_options(a, b);
        for (Mask m = options; m != 0; m &= m - 1) {
            if (++nodes_ > budget_) {
                exhausted_ = true;
                return false;
            }
            const int x = std::countr_zero(m);
            const int i = a;
            const int j = kind == Item::Slot ? x : b;
            const int w = kind == Item::Slot ? b : x;
            play(i, j, w);
            if (solve(placed + 1)) return true;
            unplay(i, j, w);
            if (exhausted_) return false;
        }
        return false;
    }

    [[nodiscard]] Mask slot_options(int team, int week) const {
        return unplayed_[team] & opposite_[week][team] & free_teams_[week];
    }

    [[nodiscard]] Mask pair_options(int i, int j) const {
        return differ_weeks_[i][j] & free_weeks_[i] & free_weeks_[j];
    }

    void play(int i, int j, int w) {
        opponent_[w][i] = j;
        opponent_[w][j] = i;
        free_teams_[w] &= ~(bit(i) | bit(j));
        free_weeks_[i] &= ~bit(w);
        free_weeks_[j] &= ~bit(w);
        unplayed_[i] &= ~bit(j);
        unplayed_[j] &= ~bit(i);
    }

    void unplay(int i, int j, int w) {
        opponent_[w][i] = -1;
        opponent_[w][j] = -1;
        free_teams_[w] |= bit(i) | bit(j);
        free_weeks_[i] |= bit(w);
        free_weeks_[j] |= bit(w);
        unplayed_[i] |= bit(j);
        unplayed_[j] |= bit(i);
    }

    int n_;
    int half_;
    int games_;
    std::uint64_t budget_;
    std::vector<std::vector<Mask>> opposite_;
    std::vector<std::vector<Mask>> differ_weeks_;
    std::vector<Mask> free_teams_;
    std::vector<Mask> free_weeks_;
    std::vector<Mask> unplayed_;
    std::vector<std::vector<int>> opponent_;
    std::uint64_t nodes_ = 0;
    int max_placed_ = 0;
    bool exhausted_ = false;
};

// Teams of a subset T can only meet each other in weeks where T has both
// home and away teams, at most min(#home, #away) games per week, and they
// need |T|(|T|-1)/2 games. Returns a subset that cannot fit its games.
std::optional<Mask> overfull_subset(const TravelMatrix& travel) {
    const int n = travel.teams();
    if (n > kMaxSubsetCheckTeams) return std::nullopt;
    const int half = n - 1;
    std::vector<std::uint32_t> away(half, 0);
    for (int w = 0; w < half; ++w) {
        for (int i = 0; i < n; ++i) {
            if (travel.rows[i][w] == kAway) away[w] |= std::uint32_t{1} << i;
        }
    }
    for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << n); ++subset) {
        const int size = std::popcount(subset);
        if (size < 2) continue;
        int capacity = 0;
        for (int w = 0; w < half; ++w) {
            const int a = std::popcount(subset & away[w]);
            capacity += std::min(a, size - a);
        }
        if (capacity < size * (size - 1) / 2) return Mask{subset};
    }
    return std::nullopt;
}

std::string cache_key(const TravelMatrix& travel) {
    std::string key;
    key.reserve(static_cast<std::size_t>(travel.teams()) * (travel.weeks() + 1));
    for (const auto& row : travel.rows) {
        for (auto v : row) key.push_back(static_cast<char>('0' + v));
        key.push_back('/');
    }
    return key;
}

} // namespace

ScheduleOutcome build_schedule(const TravelMatrix& travel, std::uint64_t node_budget) {
    check_structure(travel);
    if (auto subset = overfull_subset(travel)) {
        ScheduleOutcome out;
        out.certificate.overfull_subset = *subset;
        return out;
    }
    return Search(travel, node_budget).run();
}

ScheduleOutcome Scheduler::schedule(const TravelMatrix& travel) {
    auto key = cache_key(travel);
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    auto outcome = build_schedule(travel, budget_);
    std::lock_guard lock(mutex_);
    cache_.emplace(std::move(key), outcome);
    return outcome;
}

std::size_t Scheduler::cache_size() const {
    std::lock_guard lock(mutex_);
    return cache_.size();
}

bool is_schedulable(const TravelMatrix& travel) {
    static Scheduler shared;
    return shared.is_schedulable(travel);
}

} // namespace mttp
