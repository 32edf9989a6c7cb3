#include "mttp/oracle.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace mttp {

namespace {

void require_small(int n) {
    if (n != 4 && n != 6) {
        throw std::invalid_argument("exhaustive search supports 4 or 6 teams, got " + std::to_string(n));
    }
}

class Enumerator {
  public:
    explicit Enumerator(const TravelMatrix& travel)
        : travel_(travel), n_(travel.teams()), half_(n_ - 1), met_(n_, std::vector<bool>(n_, false)),
          opponent_(half_, std::vector<int>(n_, -1)) {}

    std::optional<ScheduleMatrix> run() {
        if (!week(0)) return std::nullopt;
        ScheduleMatrix b;
        b.rows.assign(n_, std::vector<int>(2 * half_));
        for (int w = 0; w < half_; ++w) {
            for (int i = 0; i < n_; ++i) {
                b.rows[i][w] = opponent_[w][i];
                b.rows[i][w + half_] = opponent_[w][i];
            }
        }
        return b;
    }

  private:
    // a pair may meet in week w only if venues differ in w and in its mirror
    [[nodiscard]] bool compatible(int i, int j, int w) const {
        return travel_.rows[i][w] != travel_.rows[j][w] &&
               travel_.rows[i][w + half_] != travel_.rows[j][w + half_];
    }

    bool week(int w) {
        if (w == half_) {
            for (int i = 0; i < n_; ++i) {
                for (int j = i + 1; j < n_; ++j) {
                    if (!met_[i][j]) return false;
                }
            }
            return true;
        }
        std::vector<int> home;
        std::vector<int> away;
        for (int i = 0; i < n_; ++i) (travel_.rows[i][w] == kHome ? home : away).push_back(i);
        if (home.size() != away.size()) return false;

        // away is sorted, so next_permutation visits every bijection
        do {
            bool ok = true;
            for (std::size_t k = 0; k < home.size() && ok; ++k) {
                ok = compatible(home[k], away[k], w) && !met_[home[k]][away[k]];
            }
            if (!ok) continue;
            for (std::size_t k = 0; k < home.size(); ++k) set(home[k], away[k], w, true);
            if (week(w + 1)) return true;
            for (std::size_t k = 0; k < home.size(); ++k) set(home[k], away[k], w, false);
        } while (std::next_permutation(away.begin(), away.end()));
        return false;
    }

    void set(int i, int j, int w, bool on) {
        met_[i][j] = met_[j][i] = on;
        opponent_[w][i] = on ? j : -1;
        opponent_[w][j] = on ? i : -1;
    }

    const TravelMatrix& travel_;
    int n_;
    int half_;
    std::vector<std::vector<bool>> met_;
    std::vector<std::vector<int>> opponent_;
};

std::optional<ScheduleMatrix> enumerate_schedule(const TravelMatrix& travel) {
    const int n = travel.teams();
    require_small(n);
    for (const auto& row : travel.rows) {
        if (static_cast<int>(row.size()) != 2 * n - 2) {
            throw std::invalid_argument("travel row has the wrong number of weeks");
        }
    }
    return Enumerator(travel).run();
}

} // namespace

bool exhaustive_schedulability(const TravelMatrix& travel) {
    return enumerate_schedule(travel).has_value();
}

OracleResult exhaustive_min_trips(InstanceSize size) {
    const int n = size.teams();
    require_small(n);
    const int half = size.half();
    const int pairs = n / 2;

    // One representative per complement class {p, ~p}: first bit home.
    std::vector<TravelSequence> classes;
    for (unsigned bits = 0; bits < (1u << half); ++bits) {
        TravelSequence seq(size.weeks());
        for (int w = 0; w < half; ++w) {
            seq[w] = static_cast<std::uint8_t>((bits >> (half - 1 - w)) & 1u);
            seq[w + half] = static_cast<std::uint8_t>(1 - seq[w]);
        }
        if (seq[0] != kHome || longest_run(seq) > kMaxRun) continue;
        classes.push_back(std::move(seq));
    }

    OracleResult best;
    best.min_trips = -1;
    std::vector<int> pick(pairs);
    auto visit = [&](auto&& self, int depth, int start) -> void {
        if (depth == pairs) {
            TravelMatrix m;
            for (int k : pick) m.rows.push_back(classes[k]);
            for (int k : pick) {
                auto c = classes[k];
                for (auto& v : c) v = static_cast<std::uint8_t>(1 - v);
                m.rows.push_back(std::move(c));
            }
            const int trips = count_trips_total(m);
            if (best.min_trips >= 0 && trips > best.min_trips) return;
            auto schedule = enumerate_schedule(m);
            if (!schedule) return;
            const int spread = fairness_spread(m);
            if (best.min_trips < 0 || trips < best.min_trips) {
                best.min_trips = trips;
                best.witness = Tournament{size, std::move(m), std::move(*schedule)};
                best.optimal_sets = 1;
                best.max_optimal_spread = spread;
            } else {
                ++best.optimal_sets;
                best.max_optimal_spread = std::max(best.max_optimal_spread, spread);
            }
            return;
        }
        for (int k = start; k < static_cast<int>(classes.size()); ++k) {
            pick[depth] = k;
            self(self, depth + 1, k + 1);
        }
    };
    visit(visit, 0, 0);
    if (best.min_trips < 0) throw std::logic_error("no schedulable travel table exists");
    return best;
}

} // namespace mttp
