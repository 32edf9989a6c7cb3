#include "mttp/core.hpp"

#include <algorithm>
#include <sstream>

namespace mttp {

InstanceSize::InstanceSize(int teams) : teams_(teams) {
    if (teams < 4 || teams % 2 != 0) {
        throw std::invalid_argument("team count must be an even number >= 4, got " +
                                    std::to_string(teams));
    }
}

std::string_view to_string(ViolationKind kind) noexcept {
    switch (kind) {
    case ViolationKind::RunLength: return "RunLength";
    case ViolationKind::MirrorComplement: return "MirrorComplement";
    case ViolationKind::ColumnBalance: return "ColumnBalance";
    case ViolationKind::DuplicateRow: return "DuplicateRow";
    case ViolationKind::SelfPlay: return "SelfPlay";
    case ViolationKind::SymmetryBroken: return "SymmetryBroken";
    case ViolationKind::NotRoundRobin: return "NotRoundRobin";
    case ViolationKind::NotMirrored: return "NotMirrored";
    case ViolationKind::VenueInconsistent: return "VenueInconsistent";
    case ViolationKind::BadShape: return "BadShape";
    }
    return "Unknown";
}

int count_trips_team(std::span<const std::uint8_t> seq) {
    int trips = 0;
    std::uint8_t prev = kHome;
    for (auto v : seq) {
        if (v == kAway) {
            // one trip to reach this away venue; opening a run also implies
            // a trip home at its end
            trips += prev == kAway ? 1 : 2;
        }
        prev = v;
    }
    return trips;
}

int count_trips_team(std::span<const std::uint8_t> seq, InstanceSize size) {
    if (static_cast<int>(seq.size()) != size.weeks()) {
        throw ShapeError("travel sequence has " + std::to_string(seq.size()) +
                         " weeks, expected " + std::to_string(size.weeks()));
    }
    return count_trips_team(seq);
}

int count_trips_total(const TravelMatrix& travel) {
    int total = 0;
    for (const auto& row : travel.rows) total += count_trips_team(row);
    return total;
}

int fairness_spread(const TravelMatrix& travel) {
    if (travel.rows.empty()) return 0;
    int lo = count_trips_team(travel.rows.front());
    int hi = lo;
    for (const auto& row : travel.rows) {
        const int t = count_trips_team(row);
        lo = std::min(lo, t);
        hi = std::max(hi, t);
    }
    return hi - lo;
}

int longest_run(std::span<const std::uint8_t> seq) {
    int best = 0;
    int cur = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        cur = (i > 0 && seq[i] == seq[i - 1]) ? cur + 1 : 1;
        best = std::max(best, cur);
    }
    return best;
}

bool is_mirror_complement(std::span<const std::uint8_t> seq) {
    if (seq.size() % 2 != 0) return false;
    const std::size_t half = seq.size() / 2;
    for (std::size_t w = 0; w < half; ++w) {
        if (seq[w] + seq[w + half] != 1) return false;
    }
    return true;
}

namespace {

bool complements(const TravelSequence& a, const TravelSequence& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t w = 0; w < a.size(); ++w) {
        if (a[w] + b[w] != 1) return false;
    }
    return true;
}

std::string week_label(int week) { return "week " + std::to_string(week + 1); }
std::string team_label(int team) { return "team " + std::to_string(team + 1); }

} // namespace

std::optional<int> complement_partner(const TravelMatrix& travel, int team) {
    const auto& row = travel.rows.at(team);
    for (int k = 0; k < travel.teams(); ++k) {
        if (k != team && complements(row, travel.rows[k])) return k;
    }
    return std::nullopt;
}

std::vector<Violation> validate_travel(const TravelMatrix& travel, InstanceSize size) {
    std::vector<Violation> out;
    const int n = size.teams();
    const int weeks = size.weeks();
    const int half = size.half();
    bool uniform = true;

    if (travel.teams() != n) {
        uniform = false;
        out.push_back({ViolationKind::BadShape, std::nullopt, std::nullopt,
                       "travel table has " + std::to_string(travel.teams()) + " rows, expected " +
                           std::to_string(n)});
    }

    for (int i = 0; i < travel.teams(); ++i) {
        const auto& row = travel.rows[i];
        if (static_cast<int>(row.size()) != weeks) {
            uniform = false;
            out.push_back({ViolationKind::BadShape, i, std::nullopt,
                           "travel row has " + std::to_string(row.size()) + " weeks, expected " +
                               std::to_string(weeks)});
            continue;
        }
        bool binary = true;
        for (int w = 0; w < weeks; ++w) {
            if (row[w] > 1) {
                binary = false;
                out.push_back({ViolationKind::BadShape, i, w,
                               "venue flag " + std::to_string(row[w]) + " is not 0 or 1"});
            }
        }
        if (!binary) {
            uniform = false;
            continue;
        }

        int start = 0;
        for (int w = 1; w <= weeks; ++w) {
            if (w == weeks || row[w] != row[start]) {
                if (w - start > kMaxRun) {
                    out.push_back({ViolationKind::RunLength, i, start,
                                   std::to_string(w - start) + " consecutive " +
                                       (row[start] == kAway ? "away" : "home") + " games"});
                }
                start = w;
            }
        }

        for (int w = 0; w < half; ++w) {
            if (row[w] + row[w + half] != 1) {
                out.push_back({ViolationKind::MirrorComplement, i, w,
                               week_label(w) + " and " + week_label(w + half) +
                                   " have the same venue"});
            }
        }
    }

    if (!uniform) return out;

    for (int w = 0; w < weeks; ++w) {
        int away = 0;
        for (const auto& row : travel.rows) away += row[w];
        if (away != n / 2) {
            out.push_back({ViolationKind::ColumnBalance, std::nullopt, w,
                           std::to_string(away) + " away games, expected " + std::to_string(n / 2)});
        }
    }

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (travel.rows[i] == travel.rows[j]) {
                out.push_back({ViolationKind::DuplicateRow, i, std::nullopt,
                               "same travel sequence as " + team_label(j)});
            }
        }
    }

    for (int i = 0; i < n; ++i) {
        if (!complement_partner(travel, i)) {
            out.push_back({ViolationKind::MirrorComplement, i, std::nullopt,
                           "no other team has the complementary travel sequence"});
        }
    }
    return out;
}

std::vector<Violation> validate_tournament(const Tournament& t) {
    auto out = validate_travel(t.travel, t.size);
    const int n = t.size.teams();
    const int weeks = t.size.weeks();
    const int half = t.size.half();
    const auto& cells = t.schedule.rows;

    bool shape_ok = true;
    if (t.schedule.teams() != n) {
        shape_ok = false;
        out.push_back({ViolationKind::BadShape, std::nullopt, std::nullopt,
                       "schedule table has " + std::to_string(t.schedule.teams()) +
                           " rows, expected " + std::to_string(n)});
    }
    for (int i = 0; i < t.schedule.teams(); ++i) {
        if (static_cast<int>(cells[i].size()) != weeks) {
            shape_ok = false;
            out.push_back({ViolationKind::BadShape, i, std::nullopt,
                           "schedule row has " + std::to_string(cells[i].size()) +
                               " weeks, expected " + std::to_string(weeks)});
            continue;
        }
        for (int w = 0; w < weeks; ++w) {
            if (cells[i][w] < 0 || cells[i][w] >= n) {
                shape_ok = false;
                out.push_back({ViolationKind::BadShape, i, w,
                               "opponent id " + std::to_string(cells[i][w] + 1) + " out of range"});
            }
        }
    }
    if (!shape_ok) return out;

    const bool travel_ok = t.travel.teams() == n &&
                           std::all_of(t.travel.rows.begin(), t.travel.rows.end(),
                                       [&](const auto& r) { return static_cast<int>(r.size()) == weeks; });

    for (int i = 0; i < n; ++i) {
        for (int w = 0; w < weeks; ++w) {
            const int j = cells[i][w];
            if (j == i) {
                out.push_back({ViolationKind::SelfPlay, i, w, "team plays itself"});
                continue;
            }
            const bool symmetric = cells[j][w] == i;
            if (!symmetric) {
                out.push_back({ViolationKind::SymmetryBroken, i, w,
                               "opponent is " + team_label(j) + " but " + team_label(j) +
                                   " plays " + team_label(cells[j][w])});
            }
            if (travel_ok && (i < j || !symmetric) && t.travel.rows[i][w] == t.travel.rows[j][w]) {
                out.push_back({ViolationKind::VenueInconsistent, i, w,
                               "both this team and " + team_label(j) + " are " +
                                   (t.travel.rows[i][w] == kAway ? "away" : "at home")});
            }
        }
    }

    for (int i = 0; i < n; ++i) {
        for (int h = 0; h < 2; ++h) {
            std::vector<int> seen(n, 0);
            for (int w = h * half; w < (h + 1) * half; ++w) ++seen[cells[i][w]];
            std::string missing;
            for (int j = 0; j < n; ++j) {
                if (j != i && seen[j] != 1) {
                    missing += (missing.empty() ? "" : ", ") + std::to_string(j + 1) + " x" +
                               std::to_string(seen[j]);
                }
            }
            if (!missing.empty()) {
                out.push_back({ViolationKind::NotRoundRobin, i, std::nullopt,
                               std::string(h == 0 ? "first" : "second") +
                                   " half does not meet every opponent once (" + missing + ")"});
            }
        }
    }

    for (int i = 0; i < n; ++i) {
        for (int w = 0; w < half; ++w) {
            if (cells[i][w] != cells[i][w + half]) {
                out.push_back({ViolationKind::NotMirrored, i, w,
                               week_label(w) + " and " + week_label(w + half) +
                                   " have different opponents"});
            }
        }
    }
    return out;
}

std::string describe(const Violation& v) {
    std::ostringstream os;
    os << to_string(v.kind);
    if (v.team) os << " " << team_label(*v.team);
    if (v.week) os << " " << week_label(*v.week);
    if (!v.detail.empty()) os << ": " << v.detail;
    return os.str();
}

} // namespace mttp
