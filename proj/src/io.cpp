#include "mttp/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mttp {

using nlohmann::json;

namespace {

const json& member(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

template <typename Convert>
auto read_grid(const json& grid, const std::string& field, Convert convert) {
    using Cell = decltype(convert(0L));
    if (!grid.is_array()) throw ParseError("field '" + field + "' must be an array of rows");
    std::vector<std::vector<Cell>> rows;
    rows.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& row = grid[i];
        const auto where = field + "[" + std::to_string(i) + "]";
        if (!row.is_array()) throw ParseError("field '" + where + "' must be an array");
        std::vector<Cell> cells;
        cells.reserve(row.size());
        for (std::size_t w = 0; w < row.size(); ++w) {
            const auto& cell = row[w];
            const auto at = where + "[" + std::to_string(w) + "]";
            if (!cell.is_number_integer()) throw ParseError("field '" + at + "' must be an integer");
            const auto v = cell.get<long>();
            try {
                cells.push_back(convert(v));
            } catch (const std::out_of_range& e) {
                throw ParseError("field '" + at + "': " + e.what());
            }
        }
        rows.push_back(std::move(cells));
    }
    return rows;
}

} // namespace

TournamentFile parse_tournament(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object()) throw ParseError("tournament file must be a JSON object");

    const auto& n_field = member(doc, "n");
    if (!n_field.is_number_integer()) throw ParseError("field 'n' must be an integer");
    const auto n = n_field.get<long>();
    if (n < 4 || n % 2 != 0 || n > 1000) {
        throw ParseError("field 'n' must be an even team count >= 4, got " + std::to_string(n));
    }
    TournamentFile file{InstanceSize(static_cast<int>(n)), {}, std::nullopt};

    file.travel.rows = read_grid(member(doc, "travel"), "travel", [](long v) {
        if (v < 0 || v > 255) throw std::out_of_range("venue flag " + std::to_string(v) + " out of range");
        return static_cast<std::uint8_t>(v);
    });

    if (auto it = doc.find("schedule"); it != doc.end() && !it->is_null()) {
        ScheduleMatrix s;
        s.rows = read_grid(*it, "schedule", [](long v) {
            if (v < -1'000'000 || v > 1'000'000) throw std::out_of_range("team id out of range");
            return static_cast<int>(v) - 1;
        });
        file.schedule = std::move(s);
    }
    return file;
}

TournamentFile read_tournament(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path.string());
    return parse_tournament(buf.str());
}

std::string format_tournament(InstanceSize size, const TravelMatrix& travel,
                              const std::optional<ScheduleMatrix>& schedule) {
    std::ostringstream os;
    auto rows = [&os](const auto& grid, int offset) {
        os << "[\n";
        for (std::size_t i = 0; i < grid.size(); ++i) {
            os << "    [";
            for (std::size_t w = 0; w < grid[i].size(); ++w) {
                os << (w ? ", " : "") << static_cast<int>(grid[i][w]) + offset;
            }
            os << "]" << (i + 1 < grid.size() ? "," : "") << "\n";
        }
        os << "  ]";
    };
    os << "{\n  \"n\": " << size.teams() << ",\n  \"travel\": ";
    rows(travel.rows, 0);
    if (schedule) {
        os << ",\n  \"schedule\": ";
        rows(schedule->rows, 1);
    }
    os << "\n}\n";
    return os.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw IoError("cannot write " + path.string());
}

std::vector<Violation> validate_file(const TournamentFile& file) {
    if (file.schedule) return validate_tournament({file.size, file.travel, *file.schedule});
    return validate_travel(file.travel, file.size);
}

} // namespace mttp
