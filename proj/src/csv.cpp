#include "motiontx/csv.hpp"

#include "motiontx/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>
#include <system_error>
#include <unistd.h>

namespace motiontx {

namespace {

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            cells.push_back(line.substr(start));
            return cells;
        }
        cells.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

// Nine significant digits, widened for |v| >= 10 so the rounding error stays
// below 5e-9 absolute: the last kept digit sits at 10^(e - p + 1), e being
// the decimal exponent of v.
int significant_digits(double v) {
    constexpr int kDigits = 9;
    if (v == 0.0) {
        return kDigits;
    }
    const int exponent = static_cast<int>(std::floor(std::log10(std::abs(v))));
    return std::clamp(exponent + kDigits, kDigits, 17);
}

[[noreturn]] void parse_failure(const std::string& source, std::size_t line, const std::string& what) {
    throw Error(ErrorCode::ParseError, source + ":" + std::to_string(line) + ": " + what);
}

} // namespace

PoseTable parse_csv(std::istream& in, const std::string& source) {
    std::string line;
    std::size_t line_number = 0;
    if (!std::getline(in, line)) {
        parse_failure(source, 1, "missing header");
    }
    ++line_number;
    if (line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF &&
        static_cast<unsigned char>(line[1]) == 0xBB && static_cast<unsigned char>(line[2]) == 0xBF) {
        line.erase(0, 3);
    }

    const auto header = split(trim(line));
    if (trim(header.front()) != "frame") {
        parse_failure(source, line_number, "header must start with 'frame'");
    }
    PoseTable table;
    for (std::size_t c = 1; c < header.size(); ++c) {
        const auto name = trim(header[c]);
        if (name.empty()) {
            parse_failure(source, line_number, "empty channel name in column " + std::to_string(c + 1));
        }
        table.channel_names.emplace_back(name);
    }
    table.columns.resize(table.channel_names.size());
    try {
        table.validate();
    } catch (const Error& e) {
        throw Error(e.code(), source + ":1: " + e.what());
    }

    while (std::getline(in, line)) {
        ++line_number;
        const auto row = trim(line);
        if (row.empty()) {
            continue;
        }
        const auto cells = split(row);
        if (cells.size() != table.channel_names.size() + 1) {
            parse_failure(source, line_number, "expected " + std::to_string(table.channel_names.size() + 1) +
                                                   " cells, found " + std::to_string(cells.size()));
        }

        const auto index_text = trim(cells[0]);
        long long index = 0;
        const auto [iptr, iec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), index);
        if (iec != std::errc() || iptr != index_text.data() + index_text.size()) {
            parse_failure(source, line_number, "frame index '" + std::string(index_text) + "' is not an integer");
        }
        if (index < 0 || static_cast<std::size_t>(index) != table.frames) {
            throw Error(ErrorCode::NonConsecutiveFrames, source + ":" + std::to_string(line_number) +
                                                             ": expected frame " + std::to_string(table.frames) +
                                                             ", found " + std::string(index_text));
        }

        for (std::size_t c = 0; c < table.channel_names.size(); ++c) {
            auto cell = trim(cells[c + 1]);
            if (!cell.empty() && cell.front() == '+') {
                cell.remove_prefix(1);
            }
            double value = 0.0;
            const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
            if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(value)) {
                parse_failure(source, line_number, "channel '" + table.channel_names[c] + "': value '" +
                                                       std::string(cells[c + 1]) + "' is not a finite number");
            }
            table.columns[c].push_back(value);
        }
        ++table.frames;
    }
    return table;
}

PoseTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
    }
    return parse_csv(in, path.string());
}

void format_csv(const PoseTable& table, std::ostream& out) {
    table.validate();
    out << "frame";
    for (const auto& name : table.channel_names) {
        out << ',' << name;
    }
    out << '\n';
    char buffer[64];
    for (std::size_t f = 0; f < table.frames; ++f) {
        out << f;
        for (const auto& column : table.columns) {
            const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, column[f],
                                                 std::chars_format::general, significant_digits(column[f]));
            out << ',' << std::string_view(buffer, static_cast<std::size_t>(ptr - buffer));
        }
        out << '\n';
    }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
    auto temp = path;
    temp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(ErrorCode::IoError, "cannot open '" + temp.string() + "' for writing");
        }
        out << contents;
        out.flush();
        if (!out) {
            throw Error(ErrorCode::IoError, "failed writing '" + temp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(temp, path, ec);
    if (ec) {
        std::filesystem::remove(temp, ec);
        throw Error(ErrorCode::IoError, "cannot move output into '" + path.string() + "'");
    }
}

void write_csv(const PoseTable& table, const std::filesystem::path& path) {
    std::ostringstream out;
    format_csv(table, out);
    write_file_atomic(path, out.str());
}

} // namespace motiontx
