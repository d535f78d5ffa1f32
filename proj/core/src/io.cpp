#include "bmem/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace bmem {
namespace {

std::string trimmed(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = text.find_last_not_of(" \t\r\n");
    return text.substr(begin, end - begin + 1);
}

bool is_comment_or_blank(const std::string& line) {
    const std::string body = trimmed(line);
    return body.empty() || body.front() == '#';
}

int parse_bipolar_token(const std::string& token, std::size_t line_no) {
    if (token == "1" || token == "+1") {
        return 1;
    }
    if (token == "-1") {
        return -1;
    }
    throw ParseError("line " + std::to_string(line_no) + ": invalid token '" + token +
                         "', expected 1, +1 or -1",
                     line_no);
}

double parse_number(const std::string& token, std::size_t line_no) {
    const std::string body = trimmed(token);
    double value = 0.0;
    const char* first = body.data();
    const char* last = body.data() + body.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || body.empty()) {
        throw ParseError("line " + std::to_string(line_no) + ": invalid number '" + body + "'",
                         line_no);
    }
    return value;
}

}  // namespace

MemorySet parse_memories(std::istream& in) {
    std::vector<BipolarVector> memories;
    std::string line;
    std::size_t line_no = 0;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) {
            continue;
        }
        std::istringstream tokens(line);
        std::vector<int> bits;
        std::string token;
        while (tokens >> token) {
            bits.push_back(parse_bipolar_token(token, line_no));
        }
        if (width == 0) {
            width = bits.size();
        } else if (bits.size() != width) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                                 std::to_string(width) + " values, got " +
                                 std::to_string(bits.size()),
                             line_no);
        }
        memories.emplace_back(std::move(bits));
    }
    return MemorySet(std::move(memories));
}

ProximityMatrix parse_proximity(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) {
            continue;
        }
        std::vector<double> row;
        std::string cell;
        std::istringstream cells(line);
        while (std::getline(cells, cell, ',')) {
            row.push_back(parse_number(cell, line_no));
        }
        if (width == 0) {
            width = row.size();
        } else if (row.size() != width) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                                 std::to_string(width) + " columns, got " +
                                 std::to_string(row.size()),
                             line_no);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw ParseError("proximity file contains no data rows");
    }
    return ProximityMatrix::validated(std::move(rows));
}

namespace {

template <typename Parser>
auto parse_file(const std::string& path, Parser parse) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open file '" + path + "'");
    }
    try {
        return parse(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), e.line());
    }
}

}  // namespace

MemorySet parse_memories_file(const std::string& path) {
    return parse_file(path, [](std::istream& in) { return parse_memories(in); });
}

ProximityMatrix parse_proximity_file(const std::string& path) {
    return parse_file(path, [](std::istream& in) { return parse_proximity(in); });
}

}  // namespace bmem
