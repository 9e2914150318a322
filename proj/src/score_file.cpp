#include "trieval/score_file.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "trieval/errors.hpp"

namespace trieval {

namespace {

// Strips one trailing CR so CRLF input parses like LF input.
void chomp_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
}

double parse_score(const std::string& text, std::size_t line_no) {
    if (text.empty()) {
        throw ParseError("empty score field", line_no);
    }
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size()) {
        throw ParseError("malformed score '" + text + "'", line_no);
    }
    if (!std::isfinite(value)) {
        throw ParseError("score must be finite, got '" + text + "'", line_no);
    }
    return value;
}

bool parse_label(const std::string& text, std::size_t line_no) {
    if (text == "1") {
        return true;
    }
    if (text == "0") {
        return false;
    }
    throw ParseError("label must be 0 or 1, got '" + text + "'", line_no);
}

} // namespace

Dataset parse_score_file(std::istream& in) {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line)) {
        throw ParseError("missing header 'score,label'", line_no);
    }
    chomp_cr(line);
    if (line != "score,label") {
        throw ParseError("expected header 'score,label', got '" + line + "'", line_no);
    }

    std::vector<LabeledScore> items;
    while (std::getline(in, line)) {
        ++line_no;
        chomp_cr(line);
        if (line.empty() && in.peek() == std::char_traits<char>::eof()) {
            break; // lone blank line at end of file
        }
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos) {
            throw ParseError("expected '<score>,<label>', got '" + line + "'", line_no);
        }
        const double score = parse_score(line.substr(0, comma), line_no);
        const bool label = parse_label(line.substr(comma + 1), line_no);
        items.push_back({score, label});
    }
    return Dataset(std::move(items));
}

Dataset load_score_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    return parse_score_file(in);
}

void write_score_file(std::ostream& out, const Dataset& data) {
    out << "score,label\n";
    char buffer[64];
    for (const auto& item : data.items()) {
        std::snprintf(buffer, sizeof(buffer), "%.17g", item.score);
        out << buffer << ',' << (item.positive ? '1' : '0') << '\n';
    }
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 0xCBF29CE484222325ULL;
    for (unsigned char byte : bytes) {
        hash ^= byte;
        hash *= 0x100000001B3ULL;
    }
    return hash;
}

} // namespace trieval
