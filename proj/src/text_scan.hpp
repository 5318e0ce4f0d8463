#pragma once

// Line-oriented scanning shared by the QKERNEL and QSEL parsers.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmt/error.hpp"

namespace qmt::detail {

struct Token {
    std::string_view text;
    std::size_t offset;
};

struct Line {
    std::string_view text;
    std::size_t offset;
};

class LineCursor {
public:
    explicit LineCursor(std::string_view text) : text_(text) {}

    /// Next line that is neither blank nor a comment. Comments go to `on_comment`.
    template <class OnComment>
    std::optional<Line> next_content(OnComment on_comment) {
        while (pos_ < text_.size()) {
            const std::size_t start = pos_;
            std::size_t end = text_.find('\n', start);
            if (end == std::string_view::npos) end = text_.size();
            pos_ = end + 1;
            const Line line{text_.substr(start, end - start), start};
            const std::size_t first = line.text.find_first_not_of(" \t\r");
            if (first == std::string_view::npos) continue;
            if (line.text[first] == '#') {
                on_comment(line);
                continue;
            }
            return line;
        }
        return std::nullopt;
    }

    std::optional<Line> next_content() {
        return next_content([](const Line&) {});
    }

    std::size_t position() const noexcept { return std::min(pos_, text_.size()); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

inline std::vector<Token> tokenize(const Line& line) {
    std::vector<Token> out;
    const std::string_view s = line.text;
    const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && blank(s[i])) ++i;
        if (i >= s.size()) break;
        const std::size_t start = i;
        while (i < s.size() && !blank(s[i])) ++i;
        out.push_back({s.substr(start, i - start), line.offset + start});
    }
    return out;
}

/// Whole-token numeric parse. Throws ParseError naming `what`.
template <class T>
T parse_number(const Token& t, const char* what) {
    T v{};
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) {
        throw ParseError(std::string("malformed ") + what + " '" + std::string(t.text) + "'", t.offset);
    }
    return v;
}

}  // namespace qmt::detail
