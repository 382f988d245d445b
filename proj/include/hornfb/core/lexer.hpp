#pragma once

#include "hornfb/error.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hornfb {

enum class token_kind {
    ident,  // lowercase-initial identifier
    var,    // uppercase-initial identifier
    number, // 12, 3/4, 1.5
    punct,  // ( ) { } , . ; : / + - * :- < <= > >= = !=
    end
};

struct token {
    token_kind kind;
    std::string text;
    std::size_t line;
    std::size_t column;

    bool is(token_kind k, std::string_view t) const { return kind == k && text == t; }
    bool is_punct(std::string_view t) const { return is(token_kind::punct, t); }
};

inline std::vector<token> tokenize(std::string_view src) {
    std::vector<token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
    auto is_ident_char = [&](char c) {
        return is_digit(c) || c == '_' || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    };

    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n')
                advance(1);
            continue;
        }
        std::size_t l = line, cl = col, start = i;
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
            std::size_t j = i;
            while (j < src.size() && is_ident_char(src[j]))
                ++j;
            auto kind = (c >= 'A' && c <= 'Z') ? token_kind::var : token_kind::ident;
            if (c == '_')
                throw parse_error("identifiers may not start with '_'", l, cl);
            out.push_back({kind, std::string(src.substr(start, j - start)), l, cl});
            advance(j - i);
            continue;
        }
        if (is_digit(c)) {
            std::size_t j = i;
            while (j < src.size() && is_digit(src[j]))
                ++j;
            if (j + 1 < src.size() && src[j] == '.' && is_digit(src[j + 1])) {
                ++j;
                while (j < src.size() && is_digit(src[j]))
                    ++j;
            } else if (j + 1 < src.size() && src[j] == '/' && is_digit(src[j + 1])) {
                ++j;
                while (j < src.size() && is_digit(src[j]))
                    ++j;
            }
            out.push_back({token_kind::number, std::string(src.substr(start, j - start)), l, cl});
            advance(j - i);
            continue;
        }
        static constexpr std::string_view two[] = {":-", "<=", ">=", "!="};
        bool matched = false;
        for (auto t : two) {
            if (src.substr(i, 2) == t) {
                out.push_back({token_kind::punct, std::string(t), l, cl});
                advance(2);
                matched = true;
                break;
            }
        }
        if (matched)
            continue;
        static constexpr std::string_view one = "(){},.;:/+-*<>=";
        if (one.find(c) != std::string_view::npos) {
            out.push_back({token_kind::punct, std::string(1, c), l, cl});
            advance(1);
            continue;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", l, cl);
    }
    out.push_back({token_kind::end, "", line, col});
    return out;
}

} // namespace hornfb
