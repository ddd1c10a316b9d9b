#include "simpqe/textproc/tokenize.hpp"

#include <cstdint>

namespace simpqe {

namespace {

// Decodes the UTF-8 sequence at text[i]; on malformed input returns the raw byte.
char32_t decode(std::string_view text, std::size_t i, std::size_t& length) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    auto cont = [&](std::size_t off) -> int {
        if (i + off >= text.size()) return -1;
        const auto b = static_cast<unsigned char>(text[i + off]);
        return (b & 0xC0) == 0x80 ? (b & 0x3F) : -1;
    };
    if (b0 < 0x80) {
        length = 1;
        return b0;
    }
    if ((b0 & 0xE0) == 0xC0) {
        const int c1 = cont(1);
        if (c1 >= 0) {
            length = 2;
            return static_cast<char32_t>(((b0 & 0x1F) << 6) | c1);
        }
    } else if ((b0 & 0xF0) == 0xE0) {
        const int c1 = cont(1);
        const int c2 = cont(2);
        if (c1 >= 0 && c2 >= 0) {
            length = 3;
            return static_cast<char32_t>(((b0 & 0x0F) << 12) | (c1 << 6) | c2);
        }
    } else if ((b0 & 0xF8) == 0xF0) {
        const int c1 = cont(1);
        const int c2 = cont(2);
        const int c3 = cont(3);
        if (c1 >= 0 && c2 >= 0 && c3 >= 0) {
            length = 4;
            return static_cast<char32_t>(((b0 & 0x07) << 18) | (c1 << 12) | (c2 << 6) | c3);
        }
    }
    length = 1;
    return b0;
}

// White_Space property of Unicode.
bool is_unicode_space(char32_t c) {
    switch (c) {
        case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
        case 0x85: case 0xA0: case 0x1680:
        case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
            return true;
        default:
            return c >= 0x2000 && c <= 0x200A;
    }
}

void split_chunk(std::string_view chunk, std::vector<std::string>& out) {
    std::size_t begin = 0;
    std::size_t end = chunk.size();
    while (begin < end && is_edge_punct(chunk[begin])) {
        out.emplace_back(1, chunk[begin]);
        ++begin;
    }
    std::size_t trailing_start = end;
    while (trailing_start > begin && is_edge_punct(chunk[trailing_start - 1])) {
        --trailing_start;
    }
    if (trailing_start > begin) {
        out.emplace_back(chunk.substr(begin, trailing_start - begin));
    }
    for (std::size_t i = trailing_start; i < end; ++i) {
        out.emplace_back(1, chunk[i]);
    }
}

}  // namespace

bool is_edge_punct(char c) {
    switch (c) {
        case '.': case ',': case ';': case ':': case '!': case '?':
        case '"': case '\'': case '(': case ')': case '[': case ']':
            return true;
        default:
            return false;
    }
}

bool is_punct_token(std::string_view token) {
    for (char ch : token) {
        const auto c = static_cast<unsigned char>(ch);
        if (c >= 0x80 || (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
            return false;
        }
    }
    return !token.empty();
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t chunk_start = std::string_view::npos;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t len = 1;
        const char32_t c = decode(text, i, len);
        if (is_unicode_space(c)) {
            if (chunk_start != std::string_view::npos) {
                split_chunk(text.substr(chunk_start, i - chunk_start), tokens);
                chunk_start = std::string_view::npos;
            }
        } else if (chunk_start == std::string_view::npos) {
            chunk_start = i;
        }
        i += len;
    }
    if (chunk_start != std::string_view::npos) {
        split_chunk(text.substr(chunk_start), tokens);
    }
    return tokens;
}

}  // namespace simpqe
