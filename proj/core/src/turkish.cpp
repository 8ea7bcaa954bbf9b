#include "tagrec/turkish.hpp"

#include <algorithm>

namespace tagrec {

const std::u32string& turkish_alphabet() {
    static const std::u32string letters =
        U"abcçdefgğhıijklmnoöprsştuüvyz";
    return letters;
}

std::u32string utf8_decode(std::string_view s) {
    std::u32string out;
    out.reserve(s.size());
    std::size_t i = 0;
    const auto n = s.size();
    auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
    auto bad = [&]() { out.push_back(0xDC00u + byte(i)); ++i; };
    while (i < n) {
        unsigned char b0 = byte(i);
        if (b0 < 0x80) {
            out.push_back(b0);
            ++i;
        } else if ((b0 & 0xE0) == 0xC0) {
            if (i + 1 < n && (byte(i + 1) & 0xC0) == 0x80) {
                char32_t cp = (char32_t(b0 & 0x1F) << 6) | (byte(i + 1) & 0x3F);
                if (cp >= 0x80) { out.push_back(cp); i += 2; } else bad();
            } else bad();
        } else if ((b0 & 0xF0) == 0xE0) {
            if (i + 2 < n && (byte(i + 1) & 0xC0) == 0x80 && (byte(i + 2) & 0xC0) == 0x80) {
                char32_t cp = (char32_t(b0 & 0x0F) << 12) |
                              (char32_t(byte(i + 1) & 0x3F) << 6) | (byte(i + 2) & 0x3F);
                if (cp >= 0x800 && !(cp >= 0xD800 && cp <= 0xDFFF)) { out.push_back(cp); i += 3; } else bad();
            } else bad();
        } else if ((b0 & 0xF8) == 0xF0) {
            if (i + 3 < n && (byte(i + 1) & 0xC0) == 0x80 && (byte(i + 2) & 0xC0) == 0x80 &&
                (byte(i + 3) & 0xC0) == 0x80) {
                char32_t cp = (char32_t(b0 & 0x07) << 18) |
                              (char32_t(byte(i + 1) & 0x3F) << 12) |
                              (char32_t(byte(i + 2) & 0x3F) << 6) | (byte(i + 3) & 0x3F);
                if (cp >= 0x10000 && cp <= 0x10FFFF) { out.push_back(cp); i += 4; } else bad();
            } else bad();
        } else {
            bad();
        }
    }
    return out;
}

std::string utf8_encode(char32_t cp) {
    std::string out;
    if (cp >= 0xDC00 && cp <= 0xDCFF) {
        // escaped invalid byte
        out.push_back(static_cast<char>(cp - 0xDC00));
    } else if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
    return out;
}

std::string utf8_encode(const std::u32string& cps) {
    std::string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) out += utf8_encode(cp);
    return out;
}

char32_t turkish_lowercase(char32_t cp) {
    switch (cp) {
        case U'İ': return U'i';        // İ
        case U'I':      return U'ı';   // ı
        case U'Ğ': return U'ğ';   // Ğ -> ğ
        case U'Ş': return U'ş';   // Ş -> ş
        default: break;
    }
    if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
    // Latin-1 supplement uppercase (Ç, Ö, Ü live here), skipping '×'
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
    return cp;
}

std::string turkish_lowercase(std::string_view s) {
    std::u32string cps = utf8_decode(s);
    for (char32_t& cp : cps) cp = turkish_lowercase(cp);
    return utf8_encode(cps);
}

bool is_turkish_lowercase(std::string_view s) {
    for (char32_t cp : utf8_decode(s))
        if (turkish_lowercase(cp) != cp) return false;
    return true;
}

namespace {

long collate_rank(char32_t cp) {
    const std::u32string& letters = turkish_alphabet();
    auto pos = letters.find(cp);
    if (pos != std::u32string::npos) return static_cast<long>(pos);
    return 1000 + static_cast<long>(cp);
}

} // namespace

bool turkish_collate_less(std::string_view a, std::string_view b) {
    std::u32string ua = utf8_decode(a), ub = utf8_decode(b);
    return std::lexicographical_compare(
        ua.begin(), ua.end(), ub.begin(), ub.end(),
        [](char32_t x, char32_t y) { return collate_rank(x) < collate_rank(y); });
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    auto is_space = [](char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
    };
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return std::string(s.substr(b, e - b));
}

} // namespace tagrec
