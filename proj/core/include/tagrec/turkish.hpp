#ifndef TAGREC_TURKISH_HPP
#define TAGREC_TURKISH_HPP

#include <string>
#include <string_view>
#include <vector>

namespace tagrec {

// The 29 letters of the Turkish alphabet, in alphabet order.
const std::u32string& turkish_alphabet();

// UTF-8 <-> code points. Invalid bytes round-trip unchanged
// (mapped into the low surrogate range on decode).
std::u32string utf8_decode(std::string_view s);
std::string utf8_encode(const std::u32string& cps);
std::string utf8_encode(char32_t cp);

// Locale-correct lowercasing: 'İ' -> 'i', 'I' -> 'ı', everything else
// follows the usual Latin rules. Total and idempotent.
std::string turkish_lowercase(std::string_view s);
char32_t turkish_lowercase(char32_t cp);

// True if s contains no character that turkish_lowercase would change.
bool is_turkish_lowercase(std::string_view s);

// Collation: alphabet letters sort in alphabet order (c < ç < d, ı < i, ...);
// anything outside the alphabet sorts after it by code point.
bool turkish_collate_less(std::string_view a, std::string_view b);

std::string trim(std::string_view s);

} // namespace tagrec

#endif
