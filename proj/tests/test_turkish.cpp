#include <doctest.h>

#include <random>
#include <set>

#include "tagrec/turkish.hpp"

using namespace tagrec;

TEST_CASE("turkish alphabet has 29 distinct letters") {
    const std::u32string& letters = turkish_alphabet();
    CHECK(letters.size() == 29);
    std::set<char32_t> unique(letters.begin(), letters.end());
    CHECK(unique.size() == 29);
}

TEST_CASE("lowercasing follows Turkish rules") {
    CHECK(turkish_lowercase("İSTANBUL") == "istanbul");
    CHECK(turkish_lowercase("ILICA") == "ılıca");
    CHECK(turkish_lowercase("haber") == "haber");
    CHECK(turkish_lowercase("ÇĞÖŞÜ") == "çğöşü");
    CHECK(turkish_lowercase("Ankara'DA") == "ankara'da");
    CHECK(turkish_lowercase("") == "");
}

TEST_CASE("lowercasing is idempotent on random mixed-case strings") {
    std::mt19937 rng(42);
    const std::u32string pool = U"abcçdefgğhıijklmnoöprsştuüvyzABCÇDEFGĞHIİJKLMNOÖPRSŞTUÜVYZ0123456789 .-'";
    std::uniform_int_distribution<std::size_t> dc(0, pool.size() - 1);
    std::uniform_int_distribution<int> dl(0, 24);
    for (int i = 0; i < 500; ++i) {
        std::u32string s;
        int n = dl(rng);
        for (int k = 0; k < n; ++k) s.push_back(pool[dc(rng)]);
        std::string once = turkish_lowercase(utf8_encode(s));
        CHECK(turkish_lowercase(once) == once);
        CHECK(is_turkish_lowercase(once));
        // no dotted-I confusion survives
        CHECK(once.find("I") == std::string::npos);
        CHECK(once.find("İ") == std::string::npos);
    }
}

TEST_CASE("every I and dotted-İ maps to its Turkish counterpart") {
    CHECK(turkish_lowercase("IIII") == "ıııı");
    CHECK(turkish_lowercase("İİİİ") == "iiii");
    CHECK(turkish_lowercase("IİIİ") == "ıiıi");
}

TEST_CASE("utf8 round-trips, including invalid bytes") {
    std::string valid = "çilek ğ ış 🙂";
    CHECK(utf8_encode(utf8_decode(valid)) == valid);
    std::string invalid = "ab\xFF\xC3zçd\x80";
    CHECK(utf8_encode(utf8_decode(invalid)) == invalid);
}

TEST_CASE("collation orders by alphabet position") {
    CHECK(turkish_collate_less("cam", "çam"));
    CHECK(turkish_collate_less("ılık", "ilik"));
    CHECK(!turkish_collate_less("ilik", "ılık"));
    CHECK(turkish_collate_less("su", "şu"));
    CHECK(!turkish_collate_less("ev", "ev"));
}

TEST_CASE("trim strips surrounding whitespace only") {
    CHECK(trim("  haber\t\n") == "haber");
    CHECK(trim("iç boşluk kalır") == "iç boşluk kalır");
    CHECK(trim(" \t ") == "");
}
