#include "unelgamal/codec.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

using namespace unelgamal;

TEST_CASE("letter table is A=0 .. Z=25") {
    for (int i = 0; i < 26; ++i) {
        std::string s(1, static_cast<char>('A' + i));
        EncodedMessage msg = encode(s, 29);
        REQUIRE(msg.blocks.size() == 1);
        CHECK(msg.blocks[0] == i);
        CHECK(decode(msg) == s);
    }
}

TEST_CASE("letters_per_block_for") {
    CHECK(letters_per_block_for(29) == 1);
    CHECK(letters_per_block_for(26) == 1);
    CHECK(letters_per_block_for(2526) == 2);
    CHECK(letters_per_block_for(2525) == 1);
    CHECK(letters_per_block_for(252526) == 3);
    CHECK_THROWS_AS(letters_per_block_for(25), ModulusTooSmall);
    CHECK_THROWS_AS(letters_per_block_for(9), ModulusTooSmall);

    // monotone nondecreasing in n
    unsigned prev = 1;
    for (std::uint64_t n = 26; n <= 300000; n += 7) {
        unsigned t = letters_per_block_for(n);
        CHECK(t >= prev);
        prev = t;
    }
}

TEST_CASE("the worked message encodes to the nine blocks") {
    EncodedMessage msg = encode("I like math", 29);
    CHECK(msg.blocks == std::vector<Natural>{8, 11, 8, 10, 4, 12, 0, 19, 7});
    CHECK(msg.pad_count == 0);
    CHECK(msg.letters_per_block == 1);
    CHECK(decode(msg) == "ILIKEMATH");
}

TEST_CASE("multi-letter packing") {
    EncodedMessage msg = encode("AB", 2526);
    CHECK(msg.blocks == std::vector<Natural>{1});  // "0001"
    CHECK(msg.pad_count == 0);
    CHECK(decode(msg) == "AB");

    // odd length pads with X
    EncodedMessage odd = encode("ABC", 2526);
    REQUIRE(odd.blocks.size() == 2);
    CHECK(odd.blocks[1] == 2 * 100 + 23);  // "C" + pad X
    CHECK(odd.pad_count == 1);
    CHECK(decode(odd) == "ABC");
}

TEST_CASE("leading zeros survive the round trip") {
    EncodedMessage msg;
    msg.blocks = {1};
    msg.letters_per_block = 2;
    msg.pad_count = 0;
    CHECK(decode(msg) == "AB");  // 0001, not just "B"
}

TEST_CASE("encode rejects non-letters with a position") {
    CHECK_THROWS_AS(encode("abc1", 29), UnsupportedCharacter);
    try {
        encode("ab c7d", 29);
        FAIL("expected UnsupportedCharacter");
    } catch (const UnsupportedCharacter& e) {
        CHECK(e.position == 4);
    }
    CHECK_THROWS_AS(encode("caf\xc3\xa9", 29), UnsupportedCharacter);
}

TEST_CASE("decode rejects bad two-digit groups and oversized blocks") {
    EncodedMessage bad;
    bad.blocks = {26};
    bad.letters_per_block = 1;
    CHECK_THROWS_AS(decode(bad), InvalidBlock);

    EncodedMessage wide;
    wide.blocks = {123};  // three digits in a one-letter block
    wide.letters_per_block = 1;
    CHECK_THROWS_AS(decode(wide), InvalidBlock);
}

TEST_CASE("empty message") {
    EncodedMessage msg = encode("", 29);
    CHECK(msg.blocks.empty());
    CHECK(msg.pad_count == 0);
    CHECK(decode(msg).empty());
    CHECK(encode("   \t\n", 29).blocks.empty());
}

TEST_CASE("round trip on random letter strings across moduli") {
    std::mt19937_64 eng(2024);
    std::vector<Natural> moduli = {29, 26, 101, 2526, 252526, Natural(1) << 64};
    for (int iter = 0; iter < 1000; ++iter) {
        std::size_t len = eng() % 40;
        std::string s;
        for (std::size_t i = 0; i < len; ++i) {
            if (eng() % 7 == 0) {
                s.push_back(' ');
                continue;
            }
            char c = static_cast<char>('a' + eng() % 26);
            s.push_back(eng() % 2 ? c : static_cast<char>(std::toupper(c)));
        }
        std::string normalized;
        for (char c : s)
            if (c != ' ') normalized.push_back(static_cast<char>(std::toupper(c)));
        const Natural& n = moduli[iter % moduli.size()];
        EncodedMessage msg = encode(s, n);
        for (const Natural& b : msg.blocks) CHECK(b < n);
        CHECK(decode(msg) == normalized);
    }
}
