#pragma once

/**
 * @file codec.hpp
 * @brief Letter <-> digit translation (A=0 .. Z=25) and the even-digit block
 *        pipeline: letters pack into fixed-width two-digit codes, blocks stay
 *        strictly below the modulus.
 *
 * "Largest possible" block size is read relative to n: t letters per block
 * where the t-fold "25" concatenation is still < n.
 */

#include "unelgamal/errors.hpp"
#include "unelgamal/natural.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace unelgamal {

struct EncodedMessage {
    std::vector<Natural> blocks;
    unsigned letters_per_block = 1;
    unsigned pad_count = 0;  // trailing pad letters in the final block
};

/// Largest t >= 1 such that "25" repeated t times, read as decimal, is < n.
inline unsigned letters_per_block_for(const Natural& n) {
    if (n <= 25) throw ModulusTooSmall("modulus must exceed 25 to carry a letter");
    unsigned t = 1;
    Natural max_block = 25;  // t-fold concatenation of "25"
    for (;;) {
        Natural next = max_block * 100 + 25;
        if (next >= n) break;
        max_block = next;
        ++t;
    }
    return t;
}

/// Uppercases, strips whitespace, maps A=0..Z=25, packs letters_per_block_for(n)
/// letters per block. Final short block is padded with X (=23).
inline EncodedMessage encode(const std::string& text, const Natural& n) {
    const unsigned t = letters_per_block_for(n);
    std::string letters;
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) continue;
        if (!std::isalpha(c))
            throw UnsupportedCharacter(
                "unsupported character '" + std::string(1, text[i]) +
                    "' at position " + std::to_string(i),
                i);
        letters.push_back(static_cast<char>(std::toupper(c)));
    }
    EncodedMessage msg;
    msg.letters_per_block = t;
    unsigned pad = letters.empty() ? 0 : (t - letters.size() % t) % t;
    letters.append(pad, 'X');
    msg.pad_count = pad;
    for (std::size_t i = 0; i < letters.size(); i += t) {
        Natural block = 0;
        for (unsigned j = 0; j < t; ++j) block = block * 100 + (letters[i + j] - 'A');
        msg.blocks.push_back(block);
    }
    return msg;
}

/// Inverse of encode up to whitespace and case; strips the pad letters.
inline std::string decode(const EncodedMessage& msg) {
    const unsigned t = msg.letters_per_block;
    std::string letters;
    for (const Natural& block : msg.blocks) {
        Natural rest = block;
        std::string group(t, '?');
        for (unsigned j = 0; j < t; ++j) {
            Natural code = rest % 100;
            rest /= 100;
            if (code > 25)
                throw InvalidBlock("two-digit group " + code.str() +
                                   " exceeds 25 in block " + block.str());
            group[t - 1 - j] = static_cast<char>('A' + code.convert_to<unsigned>());
        }
        if (rest != 0)
            throw InvalidBlock("block " + block.str() + " has more than " +
                               std::to_string(2 * t) + " digits");
        letters += group;
    }
    if (msg.pad_count >= letters.size() && msg.pad_count > 0)
        throw InvalidBlock("pad count exceeds message length");
    letters.resize(letters.size() - msg.pad_count);
    return letters;
}

}  // namespace unelgamal
