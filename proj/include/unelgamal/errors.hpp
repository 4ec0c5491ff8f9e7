#pragma once

#include <stdexcept>
#include <string>

namespace unelgamal {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// modmath
struct NotInvertible : Error {
    using Error::Error;
};
struct FactorizationTooHard : Error {
    using Error::Error;
};

// group_un
struct InvalidPrime : Error {
    using Error::Error;
};
struct InvalidExponent : Error {
    using Error::Error;
};
struct ModulusMismatch : Error {
    using Error::Error;
};
struct CapExceeded : Error {
    using Error::Error;
};

// dlog
struct MemoryBudgetExceeded : Error {
    using Error::Error;
};
struct NotInSubgroup : Error {
    using Error::Error;
};

// elgamal
struct BlockOutOfRange : Error {
    using Error::Error;
};
struct BadEphemeral : Error {
    using Error::Error;
};

// codec
struct ModulusTooSmall : Error {
    using Error::Error;
};
struct UnsupportedCharacter : Error {
    UnsupportedCharacter(const std::string& msg, std::size_t pos)
        : Error(msg), position(pos) {}
    std::size_t position;
};
struct InvalidBlock : Error {
    using Error::Error;
};

// file formats
struct MalformedFile : Error {
    using Error::Error;
};

}  // namespace unelgamal
