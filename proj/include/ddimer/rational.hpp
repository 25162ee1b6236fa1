#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace ddimer {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct ValidationError : Error {
    using Error::Error;
};
struct NotOddEven : Error {
    using Error::Error;
};
struct NotBlackWhite : Error {
    using Error::Error;
};
struct NoTripartitePairing : Error {
    using Error::Error;
};
struct ZeroDimerPartition : Error {
    using Error::Error;
};
struct CapExceeded : Error {
    using Error::Error;
};

// Accepts "p" or "p/q" with optional leading '-'.
Rat parse_rational(const std::string& text);

// "p/q" with q = 1 elided.
std::string rat_str(const Rat& r);

}  // namespace ddimer
