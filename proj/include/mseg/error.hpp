#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mseg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

// An operation was called outside its domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A postcondition that the mathematics guarantees did not hold. Always a bug
// or a counterexample; never repaired silently.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

// Root indices and segment endpoints are confined to [-kIndexLimit, kIndexLimit],
// so neighbouring-index arithmetic (i - 1, i + 1, -i) can never wrap.
inline constexpr int kIndexLimit = 1 << 30;

// Throws std::overflow_error when i leaves the admissible index range.
int checked_index(long long i);

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
int add(int a, int b);
int neg(int a);

} // namespace checked

} // namespace mseg
