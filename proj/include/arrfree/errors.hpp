#pragma once

#include <stdexcept>
#include <string>

namespace arrfree {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DescriptorMismatch : Error {
    DescriptorMismatch() : Error("operands belong to different fields") {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct ZeroNormal : Error {
    ZeroNormal() : Error("hyperplane normal must be nonzero") {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

struct RankDeficient : Error {
    RankDeficient() : Error("arrangement does not have rank 3") {}
};

struct OrbitCapExceeded : Error {
    explicit OrbitCapExceeded(std::size_t cap)
        : Error("orbit closure exceeded cap of " + std::to_string(cap) + " covectors") {}
};

struct UnknownName : Error {
    explicit UnknownName(const std::string& name) : Error("unknown builtin: " + name) {}
};

struct NotFree : Error {
    NotFree() : Error("operation requires a free arrangement") {}
};

struct EmptyMultiarrangement : Error {
    EmptyMultiarrangement() : Error("multiarrangement has no forms") {}
};

struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& what) : Error(what) {}
};

struct NotDivisibleByTMinus1 : Error {
    NotDivisibleByTMinus1() : Error("characteristic polynomial not divisible by t-1") {}
};

struct DuplicateSeed : Error {
    DuplicateSeed() : Error("seed orbits are not disjoint") {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace arrfree
