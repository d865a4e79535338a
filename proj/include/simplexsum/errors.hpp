#pragma once

#include <stdexcept>
#include <string>

namespace simplexsum {

/// Malformed input text (point files, rational literals, CLI arguments).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Point count or coordinate length inconsistent with the declared dimension.
class DimensionMismatchError : public std::runtime_error {
public:
    explicit DimensionMismatchError(const std::string& what) : std::runtime_error(what) {}
};

/// Barycentric query against a simplex whose vertices are affinely dependent.
class DegenerateSimplexError : public std::runtime_error {
public:
    explicit DegenerateSimplexError(const std::string& what) : std::runtime_error(what) {}
};

/// Every coefficient vanished; a zero vector is not a dependence certificate.
class AllDegenerateError : public std::runtime_error {
public:
    explicit AllDegenerateError(const std::string& what) : std::runtime_error(what) {}
};

/// Lifted point matrix has rank below n+1, the dependence space is not a line.
class RankDeficientError : public std::runtime_error {
public:
    explicit RankDeficientError(const std::string& what) : std::runtime_error(what) {}
};

/// NaN or infinity fed to a floating-point kernel.
class NonFiniteError : public std::domain_error {
public:
    explicit NonFiniteError(const std::string& what) : std::domain_error(what) {}
};

} // namespace simplexsum
