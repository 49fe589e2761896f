#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cauchydet {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// Evaluation of a rational function at a zero of its denominator.
class PoleAtPoint : public Error {
public:
    PoleAtPoint(std::string point)
        : Error("pole at t = " + point), point_(std::move(point)) {}

    const std::string& point() const noexcept { return point_; }

private:
    std::string point_;
};

/// One or more matrix / formula entries whose denominator vanishes at the
/// requested numeric t. Indices are 1-based.
class SingularEntry : public Error {
public:
    using Index = std::pair<std::size_t, std::size_t>;

    SingularEntry(std::vector<Index> entries, const std::string& detail = {})
        : Error(describe(entries, detail)), entries_(std::move(entries)), detail_(detail) {}

    const std::vector<Index>& entries() const noexcept { return entries_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    static std::string describe(const std::vector<Index>& entries, const std::string& detail) {
        std::string msg = "SingularEntry at";
        for (const auto& [i, l] : entries)
            msg += " (" + std::to_string(i) + "," + std::to_string(l) + ")";
        if (!detail.empty())
            msg += ": " + detail;
        return msg;
    }

    std::vector<Index> entries_;
    std::string detail_;
};

/// Doolittle elimination hit a vanishing pivot (1-based step).
class ZeroPivot : public Error {
public:
    explicit ZeroPivot(std::size_t step)
        : Error("ZeroPivot at step " + std::to_string(step)), step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class SizeCapExceeded : public Error {
public:
    SizeCapExceeded(std::size_t size, std::size_t cap)
        : Error("matrix size " + std::to_string(size) + " exceeds cofactor cap " + std::to_string(cap)) {}
};

class RetriesExhausted : public Error {
public:
    using Error::Error;
};

} // namespace cauchydet
