#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace turanlab {

// Vertex count outside 0..kMaxVertices.
class SizeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Malformed argument: self-loop, vertex out of range, bad family parameter.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input outside the domain on which a formula or procedure is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A construction was asked for an n that fails its divisibility predicate.
class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A mathematical property that should hold was observed not to hold.
class PropertyViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace turanlab
