#pragma once

#include <stdexcept>
#include <string>

namespace crofton {

class ParseError : public std::runtime_error {
public:
    enum class Kind { syntax, semantic };
    ParseError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// The input curve lies in the discriminant: its invariants are undefined.
class GenericityViolation : public std::runtime_error {
public:
    enum class Kind { near_tangency, triple_point, vertex_intersection, cusp, degenerate_face };
    GenericityViolation(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const char* to_string(GenericityViolation::Kind kind);

}  // namespace crofton
