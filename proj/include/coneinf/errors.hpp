#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coneinf {

// Syntax error in a polynomial or ideal file. `position` is a 0-based
// character offset into the offending text.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Two polynomials from different variable contexts were combined.
class context_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured work budget (e.g. Groebner pair limit) was exhausted.
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Random choices failed to produce an admissible or generic configuration.
class genericity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Point sampling could not fill its quota.
class sampling_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Neighbor graph does not connect the queried points.
class disconnected_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace coneinf
