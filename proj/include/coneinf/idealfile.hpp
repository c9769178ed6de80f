#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "coneinf/ideal.hpp"

namespace coneinf {

// Parsed ideal description. File format, one statement per line:
//   vars: x y z          variable names, required once, before any p: line
//   p: y - x^2           one generator per line, in the declared variables
//   name: parabola       optional display name
//   # ...                comment; blank lines are ignored
// Any other "key: value" line is kept as metadata (test corpora store
// expected values this way).
struct IdealFile {
    std::string name;
    Ideal ideal;
    std::vector<std::string> sources;  // generator texts as given
    std::map<std::string, std::string> metadata;
};

// Errors carry "line L, column C" positions (1-based) in the message.
IdealFile parse_ideal_file(std::istream& in, const std::string& display_name);
IdealFile load_ideal_file(const std::string& path);

} // namespace coneinf
