#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "loops/cayley.hpp"

namespace loops {

struct IoError : LoopError {
    explicit IoError(const std::string& msg) : LoopError(msg) {}
};

// Text format: optional '#' comment lines, then the order n on its own
// line, then n lines of n space-separated 0-based entries (row i holds
// the products i*j). Element 0 must be the identity unless relabel is set.
CayleyTable read_table(std::istream& in, const std::string& name, bool relabel = false);
CayleyTable read_table_file(const std::string& path, bool relabel = false);

void write_table(std::ostream& out, const CayleyTable& t,
                 const std::vector<std::string>& comments = {});
void write_table_file(const std::string& path, const CayleyTable& t,
                      const std::vector<std::string>& comments = {});

}  // namespace loops
