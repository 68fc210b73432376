#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ramsey/graph.hpp"

namespace ramsey {

enum class Graph6ErrorKind {
    bad_header,         // first byte(s) do not encode a vertex count
    too_large,          // encoded order exceeds the 64-vertex engine cap
    truncated_payload,  // fewer bit-payload bytes than C(n,2) bits require
    bad_payload,        // payload byte outside the printable range, or trailing junk
};

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(Graph6ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    Graph6ErrorKind kind() const { return kind_; }

private:
    Graph6ErrorKind kind_;
};

/// Decode one graph6 line (trailing newline/CR tolerated).
Graph parse_graph6(std::string_view text);

/// Encode in standard graph6 (short header for n <= 62, '~' form above).
std::string write_graph6(const Graph& g);

}  // namespace ramsey
