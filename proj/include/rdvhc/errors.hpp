#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rdvhc {

// Bad value crossing a module boundary: unknown vertex, malformed cycle, ...
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Text input that does not conform to one of the file formats.
struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

// A Hamiltonian cycle of a reduced graph whose non-X runs do not decompose
// into well-formed j-blocks. Must abort loudly, never be swallowed.
struct StructureViolation : std::runtime_error {
    explicit StructureViolation(const std::string& what) : std::runtime_error(what) {}
};

// Block decomposition succeeded but the substituted bipartite sequence is not
// a Hamiltonian cycle of the source instance.
struct ProjectionViolation : StructureViolation {
    explicit ProjectionViolation(const std::string& what) : StructureViolation(what) {}
};

// Solver hit its node-expansion budget; distinct from "no cycle exists".
struct ResourceExhausted : std::runtime_error {
    ResourceExhausted(std::uint64_t expanded_, std::uint64_t budget_)
        : std::runtime_error("node budget exhausted: expanded " + std::to_string(expanded_) +
                             " of " + std::to_string(budget_)),
          expanded(expanded_),
          budget(budget_) {}
    std::uint64_t expanded;
    std::uint64_t budget;
};

// Random instance generation ran out of retries.
struct GenerationError : std::runtime_error {
    explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rdvhc
