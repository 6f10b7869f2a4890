#ifndef BCT_ERROR_HPP
#define BCT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace bct {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A solver or construction was asked to exceed its hard size limit.
struct CapacityError : Error {
  explicit CapacityError(const std::string& what) : Error(what) {}
};

// Graph file syntax or consistency problem; line is 1-based, 0 if unknown.
struct ParseError : Error {
  ParseError(const std::string& what, int line_no)
      : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what
                          : what),
        line(line_no) {}
  int line;
};

// Raised by bipartition(); carries an odd cycle as the witness.
struct NotBipartiteError : Error {
  explicit NotBipartiteError(std::vector<std::string> cycle)
      : Error("graph is not bipartite (odd cycle of length " +
              std::to_string(cycle.size()) + ")"),
        odd_cycle(std::move(cycle)) {}
  std::vector<std::string> odd_cycle;
};

}  // namespace bct

#endif
