#pragma once

#include <stdexcept>
#include <string>

namespace ffsim {

enum class Errc {
    syntax,            // malformed scenario file
    semantic,          // scenario invariant violated
    no_path,           // goal unreachable from start
    blocked_endpoint,  // start or goal cell blocked
    off_path,          // position not on the path polyline
    missing_path,      // agent has no planned path
    mismatched_agents, // metric inputs disagree on agent ids
    io,                // file system failure
};

class SimError : public std::runtime_error {
public:
    SimError(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace ffsim
