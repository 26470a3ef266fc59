#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace kf {

// Domain error carrying a machine-readable kind (e.g. "NotDominant") next to
// the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace kf
