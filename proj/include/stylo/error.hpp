#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace stylo {

// Every failure carries a stable machine-readable name ("NotFound",
// "InvalidCapacity", ...) plus a human message. The CLI prints the name
// on stderr and maps it to a nonzero exit status.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void fail(std::string name, const std::string& message) {
    throw Error(std::move(name), message);
}

} // namespace stylo
