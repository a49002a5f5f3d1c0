#pragma once

#include <stdexcept>
#include <string>

namespace specialcheck {

// Every domain error carries a stable machine-readable kind tag ("EdgeDegree",
// "NotSphere", ...) next to the human message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& message) {
    throw Error(kind, message);
}

inline void require(bool cond, const std::string& kind, const std::string& message) {
    if (!cond) fail(kind, message);
}

} // namespace specialcheck
