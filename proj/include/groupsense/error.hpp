#pragma once

#include <stdexcept>
#include <string>

namespace groupsense {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IngestError : std::runtime_error {
    explicit IngestError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace groupsense
