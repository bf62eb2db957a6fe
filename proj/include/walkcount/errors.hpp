#pragma once

#include <stdexcept>
#include <string>

namespace walkcount {

// Error raised on malformed text input; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace walkcount
