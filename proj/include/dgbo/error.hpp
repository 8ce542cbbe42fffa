#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dgbo {

enum class ErrorKind { Config, Domain, Numeric, Admissibility, Resource, BlowUp, Io };

const char* to_string(ErrorKind kind);

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline void require(bool cond, ErrorKind kind, std::string_view what) {
    if (!cond) fail(kind, std::string(what));
}

} // namespace dgbo
