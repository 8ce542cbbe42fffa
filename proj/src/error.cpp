#include "dgbo/error.hpp"

namespace dgbo {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Config: return "configuration error";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::Numeric: return "numeric error";
    case ErrorKind::Admissibility: return "admissibility error";
    case ErrorKind::Resource: return "resource error";
    case ErrorKind::BlowUp: return "blow-up";
    case ErrorKind::Io: return "I/O error";
    }
    return "error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace dgbo
