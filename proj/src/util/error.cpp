#include "simpqe/util/error.hpp"

namespace simpqe {

namespace {

std::string format_location(const std::string& source, std::size_t line, const std::string& what) {
    std::string out = source;
    if (line > 0) {
        out += ":" + std::to_string(line);
    }
    if (!out.empty()) {
        out += ": ";
    }
    return out + what;
}

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& what)
    : Error(format_location(source, line, what)), line_(line) {}

}  // namespace simpqe
