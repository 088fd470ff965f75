#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "planedual/rotation_system.hpp"

namespace planedual {

enum class ParseErrorKind {
    BadHeader,
    NonIntegerToken,
    CountsInconsistent,
    DartRepeated,
    DartMissing,
};

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          kind_(kind),
          line_(line) {}

    ParseErrorKind kind() const { return kind_; }
    int line() const { return line_; }

private:
    ParseErrorKind kind_;
    int line_;
};

const char* to_string(ParseErrorKind k);

/// Parse a pmap document:
///
///     pmap 1
///     V <n>
///     E <m>
///     sigma <v>: d0 d1 ... dk     (one line per vertex, ccw dart order)
///
/// Lines starting with '#' are comments and blank lines are ignored.
/// Darts of edge i are 2i and 2i+1; endpoints are inferred from which
/// sigma line a dart appears on. Throws ParseError with the offending
/// 1-based physical line number.
RotationSystem parse_rotation_system(std::string_view text);

/// Canonical form: vertex lines ascending, each sigma cycle rotated to
/// start at its smallest dart. parse(serialize(m)) reproduces m exactly,
/// and serialize(parse(doc)) == doc for canonical documents.
std::string serialize(const RotationSystem& rs);

} // namespace planedual
