#pragma once

#include "hvx/core.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace hvx
{

class ParseError : public Error
{
  public:
    ParseError(const std::string& what, std::size_t line) : Error(format(what, line)), line_(line) {}
    std::size_t line() const noexcept { return line_; }

  private:
    static std::string format(const std::string& what, std::size_t line)
    {
        return line ? "line " + std::to_string(line) + ": " + what : what;
    }
    std::size_t line_;
};

/// Fronts in a text stream: whitespace-separated coordinates, one point per
/// line, '#' starts a comment line, blank lines separate fronts. A stream
/// without any point yields a single empty front of dimension `empty_dim`.
std::vector<Front> read_fronts(std::istream& in, Index empty_dim = 2);
std::vector<Front> read_fronts_file(const std::string& path, Index empty_dim = 2);

/// 17 significant digits; parses back to the same double.
std::string format_value(double v);

void write_front(std::ostream& out, const Front& front);

/// "r1,r2,...,rd".
ReferencePoint parse_reference(const std::string& text);

} // namespace hvx
