#include "hvx/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hvx
{

namespace
{

double parse_number(std::string_view token, std::size_t line)
{
    // from_chars rejects a leading '+', which other tools happily print.
    if (token.size() > 1 && token.front() == '+')
        token.remove_prefix(1);
    double v = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || end != token.data() + token.size())
        throw ParseError("not a number: '" + std::string(token) + "'", line);
    if (!std::isfinite(v))
        throw ParseError("non-finite coordinate '" + std::string(token) + "'", line);
    return v;
}

Front assemble(const std::vector<std::vector<double>>& rows, std::size_t first_line)
{
    const auto d = Index(rows.front().size());
    if (d < 2)
        throw ParseError("points need at least two coordinates", first_line);
    PointMatrix m(Index(rows.size()), d);
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        if (Index(rows[i].size()) != d)
            throw ParseError("point has " + std::to_string(rows[i].size()) + " coordinates, front has " +
                                 std::to_string(d),
                             first_line + i);
        for (Index j = 0; j < d; ++j)
            m(Index(i), j) = rows[i][std::size_t(j)];
    }
    return Front(std::move(m));
}

} // namespace

std::vector<Front> read_fronts(std::istream& in, Index empty_dim)
{
    std::vector<Front> fronts;
    std::vector<std::vector<double>> rows;
    std::size_t first_line = 0;
    std::size_t line_no = 0;
    std::string line;

    const auto flush = [&] {
        if (!rows.empty())
            fronts.push_back(assemble(rows, first_line));
        rows.clear();
    };

    while (std::getline(in, line))
    {
        ++line_no;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos)
        {
            flush();
            continue;
        }
        if (line[start] == '#')
            continue;

        std::vector<double> coords;
        std::istringstream tokens(line);
        std::string token;
        while (tokens >> token)
            coords.push_back(parse_number(token, line_no));
        if (rows.empty())
            first_line = line_no;
        rows.push_back(std::move(coords));
    }
    flush();
    if (fronts.empty())
        fronts.emplace_back(empty_dim);
    return fronts;
}

std::vector<Front> read_fronts_file(const std::string& path, Index empty_dim)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path, 0);
    return read_fronts(in, empty_dim);
}

std::string format_value(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_front(std::ostream& out, const Front& front)
{
    for (Index i = 0; i < front.size(); ++i)
    {
        for (Index j = 0; j < front.dim(); ++j)
            out << (j ? " " : "") << format_value(front.matrix()(i, j));
        out << '\n';
    }
}

ReferencePoint parse_reference(const std::string& text)
{
    std::vector<double> coords;
    std::size_t pos = 0;
    while (pos <= text.size())
    {
        const auto comma = std::min(text.find(',', pos), text.size());
        std::string token = text.substr(pos, comma - pos);
        token.erase(0, token.find_first_not_of(" \t"));
        token.erase(token.find_last_not_of(" \t") + 1);
        coords.push_back(parse_number(token, 0));
        pos = comma + 1;
    }
    if (coords.size() < 2)
        throw ParseError("reference point needs at least two coordinates", 0);
    return ReferencePoint(Point(Eigen::Map<const Point>(coords.data(), Index(coords.size()))));
}

} // namespace hvx
