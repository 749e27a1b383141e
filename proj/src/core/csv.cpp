#include "core/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace fracdim {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = line.find(sep, pos);
        out.push_back(line.substr(pos, next == std::string_view::npos ? next : next - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

double parse_double(std::string_view tok, int line_no) {
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t' || tok.back() == '\r')) tok.remove_suffix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw error(errc::format_error,
                    "line " + std::to_string(line_no) + ": bad numeric field '" + std::string(tok) + "'");
    return v;
}

long parse_int(std::string_view tok, int line_no) {
    const double v = parse_double(tok, line_no);
    const long n = static_cast<long>(v);
    if (static_cast<double>(n) != v)
        throw error(errc::format_error, "line " + std::to_string(line_no) + ": expected an integer");
    return n;
}

}  // namespace

SampledSurface read_surface_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw error(errc::format_error, "empty input, expected '# a,b,c,d,nx,ny' header");
    if (line.empty() || line[0] != '#')
        throw error(errc::format_error, "first line must be the '# a,b,c,d,nx,ny' header");

    std::string_view header(line);
    header.remove_prefix(1);
    const auto fields = split(header, ',');
    if (fields.size() != 6)
        throw error(errc::format_error, "header must have 6 fields: a,b,c,d,nx,ny");

    Domain domain;
    domain.a = parse_double(fields[0], 1);
    domain.b = parse_double(fields[1], 1);
    domain.c = parse_double(fields[2], 1);
    domain.d = parse_double(fields[3], 1);
    GridSpec grid;
    const long nx = parse_int(fields[4], 1);
    const long ny = parse_int(fields[5], 1);
    if (nx < 2 || ny < 2 || nx > 1000000 || ny > 1000000)
        throw error(errc::format_error, "header grid size out of range");
    grid.nx = static_cast<int>(nx);
    grid.ny = static_cast<int>(ny);
    try {
        domain.validate();
    } catch (const error& e) {
        throw error(errc::format_error, std::string("header: ") + e.what());
    }

    const std::size_t count = static_cast<std::size_t>(grid.nx) * grid.ny;
    std::vector<double> values;
    values.reserve(count);
    int line_no = 1;
    while (values.size() < count) {
        if (!std::getline(in, line))
            throw error(errc::format_error,
                        "expected " + std::to_string(count) + " data rows, got " + std::to_string(values.size()));
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const auto cols = split(line, ',');
        if (cols.size() != 3)
            throw error(errc::format_error, "line " + std::to_string(line_no) + ": expected 'x,y,value'");
        parse_double(cols[0], line_no);
        parse_double(cols[1], line_no);
        values.push_back(parse_double(cols[2], line_no));
    }
    while (std::getline(in, line)) {
        if (!line.empty() && line != "\r")
            throw error(errc::format_error, "trailing data after the declared nx*ny rows");
    }
    try {
        return SampledSurface(domain, grid, std::move(values));
    } catch (const error& e) {
        throw error(errc::format_error, e.what());
    }
}

SampledSurface read_surface_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw error(errc::io_error, "cannot open '" + path + "' for reading");
    return read_surface_csv(in);
}

void write_surface_csv(std::ostream& out, const SampledSurface& s) {
    char buf[160];
    const Domain& dom = s.domain();
    std::snprintf(buf, sizeof buf, "# %.17g,%.17g,%.17g,%.17g,%d,%d\n", dom.a, dom.b, dom.c, dom.d, s.nx(),
                  s.ny());
    out << buf;
    for (int j = 0; j < s.ny(); ++j) {
        const double y = s.y(j);
        for (int i = 0; i < s.nx(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", s.x(i), y, s.at(i, j));
            out << buf;
        }
    }
    if (!out)
        throw error(errc::io_error, "write failed");
}

void write_surface_csv_file(const std::string& path, const SampledSurface& s) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw error(errc::io_error, "cannot open '" + tmp + "' for writing");
        write_surface_csv(out, s);
        out.flush();
        if (!out)
            throw error(errc::io_error, "write to '" + tmp + "' failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw error(errc::io_error, "cannot rename temp file onto '" + path + "'");
    }
}

}  // namespace fracdim
