#include "loops/table_io.hpp"

#include <fstream>
#include <sstream>

namespace loops {

namespace {

std::string next_data_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return line;
    }
    return {};
}

}  // namespace

CayleyTable read_table(std::istream& in, const std::string& name, bool relabel) {
    std::string head = next_data_line(in);
    if (head.empty()) throw IoError(name + ": missing order line");
    long n = 0;
    {
        std::istringstream is(head);
        if (!(is >> n) || n < 1 || n > kMaxOrder)
            throw IoError(name + ": bad order line '" + head + "'");
        long extra;
        if (is >> extra) throw IoError(name + ": order line has trailing tokens");
    }
    std::vector<Elem> mul;
    mul.reserve((std::size_t)n * n);
    for (long i = 0; i < n; ++i) {
        std::string line = next_data_line(in);
        if (line.empty())
            throw IoError(name + ": expected " + std::to_string(n) + " rows, got " +
                          std::to_string(i));
        std::istringstream is(line);
        long v;
        long count = 0;
        while (is >> v) {
            if (v < 0 || v >= n)
                throw IoError(name + ": row " + std::to_string(i) + " entry " +
                              std::to_string(v) + " out of range");
            mul.push_back((Elem)v);
            ++count;
        }
        if (count != n)
            throw IoError(name + ": row " + std::to_string(i) + " has " + std::to_string(count) +
                          " entries, expected " + std::to_string(n));
    }
    return CayleyTable::validate_flat(std::move(mul), (int)n, name, relabel);
}

CayleyTable read_table_file(const std::string& path, bool relabel) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return read_table(in, path, relabel);
}

void write_table(std::ostream& out, const CayleyTable& t,
                 const std::vector<std::string>& comments) {
    if (!t.label().empty()) out << "# " << t.label() << "\n";
    for (const auto& c : comments) out << "# " << c << "\n";
    const int n = t.order();
    out << n << "\n";
    for (int i = 0; i < n; ++i) {
        const Elem* row = t.mul_row((Elem)i);
        for (int j = 0; j < n; ++j) {
            if (j) out << ' ';
            out << row[j];
        }
        out << "\n";
    }
}

void write_table_file(const std::string& path, const CayleyTable& t,
                      const std::vector<std::string>& comments) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_table(out, t, comments);
    if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace loops
