#include "fringelab/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fringelab {

namespace {

[[noreturn]] void fail_line(int line_no, const std::string& msg) {
    std::ostringstream os;
    os << "csv line " << line_no << ": " << msg;
    throw std::invalid_argument(os.str());
}

std::string trim(const std::string& s) {
    std::size_t lo = 0, hi = s.size();
    while (lo < hi && (s[lo] == ' ' || s[lo] == '\t' || s[lo] == '\r')) ++lo;
    while (hi > lo && (s[hi - 1] == ' ' || s[hi - 1] == '\t' || s[hi - 1] == '\r')) --hi;
    return s.substr(lo, hi - lo);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(trim(cur));
    return out;
}

double parse_double(const std::string& field, int line_no) {
    const char* begin = field.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        fail_line(line_no, "malformed number '" + field + "'");
    }
    return value;
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Fixed boilerplate comment the writer always emits; the reader skips it
// when recovering the tag so write -> read -> write is byte-stable.
constexpr const char* kUnitsComment =
    "positions in micrometers, intensities in relative units";

struct ParsedTable {
    std::vector<double> x;      // meters (file carries micrometers)
    std::vector<double> value;
    std::vector<double> err;
    std::string tag;
    bool has_err = false;
};

ParsedTable parse_table(const std::string& text) {
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    ParsedTable table;
    std::size_t n_cols = 0;

    while (std::getline(stream, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            std::string comment = trim(t.substr(1));
            if (!header_seen && table.tag.empty() && comment != kUnitsComment) {
                table.tag = std::move(comment);
            }
            continue;
        }

        const std::vector<std::string> fields = split_fields(t);
        if (!header_seen) {
            if (fields.size() < 2 || fields.size() > 3) {
                fail_line(line_no, "expected header x_um,counts[,err]");
            }
            if (fields[0] != "x_um") {
                fail_line(line_no, "first column must be x_um");
            }
            if (fields[1] != "counts" && fields[1] != "intensity") {
                fail_line(line_no, "second column must be counts or intensity");
            }
            if (fields.size() == 3) {
                if (fields[2] != "err") fail_line(line_no, "third column must be err");
                table.has_err = true;
            }
            n_cols = fields.size();
            header_seen = true;
            continue;
        }

        if (fields.size() != n_cols) {
            fail_line(line_no, "ragged row: expected " + std::to_string(n_cols) +
                                   " fields, got " + std::to_string(fields.size()));
        }
        const double x_m = parse_double(fields[0], line_no) * 1e-6;
        const double val = parse_double(fields[1], line_no);
        if (!table.x.empty() && !(x_m > table.x.back())) {
            fail_line(line_no, "positions must be strictly increasing");
        }
        if (val < 0.0) fail_line(line_no, "negative value");
        table.x.push_back(x_m);
        table.value.push_back(val);
        if (table.has_err) {
            const double e = parse_double(fields[2], line_no);
            if (e < 0.0) fail_line(line_no, "negative error");
            table.err.push_back(e);
        }
    }
    if (!header_seen) throw std::invalid_argument("csv: missing header row");
    if (table.x.empty()) throw std::invalid_argument("csv: no data rows");
    return table;
}

} // namespace

ScanDataset read_scan_csv(const std::string& text) {
    ParsedTable table = parse_table(text);
    ScanDataset data;
    data.x = std::move(table.x);
    data.counts = std::move(table.value);
    data.err = std::move(table.err);
    validate(data);
    return data;
}

std::string write_profile_csv(const IntensityProfile& p) {
    validate(p);
    std::ostringstream os;
    if (!p.tag.empty()) os << "# " << p.tag << "\n";
    os << "# " << kUnitsComment << "\n";
    os << "x_um,intensity\n";
    for (std::size_t i = 0; i < p.x.size(); ++i) {
        os << format_number(p.x[i] * 1e6) << ',' << format_number(p.value[i]) << '\n';
    }
    return os.str();
}

IntensityProfile read_profile_csv(const std::string& text) {
    ParsedTable table = parse_table(text);
    IntensityProfile p;
    p.x = std::move(table.x);
    p.value = std::move(table.value);
    p.tag = std::move(table.tag);
    validate(p);
    return p;
}

} // namespace fringelab
