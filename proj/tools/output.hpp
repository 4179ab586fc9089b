#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bhc::cli {

enum class Format { Table, Csv, Json };

struct OutputSpec {
    Format format = Format::Table;
    int precision = 6; // significant digits, 1..17
    std::string out_path; // empty writes to stdout
};

// Typed cells let JSON keep numbers as numbers while table and CSV render
// the same strings byte for byte on every run.
struct Cell {
    enum class Kind { Null, Int, Num, Big, Str, Bool };
    Kind kind = Kind::Null;
    std::int64_t int_value = 0;
    double num_value = 0.0;
    double ln_value = 0.0;
    std::string str_value;
    bool bool_value = false;
    int fixed_decimals = -1; // Num only; -1 uses the selected precision

    static Cell null();
    static Cell integer(std::int64_t v);
    static Cell number(double v);
    static Cell number_fixed(double v, int decimals);
    static Cell big(double ln); // rendered from ln(v) when v overflows double
    static Cell str(std::string v);
    static Cell boolean(bool v);
};

// plain number while e^ln is representable, Big above
Cell value_cell(double ln);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string format_double(double v, int precision);
// nearest double to the printed form; keeps emitted JSON byte-stable under
// parse plus re-serialize
double snap(double v, int precision);
// decimal scientific form of e^ln for magnitudes beyond double range
std::string format_from_ln(double ln, int precision);
// plain decimal or "p/q"
bool parse_number(const std::string& text, double& out);

// renders in the selected format; false when out_path cannot be written
bool emit(const Table& table, const OutputSpec& output);

} // namespace bhc::cli
