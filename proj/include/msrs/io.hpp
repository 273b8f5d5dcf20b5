#pragma once

#include "msrs/hardness.hpp"
#include "msrs/instance.hpp"
#include "msrs/multires.hpp"

#include <stdexcept>
#include <string>

namespace msrs {

// Malformed input file. line/column are 1-based and 0 when the problem is not tied to a
// position in the text (then `where` holds a JSON path such as classes[2][0]).
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int column, std::string where = "");
    int line = 0;
    int column = 0;
    std::string where;
};

// {"machines": m, "classes": [[p, ...], ...]}
Instance parse_instance(const std::string& text, bool allow_zero = false);
std::string write_instance(const Instance& inst);

// {"schedule": [{"job", "machine", "start_num", "start_den", "start"}, ...]}; start is for humans only
Schedule parse_schedule(const std::string& text);
std::string write_schedule(const Schedule& s);

// {"vars": n, "clauses": [[1, 2, 3], [-1, -2, -3], ...]}
Formula322 parse_formula(const std::string& text);
std::string write_formula(const Formula322& f);

// {"machines": m, "jobs": [{"id", "p", "resources": [name, ...], "name"}, ...]}
MultiResourceInstance parse_multires(const std::string& text);
std::string write_multires(const MultiResourceInstance& inst);

// true when the document has a "jobs" array (multi-resource format)
bool is_multires_text(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace msrs
