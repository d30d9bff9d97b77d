#pragma once

#include <stdexcept>
#include <string>

namespace talforge {

/* Base class for everything this library throws on bad input.  Enumeration
   cutoffs are not errors (they surface as truncation flags). */
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/* A system value violates its invariants (undeclared symbol, duplicate
   label, two distinguished symbols, ...). */
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/* An operation requiring normal-form input was handed something else, or a
   normalizer met a rule it cannot soundly rewrite. */
struct NormalFormError : Error {
    explicit NormalFormError(const std::string& msg) : Error(msg) {}
};

/* Text format syntax error with position information. */
struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int col_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ", column " + std::to_string(col_) + ": " + msg),
          line(line_), column(col_) {}
};

}  // namespace talforge
