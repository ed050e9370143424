#ifndef QKGR_CLASSPARSE_HPP
#define QKGR_CLASSPARSE_HPP

#include <string>

#include "qkgr/laurent.hpp"

namespace qkgr {

struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Minimal expression grammar for K-classes: integer literals, + - * ^ with
// integer exponents, parentheses, and the variables P1..Pn.
LaurentPoly parse_class_expr(const std::string& text, int n);

}  // namespace qkgr

#endif
