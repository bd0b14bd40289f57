#pragma once

#include <stdexcept>
#include <string>

#include "wsteen/milnor.hpp"

namespace wsteen {

struct ParseError : std::runtime_error {
    int position;
    std::string token;
    ParseError(std::string msg, int pos, std::string tok)
        : std::runtime_error(std::move(msg)), position(pos), token(std::move(tok)) {}
};

/* Grammar: expr := term ('+' term)*; term := factor ('*' factor)*;
 * factor := atom ('^' NUMBER)?; atom := '0' | '1' | IDENT.
 * Idents: tau, rho, u, t<i>, x<i>, xb<i>, xb1t (= xibar_1·tau), or a
 * custom preset class name.  Whitespace-insensitive. */
AElement parse_expr(const Algebra& alg, const std::string& text);

}  // namespace wsteen
