#include "wsteen/expr.hpp"

#include <cctype>

namespace wsteen {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
};

AElement parse_atom(const Algebra& alg, Lexer& lx) {
    lx.skip_ws();
    std::size_t start = lx.i;
    char c = lx.peek();
    if (c == '0') {
        ++lx.i;
        return alg.zero();
    }
    if (c == '1') {
        ++lx.i;
        return alg.one();
    }
    if (!std::isalpha(static_cast<unsigned char>(c)))
        throw ParseError("expected atom", static_cast<int>(start), std::string(1, c));
    std::string ident;
    while (lx.i < lx.s.size() &&
           (std::isalnum(static_cast<unsigned char>(lx.s[lx.i])) || lx.s[lx.i] == '_'))
        ident += lx.s[lx.i++];
    if (ident == "tau") return alg.tau_left();
    if (ident == "rho") return alg.rho();
    if (ident == "xb1t") return alg.right_scale(alg.xibar_i(1), CoefMono{alg.preset().one_mono(), 1});
    auto parse_index = [&](const std::string& body) -> int {
        try {
            std::size_t used = 0;
            int v = std::stoi(body, &used);
            if (used != body.size()) return -1;
            return v;
        } catch (...) {
            return -1;
        }
    };
    if (ident.size() > 1 && ident[0] == 't' && std::isdigit(static_cast<unsigned char>(ident[1]))) {
        int idx = parse_index(ident.substr(1));
        if (idx >= 0) return alg.tau_i(idx);
    }
    if (ident.size() > 2 && ident[0] == 'x' && ident[1] == 'b' &&
        std::isdigit(static_cast<unsigned char>(ident[2]))) {
        int idx = parse_index(ident.substr(2));
        if (idx >= 1) return alg.xibar_i(idx);
    }
    if (ident.size() > 1 && ident[0] == 'x' && std::isdigit(static_cast<unsigned char>(ident[1]))) {
        int idx = parse_index(ident.substr(1));
        if (idx >= 1) return alg.xi_i(idx);
    }
    if (alg.preset().mono_by_name(ident) || ident == "u") {
        AElement e = alg.km_class(ident);
        if (ident == "u" && !alg.preset().mono_by_name("u"))
            throw ParseError("class 'u' not present in this preset", static_cast<int>(start), ident);
        return e;
    }
    throw ParseError("unknown token", static_cast<int>(start), ident);
}

AElement parse_factor(const Algebra& alg, Lexer& lx) {
    AElement base = parse_atom(alg, lx);
    if (lx.peek() == '^') {
        ++lx.i;
        lx.skip_ws();
        std::size_t start = lx.i;
        std::string num;
        while (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i])))
            num += lx.s[lx.i++];
        if (num.empty())
            throw ParseError("expected exponent", static_cast<int>(start),
                             std::string(1, start < lx.s.size() ? lx.s[start] : '\0'));
        base = alg.pow(base, std::stoi(num));
    }
    return base;
}

AElement parse_term(const Algebra& alg, Lexer& lx) {
    AElement prod = parse_factor(alg, lx);
    while (lx.peek() == '*') {
        ++lx.i;
        prod = alg.mul(prod, parse_factor(alg, lx));
    }
    return prod;
}

}  // namespace

AElement parse_expr(const Algebra& alg, const std::string& text) {
    Lexer lx{text};
    AElement sum = parse_term(alg, lx);
    while (lx.peek() == '+') {
        ++lx.i;
        sum = alg.add(sum, parse_term(alg, lx));
    }
    if (!lx.eof())
        throw ParseError("trailing input", static_cast<int>(lx.i), std::string(1, lx.s[lx.i]));
    return sum;
}

}  // namespace wsteen
