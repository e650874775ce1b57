#ifndef ISODER_PARSE_HPP
#define ISODER_PARSE_HPP

#include "isoder/automorphism.hpp"
#include "isoder/bpoly.hpp"
#include "isoder/rational.hpp"
#include "isoder/upoly.hpp"

#include <stdexcept>
#include <string>

namespace isoder {

/// Syntax error with 1-based position information and a note on what was
/// expected at the point of failure.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

/// Options for the polynomial grammar. The exponent cap bounds every parsed
/// power so a stray "x^100000" cannot blow up downstream arithmetic.
struct ParseOptions {
    int max_degree = 64;
};

/// Grammar (ASCII):
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' nat)?
///   atom   := rational | 'x' | 'y' | '(' expr ')'
/// Rational literals are "n" or "n/d" with no interior spaces. Implicit
/// multiplication ("2x") is rejected: every product needs an explicit '*'.
BPoly parse_poly(const std::string& text, const ParseOptions& opts = {});

/// Same grammar restricted to one variable; the other is rejected.
UPoly parse_upoly_x(const std::string& text, const ParseOptions& opts = {});
UPoly parse_upoly_y(const std::string& text, const ParseOptions& opts = {});

/// A lone rational literal with optional sign.
Rat parse_rational(const std::string& text);

/// Automorphism words: whitespace-separated letters, leftmost outermost,
///   affine(m11,m12,m21,m22; v1,v2)   elemY(p; beta)   elemX(q; alpha)
/// with p a polynomial in x, q a polynomial in y, and the scalars rational
/// literals. "id" denotes the empty word.
Automorphism parse_automorphism(const std::string& text, const ParseOptions& opts = {});

/// Canonical printed forms, accepted back by the parsers above.
std::string print_poly(const BPoly& f);
std::string print_upoly(const UPoly& f, const std::string& var = "x");

} // namespace isoder

#endif
