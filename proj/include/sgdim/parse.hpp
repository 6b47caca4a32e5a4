#ifndef SGDIM_PARSE_HPP
#define SGDIM_PARSE_HPP

// Text input: a small polynomial expression grammar over declared variables,
// and the line-oriented presentation document wrapping it.
//
// Expression grammar (explicit '*', no juxtaposition, '^' with a nonnegative
// integer exponent):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' INT)?
//   base   := INT | NAME | '(' expr ')'
//
// Document format: '#' starts a comment, blank lines are skipped. The first
// content line must be `format: 1`, then `field:` and `vars:`, then any of
// the sections `relations:`, `options:`, `module:`, `sequence:`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgdim/invariants.hpp"
#include "sgdim/poly.hpp"
#include "sgdim/trunc.hpp"

namespace sgdim {

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& vars,
                            const CoefficientField& f);

// "QQ" or "F<p>" for a prime p.
CoefficientField field_from_name(const std::string& name);

// Same, reporting errors at the given line with columns shifted by col_base.
Polynomial parse_polynomial_at(const std::string& text,
                               const std::vector<std::string>& vars,
                               const CoefficientField& f, int line_no, int col_base);

struct InputDocument {
    int format = 1;
    CoefficientField field = CoefficientField::rationals();
    std::vector<std::string> vars;
    std::vector<Polynomial> relations;
    bool complete_intersection = false;
    std::optional<int> declared_dim;
    std::optional<Schedule> schedule;
    std::optional<std::uint64_t> seed;
    std::optional<int> n_max;
    std::vector<std::vector<Polynomial>> module_rows;
    bool has_sequence = false; // a present-but-empty section means the empty sequence
    std::vector<Polynomial> sequence;

    RingPresentation presentation() const;
};

InputDocument parse_document(const std::string& text,
                             std::optional<CoefficientField> field_override = std::nullopt);

} // namespace sgdim

#endif
