#include "sgdim/parse.hpp"

#include <algorithm>
#include <cctype>

#include "sgdim/error.hpp"

namespace sgdim {

namespace {

// ======== expression lexer ========

enum class tok { integer, name, plus, minus, star, caret, lparen, rparen, end };

struct Token {
    tok kind = tok::end;
    std::string text;
    int col = 1; // 1-based within the expression
};

[[noreturn]] void parse_fail(int line, int col, const std::string& msg) {
    fail(errc::parse, "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg);
}

std::vector<Token> lex_expression(const std::string& text, int line, int col_base) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        int col = col_base + int(i);
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({tok::integer, text.substr(i, j - i), col});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            out.push_back({tok::name, text.substr(i, j - i), col});
            i = j;
            continue;
        }
        switch (c) {
        case '+': out.push_back({tok::plus, "+", col}); break;
        case '-': out.push_back({tok::minus, "-", col}); break;
        case '*': out.push_back({tok::star, "*", col}); break;
        case '^': out.push_back({tok::caret, "^", col}); break;
        case '(': out.push_back({tok::lparen, "(", col}); break;
        case ')': out.push_back({tok::rparen, ")", col}); break;
        default:
            parse_fail(line, col, std::string("unexpected character '") + c + "'");
        }
        ++i;
    }
    out.push_back({tok::end, "", col_base + int(text.size())});
    return out;
}

// ======== recursive descent ========

class ExprParser {
public:
    ExprParser(std::vector<Token> toks, const std::vector<std::string>& vars,
               const CoefficientField& f, int line)
        : toks_(std::move(toks)), vars_(vars), field_(f), line_(line) {}

    Polynomial run() {
        Polynomial p = expr();
        if (peek().kind != tok::end)
            parse_fail(line_, peek().col,
                       "unexpected '" + peek().text + "'; expected '+', '-', or end of expression");
        return p;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }

    Polynomial expr() {
        bool negate = false;
        if (peek().kind == tok::plus) {
            take();
        } else if (peek().kind == tok::minus) {
            take();
            negate = true;
        }
        Polynomial acc = term();
        if (negate) acc = acc.scaled(-Coeff::one(field_));
        while (peek().kind == tok::plus || peek().kind == tok::minus) {
            bool sub = take().kind == tok::minus;
            Polynomial t = term();
            acc = sub ? acc - t : acc + t;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (peek().kind == tok::star) {
            take();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Token at = peek();
        Polynomial b = base();
        if (peek().kind != tok::caret) return b;
        take();
        if (peek().kind == tok::minus)
            parse_fail(line_, peek().col, "exponent must be a nonnegative integer");
        if (peek().kind != tok::integer)
            parse_fail(line_, peek().col, "expected an integer exponent after '^'");
        Token e = take();
        mpz_class big(e.text);
        if (big > 100000) parse_fail(line_, e.col, "exponent too large");
        unsigned long exp = big.get_ui();
        if (b.terms().size() > 1 && exp > 64)
            parse_fail(line_, e.col, "exponent too large for a parenthesized base");
        // repeated multiplication; exponents are small by the checks above
        Polynomial acc = Polynomial::constant(field_, nvars(), Coeff::one(field_));
        for (unsigned long k = 0; k < exp; ++k) acc = acc * b;
        (void)at;
        return acc;
    }

    Polynomial base() {
        Token t = take();
        switch (t.kind) {
        case tok::integer:
            return Polynomial::constant(field_, nvars(), Coeff::of_integer(field_, mpz_class(t.text)));
        case tok::name: {
            auto it = std::find(vars_.begin(), vars_.end(), t.text);
            if (it == vars_.end())
                parse_fail(line_, t.col, "unknown variable '" + t.text + "'");
            return Polynomial::variable(field_, nvars(), unsigned(it - vars_.begin()));
        }
        case tok::lparen: {
            Polynomial inner = expr();
            if (peek().kind != tok::rparen)
                parse_fail(line_, peek().col, "expected ')'");
            take();
            return inner;
        }
        case tok::end:
            parse_fail(line_, t.col, "unexpected end of expression");
        default:
            parse_fail(line_, t.col, "unexpected '" + t.text + "'");
        }
    }

    unsigned nvars() const { return unsigned(vars_.size()); }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const std::vector<std::string>& vars_;
    CoefficientField field_;
    int line_;
};

} // namespace

Polynomial parse_polynomial_at(const std::string& text,
                               const std::vector<std::string>& vars,
                               const CoefficientField& f, int line_no, int col_base) {
    ExprParser p(lex_expression(text, line_no, col_base), vars, f, line_no);
    return p.run();
}

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& vars,
                            const CoefficientField& f) {
    return parse_polynomial_at(text, vars, f, 1, 1);
}

// ======== document parsing ========

namespace {

std::string strip_comment(const std::string& line) {
    auto h = line.find('#');
    return h == std::string::npos ? line : line.substr(0, h);
}

std::string trim(const std::string& s, std::size_t* lead = nullptr) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    if (lead) *lead = b;
    return s.substr(b, e - b);
}

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t at = s.find(sep, start);
        if (at == std::string::npos) {
            out.push_back(trim(s.substr(start)));
            break;
        }
        out.push_back(trim(s.substr(start, at - start)));
        start = at + 1;
    }
    return out;
}

long parse_long(const std::string& s, int line, const std::string& what) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        }))
        parse_fail(line, 1, what + " must be a nonnegative integer, got '" + s + "'");
    try {
        return std::stol(s);
    } catch (const std::exception&) {
        parse_fail(line, 1, what + " out of range: '" + s + "'");
    }
}

// Accepted spellings: "QQ", "Fp:<prime>", and the short form "F<prime>".
CoefficientField parse_field_name(const std::string& s, int line) {
    if (s == "QQ") return CoefficientField::rationals();
    std::string digits;
    if (s.rfind("Fp:", 0) == 0)
        digits = s.substr(3);
    else if (s.size() >= 2 && s[0] == 'F')
        digits = s.substr(1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        })) {
        try {
            return CoefficientField::prime(std::stoul(digits));
        } catch (const sg_error& e) {
            parse_fail(line, 1, std::string("bad field: ") + e.what());
        } catch (const std::exception&) {
            parse_fail(line, 1, "field characteristic out of range");
        }
    }
    parse_fail(line, 1, "field must be QQ or Fp:<prime>, got '" + s + "'");
}

} // namespace

CoefficientField field_from_name(const std::string& name) {
    return parse_field_name(name, 1);
}

RingPresentation InputDocument::presentation() const {
    RingPresentation P;
    P.field = field;
    P.nvars = unsigned(vars.size());
    P.relations = relations;
    P.complete_intersection = complete_intersection;
    P.declared_dim = declared_dim;
    return P;
}

InputDocument parse_document(const std::string& text,
                             std::optional<CoefficientField> field_override) {
    InputDocument doc;
    bool saw_format = false, saw_field = false, saw_vars = false;
    if (field_override) {
        doc.field = *field_override;
        saw_field = true;
    }

    enum class section { top, relations, options, module, sequence };
    section mode = section::top;

    std::vector<std::string> lines;
    {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t at = text.find('\n', start);
            if (at == std::string::npos) {
                lines.push_back(text.substr(start));
                break;
            }
            lines.push_back(text.substr(start, at - start));
            start = at + 1;
        }
    }

    auto need_vars = [&](int line_no, const char* where) {
        if (!saw_field || !saw_vars)
            parse_fail(line_no, 1,
                       std::string("field and vars must be declared before ") + where);
    };

    for (std::size_t li = 0; li < lines.size(); ++li) {
        int line_no = int(li) + 1;
        std::size_t lead = 0;
        std::string line = trim(strip_comment(lines[li]), &lead);
        if (line.empty()) continue;

        if (!saw_format) {
            if (line != "format: 1")
                parse_fail(line_no, 1, "the first content line must be 'format: 1'");
            saw_format = true;
            continue;
        }

        // section openers
        if (line == "relations:" || line == "options:" || line == "module:" ||
            line == "sequence:") {
            std::string name = line.substr(0, line.size() - 1);
            if (name == "relations") {
                need_vars(line_no, "relations");
                mode = section::relations;
            } else if (name == "options") {
                mode = section::options;
            } else if (name == "module") {
                need_vars(line_no, "module");
                mode = section::module;
            } else {
                need_vars(line_no, "sequence");
                doc.has_sequence = true;
                mode = section::sequence;
            }
            continue;
        }

        if (mode == section::top || mode == section::options) {
            auto colon = line.find(':');
            if (colon == std::string::npos)
                parse_fail(line_no, 1, "expected 'key: value' or a section header");
            std::string key = trim(line.substr(0, colon));
            std::string value = trim(line.substr(colon + 1));
            if (mode == section::top) {
                if (key == "field") {
                    if (!field_override) doc.field = parse_field_name(value, line_no);
                    saw_field = true;
                } else if (key == "vars") {
                    auto names = split_list(value, ',');
                    if (names.size() == 1 && names[0].find(' ') != std::string::npos)
                        names = split_list(names[0], ' ');
                    for (const auto& nm : names) {
                        if (nm.empty()) continue;
                        if (!is_identifier(nm))
                            parse_fail(line_no, 1, "bad variable name '" + nm + "'");
                        if (std::find(doc.vars.begin(), doc.vars.end(), nm) != doc.vars.end())
                            parse_fail(line_no, 1, "duplicate variable name '" + nm + "'");
                        doc.vars.push_back(nm);
                    }
                    if (doc.vars.empty()) parse_fail(line_no, 1, "vars list is empty");
                    saw_vars = true;
                } else if (key == "format") {
                    parse_fail(line_no, 1, "duplicate format line");
                } else {
                    parse_fail(line_no, 1, "unknown top-level key '" + key + "'");
                }
            } else {
                if (key == "complete_intersection") {
                    if (value == "true")
                        doc.complete_intersection = true;
                    else if (value == "false")
                        doc.complete_intersection = false;
                    else
                        parse_fail(line_no, 1, "complete_intersection must be true or false");
                } else if (key == "declared_dim") {
                    doc.declared_dim = int(parse_long(value, line_no, "declared_dim"));
                } else if (key == "seed") {
                    if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) {
                            return std::isdigit(static_cast<unsigned char>(c));
                        }))
                        parse_fail(line_no, 1, "seed must be a nonnegative integer");
                    try {
                        doc.seed = std::stoull(value);
                    } catch (const std::exception&) {
                        parse_fail(line_no, 1, "seed out of range");
                    }
                } else if (key == "schedule") {
                    Schedule sched;
                    for (const auto& part : split_list(value, ',')) {
                        long v = parse_long(part, line_no, "schedule entry");
                        if (v < 2) parse_fail(line_no, 1, "schedule entries must be at least 2");
                        if (!sched.empty() && v <= sched.back())
                            parse_fail(line_no, 1, "schedule must be strictly increasing");
                        sched.push_back(int(v));
                    }
                    if (sched.empty()) parse_fail(line_no, 1, "schedule is empty");
                    doc.schedule = sched;
                } else if (key == "n_max") {
                    long v = parse_long(value, line_no, "n_max");
                    if (v < 1) parse_fail(line_no, 1, "n_max must be positive");
                    doc.n_max = int(v);
                } else {
                    parse_fail(line_no, 1, "unknown option '" + key + "'");
                }
            }
            continue;
        }

        if (mode == section::relations) {
            doc.relations.push_back(
                parse_polynomial_at(line, doc.vars, doc.field, line_no, int(lead) + 1));
            continue;
        }
        if (mode == section::sequence) {
            doc.sequence.push_back(
                parse_polynomial_at(line, doc.vars, doc.field, line_no, int(lead) + 1));
            continue;
        }
        if (mode == section::module) {
            std::vector<Polynomial> row;
            std::size_t start = 0, col = lead + 1;
            while (start <= line.size()) {
                std::size_t at = line.find(',', start);
                std::string piece =
                    at == std::string::npos ? line.substr(start) : line.substr(start, at - start);
                row.push_back(
                    parse_polynomial_at(piece, doc.vars, doc.field, line_no, int(col)));
                if (at == std::string::npos) break;
                col = lead + at + 2;
                start = at + 1;
            }
            if (!doc.module_rows.empty() && doc.module_rows.front().size() != row.size())
                parse_fail(line_no, 1, "module rows must all have the same length");
            doc.module_rows.push_back(std::move(row));
            continue;
        }
    }

    if (!saw_format) fail(errc::parse, "line 1, col 1: empty document; expected 'format: 1'");
    if (!saw_field) fail(errc::parse, "document never declares its field");
    if (!saw_vars) fail(errc::parse, "document never declares its vars");
    return doc;
}

} // namespace sgdim
