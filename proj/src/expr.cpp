#include "ga/expr.hpp"

#include <cctype>
#include <cstdint>
#include <optional>
#include <vector>

namespace ga {

namespace {

enum class Tok {
    Number,
    Blade,
    Func,
    Plus,
    Minus,
    Star,
    Caret,
    LContract, // <|
    RContract, // |>
    Dot,
    LParen,
    RParen,
    Comma,
    End,
};

enum class Func { Rev, Gi, Grade, Even, Odd };

struct Token {
    Tok kind = Tok::End;
    std::size_t column = 0; // 1-based
    Rational number;
    IndexSet blade;
    bool blade_negated = false;
    Func func = Func::Rev;
};

constexpr std::uint32_t kMaxIndex = 2147483647;

class Lexer {
public:
    explicit Lexer(std::string_view input) : input_(input) {}

    Token next() {
        skip_spaces();
        std::size_t col = pos_ + 1;
        if (pos_ >= input_.size()) return {Tok::End, col};
        char c = input_[pos_];
        switch (c) {
            case '+': ++pos_; return {Tok::Plus, col};
            case '-': ++pos_; return {Tok::Minus, col};
            case '*': ++pos_; return {Tok::Star, col};
            case '^': ++pos_; return {Tok::Caret, col};
            case '.': ++pos_; return {Tok::Dot, col};
            case '(': ++pos_; return {Tok::LParen, col};
            case ')': ++pos_; return {Tok::RParen, col};
            case ',': ++pos_; return {Tok::Comma, col};
            case '<':
                if (pos_ + 1 < input_.size() && input_[pos_ + 1] == '|') {
                    pos_ += 2;
                    return {Tok::LContract, col};
                }
                throw ParseError(col, "expected '<|'");
            case '|':
                if (pos_ + 1 < input_.size() && input_[pos_ + 1] == '>') {
                    pos_ += 2;
                    return {Tok::RContract, col};
                }
                throw ParseError(col, "expected '|>'");
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return lex_number(col);
        if (c == 'e' && pos_ + 1 < input_.size() &&
            (std::isdigit(static_cast<unsigned char>(input_[pos_ + 1])) ||
             input_[pos_ + 1] == '['))
            return lex_blade(col);
        if (std::isalpha(static_cast<unsigned char>(c))) return lex_identifier(col);
        throw ParseError(col, std::string("unexpected character '") + c + "'");
    }

private:
    std::string_view input_;
    std::size_t pos_ = 0;

    void skip_spaces() {
        while (pos_ < input_.size() &&
               std::isspace(static_cast<unsigned char>(input_[pos_])))
            ++pos_;
    }

    bool digit_at(std::size_t i) const {
        return i < input_.size() && std::isdigit(static_cast<unsigned char>(input_[i]));
    }

    Integer scan_integer() {
        Integer value = 0;
        while (digit_at(pos_)) {
            value = value * 10 + (input_[pos_] - '0');
            ++pos_;
        }
        return value;
    }

    std::uint32_t scan_index(std::size_t col) {
        if (!digit_at(pos_)) throw ParseError(pos_ + 1, "expected an index");
        Integer value = scan_integer();
        if (value == 0) throw ParseError(col, "index 0 is not allowed; indices start at 1");
        if (value > kMaxIndex) throw ParseError(col, "index too large");
        return value.convert_to<std::uint32_t>();
    }

    Token lex_number(std::size_t col) {
        Integer int_part = scan_integer();
        Rational value(int_part);

        if (pos_ < input_.size() && input_[pos_] == '/' && digit_at(pos_ + 1)) {
            ++pos_;
            std::size_t den_col = pos_ + 1;
            Integer den = scan_integer();
            if (den == 0) throw ParseError(den_col, "zero denominator");
            return {Tok::Number, col, Rational(int_part, den)};
        }

        if (pos_ < input_.size() && input_[pos_] == '.' && digit_at(pos_ + 1)) {
            ++pos_;
            std::size_t frac_start = pos_;
            Integer frac = scan_integer();
            Integer scale = 1;
            for (std::size_t i = frac_start; i < pos_; ++i) scale *= 10;
            value += Rational(frac, scale);
        }
        if (pos_ < input_.size() && (input_[pos_] == 'e' || input_[pos_] == 'E')) {
            std::size_t after = pos_ + 1;
            bool neg = false;
            if (after < input_.size() && (input_[after] == '+' || input_[after] == '-')) {
                neg = input_[after] == '-';
                ++after;
            }
            if (digit_at(after)) {
                pos_ = after;
                std::size_t exp_col = pos_ + 1;
                Integer exp = scan_integer();
                if (exp > 4096) throw ParseError(exp_col, "exponent too large");
                Integer pow = 1;
                for (Integer i = 0; i < exp; ++i) pow *= 10;
                if (neg)
                    value /= Rational(pow);
                else
                    value *= Rational(pow);
            }
        }
        return {Tok::Number, col, value};
    }

    Token lex_blade(std::size_t col) {
        ++pos_; // 'e'
        std::vector<std::uint32_t> indices;
        if (input_[pos_] == '[') {
            ++pos_;
            skip_spaces();
            if (pos_ < input_.size() && input_[pos_] == ']') {
                throw ParseError(pos_ + 1, "blade needs at least one index");
            }
            for (;;) {
                skip_spaces();
                indices.push_back(scan_index(pos_ + 1));
                skip_spaces();
                if (pos_ >= input_.size())
                    throw ParseError(pos_ + 1, "unterminated blade literal");
                if (input_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                if (input_[pos_] == ']') {
                    ++pos_;
                    break;
                }
                throw ParseError(pos_ + 1, "expected ',' or ']' in blade literal");
            }
        } else {
            // digit shorthand: single-digit indices only
            while (digit_at(pos_)) {
                char d = input_[pos_];
                if (d == '0')
                    throw ParseError(pos_ + 1, "index 0 is not allowed; indices start at 1");
                indices.push_back(static_cast<std::uint32_t>(d - '0'));
                ++pos_;
            }
        }
        try {
            auto [set, odd] = normalize_indices(std::move(indices));
            Token tok{Tok::Blade, col};
            tok.blade = std::move(set);
            tok.blade_negated = odd;
            return tok;
        } catch (const Error& e) {
            throw ParseError(col, e.what());
        }
    }

    Token lex_identifier(std::size_t col) {
        std::size_t start = pos_;
        while (pos_ < input_.size() &&
               (std::isalnum(static_cast<unsigned char>(input_[pos_])) ||
                input_[pos_] == '_'))
            ++pos_;
        std::string_view name = input_.substr(start, pos_ - start);
        Token tok{Tok::Func, col};
        if (name == "rev")
            tok.func = Func::Rev;
        else if (name == "gi")
            tok.func = Func::Gi;
        else if (name == "grade")
            tok.func = Func::Grade;
        else if (name == "even")
            tok.func = Func::Even;
        else if (name == "odd")
            tok.func = Func::Odd;
        else
            throw ParseError(col, "unknown function '" + std::string(name) + "'");
        return tok;
    }
};

class Parser {
public:
    explicit Parser(std::string_view input) : lexer_(input) { advance(); }

    ExprPtr run() {
        ExprPtr e = parse_expr();
        if (current_.kind != Tok::End)
            throw ParseError(current_.column, "unexpected trailing input");
        return e;
    }

private:
    Lexer lexer_;
    Token current_;

    void advance() { current_ = lexer_.next(); }

    void expect(Tok kind, const char* what) {
        if (current_.kind != kind) throw ParseError(current_.column, what);
        advance();
    }

    static ExprPtr make(ExprNode&& node) {
        return std::make_unique<ExprNode>(std::move(node));
    }

    ExprPtr parse_expr() {
        ExprPtr left = parse_term();
        while (current_.kind == Tok::Plus || current_.kind == Tok::Minus) {
            BinaryOp op = current_.kind == Tok::Plus ? BinaryOp::Add : BinaryOp::Subtract;
            advance();
            ExprPtr right = parse_term();
            left = make({ExprNode::Binary{op, std::move(left), std::move(right)}});
        }
        return left;
    }

    // All product operators sit at one flat left-associative level.
    ExprPtr parse_term() {
        ExprPtr left = parse_unary();
        for (;;) {
            std::optional<BinaryOp> op;
            switch (current_.kind) {
                case Tok::Star: op = BinaryOp::Geometric; break;
                case Tok::Caret: op = BinaryOp::Outer; break;
                case Tok::LContract: op = BinaryOp::LeftContract; break;
                case Tok::RContract: op = BinaryOp::RightContract; break;
                case Tok::Dot: op = BinaryOp::Scalar; break;
                default: break;
            }
            if (!op) return left;
            advance();
            ExprPtr right = parse_unary();
            left = make({ExprNode::Binary{*op, std::move(left), std::move(right)}});
        }
    }

    ExprPtr parse_unary() {
        if (current_.kind == Tok::Minus) {
            advance();
            return make({ExprNode::Unary{UnaryOp::Negate, parse_unary()}});
        }
        return parse_atom();
    }

    long parse_grade_literal() {
        bool neg = false;
        if (current_.kind == Tok::Minus) {
            neg = true;
            advance();
        }
        if (current_.kind != Tok::Number || denominator(current_.number) != 1)
            throw ParseError(current_.column, "grade must be an integer literal");
        Integer num = numerator(current_.number);
        if (num > 1000000) throw ParseError(current_.column, "grade out of range");
        long value = num.convert_to<long>();
        advance();
        return neg ? -value : value;
    }

    ExprPtr parse_atom() {
        switch (current_.kind) {
            case Tok::Number: {
                Rational value = current_.number;
                advance();
                return make({ExprNode::Number{std::move(value)}});
            }
            case Tok::Blade: {
                ExprPtr node = make({ExprNode::Blade{current_.blade}});
                bool negated = current_.blade_negated;
                advance();
                if (negated)
                    node = make({ExprNode::Unary{UnaryOp::Negate, std::move(node)}});
                return node;
            }
            case Tok::Func: {
                Func func = current_.func;
                std::size_t func_col = current_.column;
                advance();
                expect(Tok::LParen, "expected '(' after function name");
                ExprPtr arg = parse_expr();
                if (func == Func::Grade) {
                    expect(Tok::Comma, "'grade' needs an integer grade argument");
                    long r = parse_grade_literal();
                    expect(Tok::RParen, "expected ')'");
                    return make({ExprNode::GradeProject{std::move(arg), r}});
                }
                if (current_.kind == Tok::Comma)
                    throw ParseError(func_col, "only 'grade' takes an integer argument");
                expect(Tok::RParen, "expected ')'");
                UnaryOp op = UnaryOp::Reversion;
                switch (func) {
                    case Func::Rev: op = UnaryOp::Reversion; break;
                    case Func::Gi: op = UnaryOp::GradeInvolution; break;
                    case Func::Even: op = UnaryOp::Even; break;
                    case Func::Odd: op = UnaryOp::Odd; break;
                    case Func::Grade: break;
                }
                return make({ExprNode::Unary{op, std::move(arg)}});
            }
            case Tok::LParen: {
                advance();
                ExprPtr e = parse_expr();
                expect(Tok::RParen, "expected ')'");
                return e;
            }
            default:
                throw ParseError(current_.column, "expected a number, blade, or '('");
        }
    }
};

} // namespace

ExprPtr parse(std::string_view input) {
    return Parser(input).run();
}

} // namespace ga
