#include <cctype>
#include <charconv>

#include "fuzzyrel/error.hpp"
#include "fuzzyrel/expr.hpp"

namespace fuzzyrel {

std::string_view to_string(TokenKind kind) noexcept {
    switch (kind) {
        case TokenKind::SetVar: return "set variable";
        case TokenKind::DegreeVar: return "degree variable";
        case TokenKind::Number: return "number";
        case TokenKind::Universal: return "'X'";
        case TokenKind::Empty: return "'O'";
        case TokenKind::Union: return "'|'";
        case TokenKind::Intersection: return "'&'";
        case TokenKind::AlgSum: return "'.+'";
        case TokenKind::AlgProd: return "'.*'";
        case TokenKind::BoundedSum: return "'[+]'";
        case TokenKind::BoundedProd: return "'[*]'";
        case TokenKind::BoundedDiff: return "'[-]'";
        case TokenKind::BoundedQuot: return "'[/]'";
        case TokenKind::Caret: return "'^'";
        case TokenKind::Star: return "'*'";
        case TokenKind::Slash: return "'/'";
        case TokenKind::Plus: return "'+'";
        case TokenKind::Minus: return "'-'";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::Comma: return "','";
        case TokenKind::Le: return "'<='";
        case TokenKind::Ge: return "'>='";
        case TokenKind::EqEq: return "'=='";
        case TokenKind::Lt: return "'<'";
        case TokenKind::Gt: return "'>'";
        case TokenKind::Eq: return "'='";
        case TokenKind::KwGiven: return "'given'";
        case TokenKind::KwEqualityIff: return "'equality_iff'";
        case TokenKind::KwAnd: return "'and'";
        case TokenKind::KwOr: return "'or'";
        case TokenKind::End: return "end of input";
    }
    return "?";
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_word_char(char c) { return is_alpha(c) || is_digit(c) || c == '_'; }

class Lexer {
public:
    explicit Lexer(std::string_view input) : in_(input) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            if (pos_ >= in_.size()) break;
            out.push_back(next());
        }
        out.push_back(Token{TokenKind::End, "", in_.size()});
        return out;
    }

private:
    void skip_space() {
        while (pos_ < in_.size() && (in_[pos_] == ' ' || in_[pos_] == '\t' || in_[pos_] == '\n' ||
                                     in_[pos_] == '\r'))
            ++pos_;
    }

    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < in_.size() ? in_[pos_ + ahead] : '\0';
    }

    Token make(TokenKind kind, std::size_t len) {
        Token t{kind, std::string(in_.substr(pos_, len)), pos_};
        pos_ += len;
        return t;
    }

    [[noreturn]] void fail(std::size_t len) const {
        throw LexError(pos_, std::string(in_.substr(pos_, len)));
    }

    Token next() {
        const char c = peek();
        if (is_digit(c)) return number();
        if (is_alpha(c) || c == '_') return word();
        switch (c) {
            case '|': return make(TokenKind::Union, 1);
            case '&': return make(TokenKind::Intersection, 1);
            case '^': return make(TokenKind::Caret, 1);
            case '*': return make(TokenKind::Star, 1);
            case '/': return make(TokenKind::Slash, 1);
            case '+': return make(TokenKind::Plus, 1);
            case '-': return make(TokenKind::Minus, 1);
            case '(': return make(TokenKind::LParen, 1);
            case ')': return make(TokenKind::RParen, 1);
            case ',': return make(TokenKind::Comma, 1);
            case '.':
                if (peek(1) == '+') return make(TokenKind::AlgSum, 2);
                if (peek(1) == '*') return make(TokenKind::AlgProd, 2);
                fail(peek(1) ? 2 : 1);
            case '[':
                if (peek(2) == ']') {
                    switch (peek(1)) {
                        case '+': return make(TokenKind::BoundedSum, 3);
                        case '*': return make(TokenKind::BoundedProd, 3);
                        case '-': return make(TokenKind::BoundedDiff, 3);
                        case '/': return make(TokenKind::BoundedQuot, 3);
                        default: break;
                    }
                }
                fail(std::min<std::size_t>(3, in_.size() - pos_));
            case '<':
                return peek(1) == '=' ? make(TokenKind::Le, 2) : make(TokenKind::Lt, 1);
            case '>':
                return peek(1) == '=' ? make(TokenKind::Ge, 2) : make(TokenKind::Gt, 1);
            case '=':
                return peek(1) == '=' ? make(TokenKind::EqEq, 2) : make(TokenKind::Eq, 1);
            default:
                fail(1);
        }
    }

    // digits [ "." digits ] [ ("e"|"E") [sign] digits ]
    Token number() {
        const std::size_t start = pos_;
        std::size_t i = pos_;
        while (i < in_.size() && is_digit(in_[i])) ++i;
        if (i + 1 < in_.size() && in_[i] == '.' && is_digit(in_[i + 1])) {
            ++i;
            while (i < in_.size() && is_digit(in_[i])) ++i;
        }
        if (i < in_.size() && (in_[i] == 'e' || in_[i] == 'E')) {
            std::size_t j = i + 1;
            if (j < in_.size() && (in_[j] == '+' || in_[j] == '-')) ++j;
            if (j >= in_.size() || !is_digit(in_[j])) throw LexError(start, std::string(in_.substr(start, j - start)));
            while (j < in_.size() && is_digit(in_[j])) ++j;
            i = j;
        }
        if (i < in_.size() && (is_alpha(in_[i]) || in_[i] == '_'))
            throw LexError(start, std::string(in_.substr(start, i + 1 - start)));
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(in_.data() + start, in_.data() + i, value);
        if (ec != std::errc() || ptr != in_.data() + i)
            throw LexError(start, std::string(in_.substr(start, i - start)));
        Token t = make(TokenKind::Number, i - start);
        t.number = value;
        return t;
    }

    Token word() {
        std::size_t i = pos_;
        while (i < in_.size() && is_word_char(in_[i])) ++i;
        const std::string_view text = in_.substr(pos_, i - pos_);
        if (text == "given") return make(TokenKind::KwGiven, text.size());
        if (text == "equality_iff") return make(TokenKind::KwEqualityIff, text.size());
        if (text == "and") return make(TokenKind::KwAnd, text.size());
        if (text == "or") return make(TokenKind::KwOr, text.size());
        if (text == "X") return make(TokenKind::Universal, 1);
        if (text == "O") return make(TokenKind::Empty, 1);
        if (text.find('_') != std::string_view::npos) fail(text.size());
        if (std::isupper(static_cast<unsigned char>(text[0])))
            return make(TokenKind::SetVar, text.size());
        return make(TokenKind::DegreeVar, text.size());
    }

    std::string_view in_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<Token> tokenize(std::string_view input) { return Lexer(input).run(); }

}  // namespace fuzzyrel
