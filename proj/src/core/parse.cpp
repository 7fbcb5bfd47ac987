#include "hdvlab/core/parse.hpp"

#include "hdvlab/core/extension_field.hpp"

#include <cctype>

namespace hdv {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\n");
    return s.substr(b, e - b + 1);
}

/// Splits at the first top-level occurrence of sep.
std::pair<std::string, std::string> split_top(const std::string& s, char sep) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (s[i] == sep && depth == 0) return {trim(s.substr(0, i)), trim(s.substr(i + 1))};
    }
    fail(ErrorKind::ParseError, std::string("expected '") + sep + "' in '" + s + "'");
}

struct Token {
    enum Kind { Num, Ident, Op, End } kind;
    std::string text;
};

class Parser {
   public:
    Parser(const ValuedField& k, const std::string& src, std::string var) : k_(k), src_(src), var_(std::move(var)) {
        tokenize();
    }

    Poly run() {
        require(toks_.size() > 1, ErrorKind::ParseError, "empty expression");
        Poly r = expr();
        require(peek().kind == Token::End, ErrorKind::ParseError, "unexpected '" + peek().text + "' in '" + src_ + "'");
        return r;
    }

   private:
    void tokenize() {
        std::size_t i = 0;
        while (i < src_.size()) {
            char c = src_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t j = i;
                while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
                toks_.push_back({Token::Num, src_.substr(i, j - i)});
                i = j;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t j = i;
                while (j < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_')) ++j;
                toks_.push_back({Token::Ident, src_.substr(i, j - i)});
                i = j;
            } else if (std::string("+-*/^()").find(c) != std::string::npos) {
                toks_.push_back({Token::Op, std::string(1, c)});
                ++i;
            } else {
                fail(ErrorKind::ParseError, std::string("unexpected character '") + c + "' in '" + src_ + "'");
            }
        }
        toks_.push_back({Token::End, "<end>"});
    }

    const Token& peek() const { return toks_[pos_]; }
    bool is_op(const char* op) const { return peek().kind == Token::Op && peek().text == op; }
    Token take() { return toks_[pos_++]; }
    void expect(const char* op) {
        require(is_op(op), ErrorKind::ParseError, std::string("expected '") + op + "' in '" + src_ + "'");
        ++pos_;
    }

    Poly expr() {
        Poly acc = term();
        while (is_op("+") || is_op("-")) {
            bool minus = take().text == "-";
            Poly rhs = term();
            acc = poly_add(acc, minus ? poly_scale(rhs, k_.from_int(-1)) : rhs);
        }
        return acc;
    }

    bool starts_factor() const {
        return peek().kind == Token::Num || peek().kind == Token::Ident || is_op("(");
    }

    Poly term() {
        Poly acc = unary();
        while (true) {
            if (is_op("*")) {
                take();
                acc = poly_mul(acc, unary());
            } else if (is_op("/")) {
                take();
                Poly d = unary();
                require(d.size() == 1, ErrorKind::ParseError, "division by a polynomial in " + var_);
                acc = poly_scale(acc, d[0].inverse());
            } else if (starts_factor()) {
                acc = poly_mul(acc, power());
            } else {
                return acc;
            }
        }
    }

    Poly unary() {
        if (is_op("-")) {
            take();
            return poly_scale(unary(), k_.from_int(-1));
        }
        if (is_op("+")) {
            take();
            return unary();
        }
        return power();
    }

    long long exponent() {
        bool paren = is_op("(");
        if (paren) take();
        bool neg = false;
        if (is_op("-") || is_op("+")) neg = take().text == "-";
        require(peek().kind == Token::Num, ErrorKind::ParseError, "expected an integer exponent in '" + src_ + "'");
        long long e = std::stoll(take().text);
        if (paren) expect(")");
        return neg ? -e : e;
    }

    Poly power() {
        Poly base = atom();
        if (!is_op("^")) return base;
        take();
        long long e = exponent();
        if (base.size() == 1) return Poly{base[0].pow(e)};
        require(e >= 0, ErrorKind::ParseError, "negative power of " + var_);
        Poly r{k_.one()};
        for (long long i = 0; i < e; ++i) r = poly_mul(r, base);
        return r;
    }

    Poly atom() {
        const Token t = take();
        if (t.kind == Token::Num) return Poly{k_.from_mpz(mpz_class(t.text))};
        if (t.kind == Token::Ident) {
            if (!var_.empty() && t.text == var_) return Poly{k_.zero(), k_.one()};
            FieldElement x;
            require(k_.resolve_symbol(t.text, x), ErrorKind::ParseError,
                    "unknown symbol '" + t.text + "' in " + k_.descriptor());
            return Poly{x};
        }
        if (t.kind == Token::Op && t.text == "(") {
            Poly r = expr();
            expect(")");
            return r;
        }
        fail(ErrorKind::ParseError, "unexpected '" + t.text + "' in '" + src_ + "'");
    }

    const ValuedField& k_;
    std::string src_;
    std::string var_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

FieldElement parse_element(const ValuedField& k, const std::string& expr) {
    Poly r = Parser(k, expr, "").run();
    if (r.empty()) return k.zero();
    return k.coerce(r[0]);
}

Poly parse_poly(const ValuedField& k, const std::string& expr, const std::string& var) {
    Poly r = Parser(k, expr, var).run();
    for (auto& c : r) c = k.coerce(c);
    while (r.size() > 1 && r.back().is_exact_zero()) r.pop_back();
    return r;
}

FieldPtr parse_field(const std::string& raw, int precision) {
    std::string text = trim(raw);
    auto open = text.find('(');
    require(open != std::string::npos && !text.empty() && text.back() == ')', ErrorKind::ParseError,
            "bad field descriptor '" + text + "'");
    std::string head = trim(text.substr(0, open));
    std::string body = trim(text.substr(open + 1, text.size() - open - 2));
    if (head == "padic") {
        require(!body.empty() && body.find_first_not_of("0123456789") == std::string::npos, ErrorKind::ParseError,
                "padic: expected a prime, got '" + body + "'");
        return make_padic(static_cast<unsigned>(std::stoul(body)), precision);
    }
    if (head == "laurent") return make_laurent(ResidueField::parse(body), precision);
    if (head == "eis" || head == "ext") {
        auto [b, f] = split_top(body, ',');
        FieldPtr base = parse_field(b, precision);
        Poly poly = parse_poly(*base, f);
        std::string label = head + "(" + base->descriptor() + ", " + f + ")";
        if (head == "eis") return EisensteinField::create(base, std::move(poly), label);
        return ExtensionField::create(base, std::move(poly), label);
    }
    if (head == "gauss") {
        auto [b, vs] = split_top(body, ';');
        FieldPtr base = parse_field(b, precision);
        std::vector<std::string> vars;
        std::string cur;
        for (char c : vs + ",") {
            if (c == ',') {
                if (!trim(cur).empty()) vars.push_back(trim(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        return make_gauss(base, vars);
    }
    fail(ErrorKind::ParseError, "unknown field model '" + head + "'");
}

}  // namespace hdv
