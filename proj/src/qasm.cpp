// SPDX-License-Identifier: Apache-2.0
#include "spinsim/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

namespace spinsim::qasm {

namespace {

std::string format_angle(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string emit(const Circuit& c, bool measure_all) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "qreg q[" << c.n_qubits() << "];\n";
    out << "creg c[" << c.n_qubits() << "];\n";
    for (const Gate& g : c.gates()) {
        switch (g.kind) {
            case GateKind::Id:
                out << "id q[" << g.qubit << "];\n";
                break;
            case GateKind::X:
                out << "x q[" << g.qubit << "];\n";
                break;
            case GateKind::SX:
                out << "sx q[" << g.qubit << "];\n";
                break;
            case GateKind::RZ:
                out << "rz(" << format_angle(g.phi) << ") q[" << g.qubit << "];\n";
                break;
            case GateKind::U3:
                out << "u3(" << format_angle(g.theta) << "," << format_angle(g.phi) << ","
                    << format_angle(g.lambda) << ") q[" << g.qubit << "];\n";
                break;
            case GateKind::CX:
                out << "cx q[" << g.qubit << "],q[" << g.target << "];\n";
                break;
        }
    }
    if (measure_all)
        for (int q = 0; q < c.n_qubits(); ++q)
            out << "measure q[" << q << "] -> c[" << q << "];\n";
    return out.str();
}

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("qasm:" + std::to_string(line) + ":" + std::to_string(column) + ": " +
                         message),
      line(line),
      column(column) {}

namespace {

enum class Tok { Ident, Number, String, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    double number = 0.0;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        skip_space_and_comments();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= src_.size()) return t;
        const char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Tok::Ident;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                t.text.push_back(advance());
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            t.kind = Tok::Number;
            while (pos_ < src_.size() &&
                   (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
                t.text.push_back(advance());
            if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
                t.text.push_back(advance());
                if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-'))
                    t.text.push_back(advance());
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    t.text.push_back(advance());
            }
            std::size_t consumed = 0;
            try {
                t.number = std::stod(t.text, &consumed);
            } catch (...) {
                throw ParseError(t.line, t.col, "malformed number '" + t.text + "'");
            }
            if (consumed != t.text.size())
                throw ParseError(t.line, t.col, "malformed number '" + t.text + "'");
            return t;
        }
        if (c == '"') {
            t.kind = Tok::String;
            advance();
            while (pos_ < src_.size() && src_[pos_] != '"') t.text.push_back(advance());
            if (pos_ >= src_.size()) throw ParseError(t.line, t.col, "unterminated string");
            advance();
            return t;
        }
        t.kind = Tok::Punct;
        t.text.push_back(advance());
        // Two-character arrow.
        if (t.text == "-" && pos_ < src_.size() && src_[pos_] == '>') t.text.push_back(advance());
        return t;
    }

private:
    char advance() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& src) : lexer_(src) { shift(); }

    Circuit parse_program() {
        expect_ident("OPENQASM");
        if (cur_.kind != Tok::Number || cur_.text != "2.0")
            throw ParseError(cur_.line, cur_.col, "expected version 2.0");
        shift();
        expect_punct(";");
        // Declarations and statements; a single qreg is required before use.
        std::vector<Gate> gates;
        while (cur_.kind != Tok::End) {
            if (cur_.kind != Tok::Ident)
                throw ParseError(cur_.line, cur_.col, "expected a statement");
            const Token head = cur_;
            shift();
            if (head.text == "include") {
                if (cur_.kind != Tok::String)
                    throw ParseError(cur_.line, cur_.col, "expected file string after include");
                shift();
                expect_punct(";");
            } else if (head.text == "qreg") {
                if (!qreg_name_.empty())
                    throw ParseError(head.line, head.col, "only one qreg is supported");
                auto [name, size] = parse_decl();
                qreg_name_ = name;
                qreg_size_ = size;
            } else if (head.text == "creg") {
                auto [name, size] = parse_decl();
                creg_name_ = name;
                creg_size_ = size;
            } else if (head.text == "measure") {
                parse_measure();
            } else {
                parse_gate(head, gates);
            }
        }
        if (qreg_name_.empty()) throw ParseError(1, 1, "missing qreg declaration");
        Circuit c(qreg_size_);
        c.append(gates);
        return c;
    }

private:
    void shift() { cur_ = lexer_.next(); }

    void expect_ident(const std::string& name) {
        if (cur_.kind != Tok::Ident || cur_.text != name)
            throw ParseError(cur_.line, cur_.col, "expected '" + name + "'");
        shift();
    }

    void expect_punct(const std::string& p) {
        if (cur_.kind != Tok::Punct || cur_.text != p)
            throw ParseError(cur_.line, cur_.col, "expected '" + p + "'");
        shift();
    }

    std::pair<std::string, int> parse_decl() {
        if (cur_.kind != Tok::Ident)
            throw ParseError(cur_.line, cur_.col, "expected register name");
        const std::string name = cur_.text;
        shift();
        expect_punct("[");
        if (cur_.kind != Tok::Number)
            throw ParseError(cur_.line, cur_.col, "expected register size");
        const int size = int(cur_.number);
        if (size < 1) throw ParseError(cur_.line, cur_.col, "register size must be >= 1");
        shift();
        expect_punct("]");
        expect_punct(";");
        return {name, size};
    }

    int parse_qubit_ref() {
        if (cur_.kind != Tok::Ident || cur_.text != qreg_name_ || qreg_name_.empty())
            throw ParseError(cur_.line, cur_.col, "expected qubit reference to the declared qreg");
        shift();
        expect_punct("[");
        if (cur_.kind != Tok::Number)
            throw ParseError(cur_.line, cur_.col, "expected qubit index");
        const Token idx = cur_;
        const int q = int(idx.number);
        if (q < 0 || q >= qreg_size_)
            throw ParseError(idx.line, idx.col, "qubit index out of range");
        shift();
        expect_punct("]");
        return q;
    }

    void parse_measure() {
        parse_qubit_ref();
        expect_punct("->");
        if (cur_.kind != Tok::Ident || (creg_name_.empty() ? true : cur_.text != creg_name_))
            throw ParseError(cur_.line, cur_.col, "expected classical register reference");
        shift();
        expect_punct("[");
        if (cur_.kind != Tok::Number)
            throw ParseError(cur_.line, cur_.col, "expected bit index");
        const int b = int(cur_.number);
        if (b < 0 || b >= creg_size_)
            throw ParseError(cur_.line, cur_.col, "classical bit index out of range");
        shift();
        expect_punct("]");
        expect_punct(";");
        // Terminal measurements carry no circuit semantics here.
    }

    // Angle grammar: expr := term (('+'|'-') term)*,
    // term := factor (('*'|'/') factor)*, factor := number | pi | (expr) |
    // unary +-.
    double parse_expr() {
        double v = parse_term();
        while (cur_.kind == Tok::Punct && (cur_.text == "+" || cur_.text == "-")) {
            const bool plus = cur_.text == "+";
            shift();
            const double rhs = parse_term();
            v = plus ? v + rhs : v - rhs;
        }
        return v;
    }

    double parse_term() {
        double v = parse_factor();
        while (cur_.kind == Tok::Punct && (cur_.text == "*" || cur_.text == "/")) {
            const bool mul = cur_.text == "*";
            const Token op = cur_;
            shift();
            const double rhs = parse_factor();
            if (!mul && rhs == 0.0) throw ParseError(op.line, op.col, "division by zero");
            v = mul ? v * rhs : v / rhs;
        }
        return v;
    }

    double parse_factor() {
        if (cur_.kind == Tok::Punct && (cur_.text == "-" || cur_.text == "+")) {
            const bool neg = cur_.text == "-";
            shift();
            const double v = parse_factor();
            return neg ? -v : v;
        }
        if (cur_.kind == Tok::Punct && cur_.text == "(") {
            shift();
            const double v = parse_expr();
            expect_punct(")");
            return v;
        }
        if (cur_.kind == Tok::Ident && cur_.text == "pi") {
            shift();
            return std::numbers::pi;
        }
        if (cur_.kind == Tok::Number) {
            const double v = cur_.number;
            shift();
            return v;
        }
        throw ParseError(cur_.line, cur_.col, "malformed angle expression");
    }

    std::vector<double> parse_params(std::size_t arity, const Token& head) {
        std::vector<double> params;
        if (arity == 0) return params;
        if (!(cur_.kind == Tok::Punct && cur_.text == "("))
            throw ParseError(cur_.line, cur_.col,
                             "gate '" + head.text + "' expects a parameter list");
        shift();
        for (std::size_t i = 0; i < arity; ++i) {
            params.push_back(parse_expr());
            if (i + 1 < arity) expect_punct(",");
        }
        expect_punct(")");
        return params;
    }

    void parse_gate(const Token& head, std::vector<Gate>& gates) {
        if (head.text == "id" || head.text == "x" || head.text == "sx") {
            const int q = parse_qubit_ref();
            expect_punct(";");
            gates.push_back(head.text == "id" ? Gate::id(q)
                                              : head.text == "x" ? Gate::x(q) : Gate::sx(q));
        } else if (head.text == "rz") {
            const auto params = parse_params(1, head);
            const int q = parse_qubit_ref();
            expect_punct(";");
            gates.push_back(Gate::rz(q, params[0]));
        } else if (head.text == "u3") {
            const auto params = parse_params(3, head);
            const int q = parse_qubit_ref();
            expect_punct(";");
            gates.push_back(Gate::u3(q, params[0], params[1], params[2]));
        } else if (head.text == "cx") {
            const int control = parse_qubit_ref();
            expect_punct(",");
            const int target = parse_qubit_ref();
            expect_punct(";");
            if (control == target)
                throw ParseError(head.line, head.col, "cx control and target must differ");
            gates.push_back(Gate::cx(control, target));
        } else {
            throw ParseError(head.line, head.col, "unsupported gate '" + head.text + "'");
        }
    }

    Lexer lexer_;
    Token cur_;
    std::string qreg_name_;
    std::string creg_name_;
    int qreg_size_ = 0;
    int creg_size_ = 0;
};

}  // namespace

Circuit parse(const std::string& text) {
    Parser p(text);
    return p.parse_program();
}

}  // namespace spinsim::qasm
